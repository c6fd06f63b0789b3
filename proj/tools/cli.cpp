#include "cli.hpp"

#include <algorithm>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hm/certificate.hpp"
#include "hm/enumerate.hpp"
#include "hm/error.hpp"
#include "hm/io.hpp"
#include "hm/lp.hpp"
#include "hm/matching.hpp"
#include "hm/random.hpp"
#include "hm/reduction.hpp"
#include "hm/sweep.hpp"
#include "hm/threshold.hpp"

namespace hm::cli {

namespace {

/// Raised for failed verifications so they share the error-JSON path.
struct VerificationFailure {
  std::string message;
};

struct Options {
  std::size_t workers = 0;
  std::size_t edge_cap = kDefaultEdgeCap;
  std::uint64_t node_cap = kDefaultNodeCap;
  std::uint64_t seed = 0;

  std::string family, program;
  long n = 0, k = 0, d = 0;
  std::string s = "1", p = "1/2";
  std::string input = "-", output = "-", cert, csv, grid, map_out, format = "json", mode = "fractional";
  std::string subset;
};

void emit(const std::string& path, const std::string& content, std::ostream& out) {
  if (path == "-") {
    out << content;
  } else {
    write_file(path, content);
  }
}

Hypergraph load(const std::string& path) { return read_graph(read_file(path)); }

VertexSet parse_subset(const std::string& text) {
  VertexSet s;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      const long v = std::stol(item, &used);
      if (used != item.size() || v < 0) throw std::invalid_argument(item);
      s.push_back(static_cast<Vertex>(v));
    } catch (const std::exception&) {
      throw Error(ErrorKind::Parse, "bad vertex id '" + item + "' in -S");
    }
  }
  std::ranges::sort(s);
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
    throw Error(ErrorKind::InvalidParams, "-S repeats a vertex");
  }
  return s;
}

std::size_t as_size(long v, const char* name) {
  if (v < 0) throw Error(ErrorKind::InvalidParams, std::string(name) + " must be nonnegative");
  return static_cast<std::size_t>(v);
}

GraphFormat graph_format(const std::string& f) {
  if (f == "json") return GraphFormat::Json;
  if (f == "text") return GraphFormat::Text;
  throw Error(ErrorKind::Parse, "format must be json or text");
}

int cmd_gen(const Options& o, std::ostream& out) {
  const auto n = as_size(o.n, "n"), k = as_size(o.k, "k");
  Hypergraph h;
  if (o.family == "complete") {
    h = complete(n, k);
  } else if (o.family == "extremal") {
    h = extremal(n, k, Rational::parse(o.s));
  } else if (o.family == "random") {
    h = random_graph(n, k, Rational::parse(o.p), o.seed);
  } else {
    throw Error(ErrorKind::Parse, "unknown family '" + o.family + "'");
  }
  emit(o.output, write_graph(h, graph_format(o.format)), out);
  return kOk;
}

int cmd_solve(const Options& o, std::ostream& out) {
  const Hypergraph h = load(o.input);
  if (o.program == "nu-frac" || o.program == "mu") {
    const LPOutcome lp = nu_frac(h);
    out << lp.value.str() << "\n";
    if (!o.cert.empty()) emit(o.cert, to_json(Certificate{lp.primal, lp.dual}).dump() + "\n", out);
    return kOk;
  }
  if (o.program == "nu") {
    const IntegralMatching m = nu_integral(h, o.node_cap);
    out << m.size << "\n";
    if (!o.cert.empty()) {
      ordered_json j;
      j["matching"] = ordered_json::array();
      for (const auto& e : m.edges) j["matching"].push_back({{"edge", e}, {"weight", "1/1"}});
      j["cover"] = ordered_json::array();
      emit(o.cert, j.dump() + "\n", out);
    }
    return kOk;
  }
  throw Error(ErrorKind::Parse, "solve expects nu-frac, mu or nu");
}

int cmd_certify(const Options& o, std::ostream& out) {
  const Hypergraph h = load(o.input);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_file(o.cert));
  } catch (const nlohmann::json::parse_error& ex) {
    throw Error(ErrorKind::Parse, std::string("certificate: ") + ex.what());
  }
  const Certificate c = certificate_from_json(j, h);
  const Verdict v = certify(h, c.matching, c.cover);
  out << to_json(v).dump() << "\n";
  if (!v.optimal) throw VerificationFailure{"certificate rejected: " + v.reason};
  return kOk;
}

int cmd_link(const Options& o, std::ostream& out) {
  const Hypergraph h = load(o.input);
  const Link lk = link(h, parse_subset(o.subset));
  emit(o.output, write_graph(lk.graph, graph_format(o.format)), out);
  if (!o.map_out.empty()) emit(o.map_out, ordered_json(lk.id_map).dump() + "\n", out);
  return kOk;
}

int cmd_degree(const Options& o, std::ostream& out) {
  const Hypergraph h = load(o.input);
  const MinDegree md = min_d_degree(h, as_size(o.d, "d"));
  ordered_json j;
  j["d"] = o.d;
  j["degree"] = md.value;
  j["witness"] = md.witness;
  out << j.dump() << "\n";
  return kOk;
}

int cmd_walkthrough(const Options& o, std::ostream& out) {
  const Hypergraph h = load(o.input);
  const Walkthrough t = proof_walkthrough(h, as_size(o.d, "d"));
  emit(o.output, to_json(t).dump() + "\n", out);
  if (!t.passed()) throw VerificationFailure{"walkthrough check failed"};
  return kOk;
}

int cmd_floor(const Options& o, std::ostream& out) {
  const Hypergraph h = load(o.input);
  const LinkFloor f = link_floor(h, as_size(o.d, "d"));
  ordered_json j;
  j["d"] = o.d;
  j["floor"] = f.value.str();
  j["witness"] = f.witness;
  out << j.dump() << "\n";
  return kOk;
}

int cmd_formula(const Options& o, std::ostream& out) {
  const Rational s = Rational::parse(o.s);
  Integer value;
  long d = o.d;
  if (o.program == "f") {
    value = f_formula(o.n, o.k, d, s);
  } else if (o.program == "m0") {
    if (!s.is_integer()) throw Error(ErrorKind::InvalidParams, "m0 needs an integer s");
    d = 0;
    value = m0_formula(o.n, o.k, s.numerator().get_si());
  } else {
    throw Error(ErrorKind::Parse, "formula expects f or m0");
  }
  out << value.get_str() << "\n";
  out << to_json(regime(o.n, o.k, d, s)).dump() << "\n";
  return kOk;
}

OracleOptions oracle_options(const Options& o) {
  OracleOptions opt;
  opt.edge_cap = o.edge_cap;
  return opt;
}

int cmd_oracle(const Options& o, std::ostream& out) {
  const ThresholdQuery q{o.n, o.k, o.d, Rational::parse(o.s), parse_mode(o.mode)};
  ThresholdReport r = brute_force_threshold(q, oracle_options(o));
  r.certificate = extremal_report(q);
  out << to_json(r).dump() << "\n";
  if (r.oracle && r.formula && *r.oracle < *r.formula) {
    throw VerificationFailure{"oracle below the lower-bound formula"};
  }
  return kOk;
}

int cmd_scan(const Options& o, std::ostream& out) {
  nlohmann::json grid;
  try {
    grid = nlohmann::json::parse(read_file(o.grid));
  } catch (const nlohmann::json::parse_error& ex) {
    throw Error(ErrorKind::Parse, std::string("grid: ") + ex.what());
  }
  const auto reports = scan(parse_grid(grid), oracle_options(o));
  emit(o.output, reports_jsonl(reports), out);
  if (!o.csv.empty()) emit(o.csv, reports_csv(reports), out);
  for (const auto& r : reports) {
    if (r.oracle && r.formula && *r.oracle < *r.formula) {
      throw VerificationFailure{"oracle below the lower-bound formula"};
    }
  }
  return kOk;
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::TooLarge: return kTooLarge;
    case ErrorKind::NotACover:
    case ErrorKind::InvalidCertificate: return kVerificationFailed;
    default: return kUsage;
  }
}

void report_error(std::ostream& err, std::string_view kind, const std::string& message) {
  ordered_json j;
  j["error"] = kind;
  j["message"] = message;
  err << j.dump() << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact fractional matchings and degree thresholds in k-uniform hypergraphs", "hm"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--workers", o.workers, "Parallel workers (default: HM_WORKERS or all cores)");
  app.add_option("--edge-cap", o.edge_cap, "Max C(n,k) for exhaustive enumeration");
  app.add_option("--node-cap", o.node_cap, "Branch-and-bound node budget");

  auto add_nk = [&](CLI::App* sub) {
    sub->add_option("-n", o.n, "Vertex count")->required();
    sub->add_option("-k", o.k, "Uniformity")->required();
  };

  auto* gen = app.add_subcommand("gen", "Generate a hypergraph");
  gen->add_option("family", o.family, "complete | extremal | random")->required();
  add_nk(gen);
  gen->add_option("-s", o.s, "Matching size (extremal), p/q");
  gen->add_option("-p", o.p, "Edge probability (random), p/q");
  gen->add_option("--seed", o.seed, "Seed (random)");
  gen->add_option("-o", o.output, "Output file, - for stdout");
  gen->add_option("--format", o.format, "json | text");

  auto* solve = app.add_subcommand("solve", "Solve nu', mu or nu");
  solve->add_option("program", o.program, "nu-frac | mu | nu")->required();
  solve->add_option("-i", o.input, "Hypergraph file, - for stdin");
  solve->add_option("-c", o.cert, "Write the certificate here");

  auto* cert = app.add_subcommand("certify", "Check a matching/cover certificate");
  cert->add_option("-i", o.input, "Hypergraph file");
  cert->add_option("-c", o.cert, "Certificate file")->required();

  auto* lnk = app.add_subcommand("link", "Emit the link N_H(S)");
  lnk->add_option("-i", o.input, "Hypergraph file");
  lnk->add_option("-S", o.subset, "Comma-separated vertex ids")->required();
  lnk->add_option("-o", o.output, "Output file");
  lnk->add_option("--map", o.map_out, "Write the new->old id map here");
  lnk->add_option("--format", o.format, "json | text");

  auto* deg = app.add_subcommand("degree", "Minimum d-degree with witness");
  deg->add_option("-i", o.input, "Hypergraph file");
  deg->add_option("-d", o.d, "d")->required();

  auto* walk = app.add_subcommand("walkthrough", "Run the link reduction on one instance");
  walk->add_option("-i", o.input, "Hypergraph file");
  walk->add_option("-d", o.d, "d")->required();
  walk->add_option("-o", o.output, "Trace output file");

  auto* flr = app.add_subcommand("floor", "Minimum nu' over all d-set links");
  flr->add_option("-i", o.input, "Hypergraph file");
  flr->add_option("-d", o.d, "d")->required();

  auto* form = app.add_subcommand("formula", "Closed-form threshold with regime flags");
  form->add_option("program", o.program, "f | m0")->required();
  add_nk(form);
  form->add_option("-d", o.d, "d (f only)");
  form->add_option("-s", o.s, "Matching size, p/q")->required();

  auto* orc = app.add_subcommand("oracle", "Brute-force threshold by enumeration");
  add_nk(orc);
  orc->add_option("-d", o.d, "d");
  orc->add_option("-s", o.s, "Matching size, p/q")->required();
  orc->add_option("--mode", o.mode, "fractional | integral");

  auto* scn = app.add_subcommand("scan", "Threshold reports over a grid file");
  scn->add_option("-g", o.grid, "Grid JSON file")->required();
  scn->add_option("-o", o.output, "JSONL output");
  scn->add_option("--csv", o.csv, "CSV output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    report_error(err, "UsageError", e.what());
    return kUsage;
  }

  try {
    set_worker_count(o.workers);
    if (*gen) return cmd_gen(o, out);
    if (*solve) return cmd_solve(o, out);
    if (*cert) return cmd_certify(o, out);
    if (*lnk) return cmd_link(o, out);
    if (*deg) return cmd_degree(o, out);
    if (*walk) return cmd_walkthrough(o, out);
    if (*flr) return cmd_floor(o, out);
    if (*form) return cmd_formula(o, out);
    if (*orc) return cmd_oracle(o, out);
    if (*scn) return cmd_scan(o, out);
  } catch (const VerificationFailure& f) {
    report_error(err, "VerificationFailed", f.message);
    return kVerificationFailed;
  } catch (const Error& e) {
    report_error(err, to_string(e.kind()), e.what());
    return exit_code(e.kind());
  }
  return kUsage;
}

}  // namespace hm::cli
