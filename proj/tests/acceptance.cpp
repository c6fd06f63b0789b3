// Acceptance runner: one PASS/FAIL line per criterion, report files under argv[1].

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "hm/certificate.hpp"
#include "hm/enumerate.hpp"
#include "hm/hypergraph.hpp"
#include "hm/lp.hpp"
#include "hm/random.hpp"
#include "hm/reduction.hpp"
#include "hm/sweep.hpp"
#include "hm/threshold.hpp"
#include "oracles.hpp"

namespace fs = std::filesystem;
using namespace hm;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

void write(const fs::path& p, const std::string& body) {
  std::ofstream out(p, std::ios::binary);
  out << body;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

/// Checks value == primal size == dual size and that both sides are feasible
/// for h as judged by the certificate checker.
bool exact_duality(const Hypergraph& h, const LPOutcome& lp) {
  if (lp.primal.size() != lp.value || lp.dual.size() != lp.value) return false;
  const Verdict v = certify(h, lp.primal, lp.dual);
  return v.optimal;
}

Outcome strong_duality(const fs::path& dir) {
  Outcome o;
  std::ostringstream report;
  std::size_t exhaustive = 0, random = 0, bad = 0;

  const Enumeration all = enumerate_all(5, 3);
  for (auto it = all.begin(); it != all.end(); ++it) {
    const Hypergraph h = *it;
    const LPOutcome lp = nu_frac(h);
    const bool ok = exact_duality(h, lp);
    bad += !ok;
    ++exhaustive;
    report << "{\"mask\":" << it.mask() << ",\"value\":\"" << lp.value.str() << "\",\"ok\":" << ok << "}\n";
  }

  const Rational probs[] = {Rational(1, 4), Rational(1, 2), Rational(3, 4)};
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const std::size_t k = 1 + seed % 4;
    const std::size_t n = k + (seed / 4) % (11 - k);
    const Rational& p = probs[(seed / 7) % 3];
    const Hypergraph h = random_graph(n, k, p, seed);
    const LPOutcome lp = nu_frac(h);
    const bool ok = exact_duality(h, lp);
    bad += !ok;
    ++random;
    report << "{\"seed\":" << seed << ",\"n\":" << n << ",\"k\":" << k << ",\"p\":\"" << p.str()
           << "\",\"edges\":" << h.num_edges() << ",\"value\":\"" << lp.value.str()
           << "\",\"ok\":" << ok << "}\n";
  }
  write(dir / "strong_duality.jsonl", report.str());
  o.pass = bad == 0 && exhaustive == 1024 && random == 1000;
  o.detail = std::to_string(exhaustive) + " exhaustive + " + std::to_string(random) + " random, " +
             std::to_string(bad) + " mismatches";
  return o;
}

Outcome complete_value() {
  Outcome o;
  std::size_t cases = 0, bad = 0;
  for (std::size_t k = 2; k <= 5; ++k) {
    for (std::size_t n = k; n <= 12; ++n) {
      const Hypergraph h = complete(n, k);
      const LPOutcome lp = nu_frac(h);
      const bool ok = lp.value == Rational(static_cast<long>(n), static_cast<long>(k)) && exact_duality(h, lp);
      if (!ok) {
        bad++;
        o.detail += " (" + std::to_string(n) + "," + std::to_string(k) + ")=" + lp.value.str();
      }
      ++cases;
    }
  }
  o.pass = bad == 0;
  o.detail = std::to_string(cases) + " cases, " + std::to_string(bad) + " wrong" + o.detail;
  return o;
}

Outcome extremal_large() {
  Outcome o;
  const Hypergraph h = extremal(32, 4, Rational(8));
  const auto expected_edges = oracle::pascal(32, 4) - oracle::pascal(25, 4);
  const MinDegree md = min_d_degree(h, 2);
  const Integer f = f_formula(32, 4, 2, Rational(8));
  const auto expected_f = oracle::pascal(30, 2) - oracle::pascal(23, 2) + 1;

  const Certificate c = extremal_certificate(32, 4, Rational(8));
  const Verdict v = certify(h, c.matching, c.cover);
  const bool disjoint = c.matching.weights.size() == 7 && [&] {
    std::vector<bool> used(32, false);
    for (const auto& [e, w] : c.matching.weights) {
      if (w != Rational(1)) return false;
      for (Vertex x : e) {
        if (used[x]) return false;
        used[x] = true;
      }
    }
    return true;
  }();

  o.pass = h.num_edges() == 23310 && h.num_edges() == expected_edges && md.value == 182 &&
           f == 183 && f == Integer(static_cast<long>(expected_f)) && Integer(static_cast<long>(md.value)) == f - 1 &&
           c.cover == indicator(32, 7) && disjoint && v.optimal && v.matching_size == Rational(7) &&
           v.cover_size == Rational(7) && v.matching_size < Rational(8);
  std::ostringstream d;
  d << h.num_edges() << " edges, min 2-degree " << md.value << ", formula " << f.get_str()
    << ", certificate " << (v.optimal ? "accepted" : "rejected") << " at " << v.matching_size.str();
  o.detail = d.str();
  return o;
}

Outcome link_floor_exhaustive(const fs::path& dir) {
  Outcome o;
  std::ostringstream report;
  std::size_t instances = 0, bound_bad = 0, walk_bad = 0;
  const Rational cap(5, 3);
  const Enumeration all = enumerate_all(5, 3);
  for (auto it = all.begin(); it != all.end(); ++it) {
    const Hypergraph h = *it;
    const Rational nu = nu_frac(h).value;
    for (std::size_t d = 1; d <= 2; ++d) {
      const LinkFloor floor = link_floor(h, d);
      const bool bound = nu >= min(floor.value, cap);
      const Walkthrough t = proof_walkthrough(h, d);
      bound_bad += !bound;
      walk_bad += !t.passed();
      ++instances;
      report << "{\"mask\":" << it.mask() << ",\"d\":" << d << ",\"nu_prime\":\"" << nu.str()
             << "\",\"floor\":\"" << floor.value.str() << "\",\"bound\":" << bound
             << ",\"walkthrough\":" << to_json(t).dump() << "}\n";
    }
  }
  write(dir / "link_floor.jsonl", report.str());
  o.pass = instances == 2048 && bound_bad == 0 && walk_bad == 0;
  o.detail = std::to_string(instances) + " instances, " + std::to_string(bound_bad) +
             " bound violations, " + std::to_string(walk_bad) + " failed walkthroughs";
  return o;
}

Outcome lower_bound_exhaustive(const fs::path& dir) {
  Outcome o;
  std::vector<ThresholdReport> all;
  std::size_t cells = 0, bad = 0;
  for (long n = 2; n <= 7; ++n) {
    for (long d = 0; d <= 1; ++d) {
      std::vector<Rational> sizes;
      for (long s = 1; 2 * s <= n; ++s) sizes.emplace_back(s);
      for (auto& r : brute_force_thresholds(n, 2, d, MatchingMode::Fractional, sizes)) {
        const auto expected = oracle::pascal(n - d, 2 - d) -
                              oracle::pascal(n - d - (to_int64(r.query.s.numerator()) - 1), 2 - d) + 1;
        const bool ok = r.oracle && *r.formula == Integer(static_cast<long>(expected)) && *r.oracle >= *r.formula;
        bad += !ok;
        ++cells;
        all.push_back(std::move(r));
      }
    }
  }
  write(dir / "lower_bound.jsonl", reports_jsonl(all));
  o.pass = bad == 0 && cells > 0;
  o.detail = std::to_string(cells) + " cells, " + std::to_string(bad) + " violations";
  return o;
}

Outcome frankl_in_range(const fs::path& dir) {
  Outcome o;
  OracleOptions opt;
  opt.edge_cap = 28;
  const ThresholdQuery q{8, 2, 0, Rational(2), MatchingMode::Integral};
  const ThresholdReport r = brute_force_threshold(q, opt);
  write(dir / "frankl.json", to_json(r).dump() + "\n");

  bool star = false;
  if (r.witness && r.witness->num_edges() == 7) {
    for (Vertex c = 0; c < 8 && !star; ++c) {
      star = true;
      for (std::size_t i = 0; i < 7; ++i) {
        const auto e = r.witness->edge(i);
        star = star && (e[0] == c || e[1] == c);
      }
    }
  }
  const Integer m0 = m0_formula(8, 2, 2);
  const auto expected = oracle::pascal(8, 2) - oracle::pascal(7, 2) + 1;
  o.pass = r.oracle && *r.oracle == 8 && m0 == 8 && m0 == Integer(static_cast<long>(expected)) && star &&
           oracle::nu_bruteforce(*r.witness) == 1;
  o.detail = "oracle " + (r.oracle ? r.oracle->get_str() : std::string("none")) + ", m0 " + m0.get_str() +
             ", witness " + (star ? "7-edge star" : "not a 7-edge star");
  return o;
}

Outcome margin_sweep() {
  Outcome o;
  std::size_t tuples = 0, bad = 0, other_negative = 0;
  for (long k = 4; k <= 12; ++k) {
    for (long n = 2 * k * k; n <= 4 * k * k; ++n) {
      for (long d = 1; d <= k - 1; ++d) {
        if (5 * d <= 2 * k) continue;
        const long s0 = 2 * d >= k ? 0 : 1;
        for (long s = s0 + 1; s * k <= n; ++s) {
          const Regime r = regime(n, k, d, Rational(s));
          // Recomputed here from the definitions, independent of the library.
          const long lk = k - d;
          const Rational f = Rational(n - d - ((2 * lk - 1) * s + lk));
          const Rational g = Rational(n - d) - (Rational(5 * lk, 3) - Rational(2, 3)) * Rational(s);
          const bool f_branch = 2 * d >= k;
          const Rational& used = f_branch ? f : g;
          const bool ok = r.theorem && r.margin_f == f && r.margin_g == g && used.sign() >= 0 &&
                          theorem_margin(k, d) == (f_branch ? MarginKind::F : MarginKind::G);
          bad += !ok;
          other_negative += f_branch ? g.sign() < 0 : f.sign() < 0;
          ++tuples;
        }
      }
    }
  }
  o.pass = bad == 0 && tuples > 0;
  o.detail = std::to_string(tuples) + " tuples, " + std::to_string(bad) +
             " violations of the applicable margin (" + std::to_string(other_negative) +
             " tuples where the other margin is negative)";
  return o;
}

Outcome determinism(const fs::path& dir) {
  const fs::path again = dir / "repeat";
  fs::create_directories(again);
  set_worker_count(3);
  strong_duality(again);
  link_floor_exhaustive(again);
  lower_bound_exhaustive(again);
  set_worker_count(0);
  Outcome o;
  for (const char* name : {"strong_duality.jsonl", "link_floor.jsonl", "lower_bound.jsonl"}) {
    const std::string a = slurp(dir / name), b = slurp(again / name);
    const bool same = !a.empty() && a == b;
    o.pass = o.pass && same;
    o.detail += std::string(o.detail.empty() ? "" : ", ") + name + (same ? " identical" : " differs");
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const fs::path dir = argc > 1 ? fs::path(argv[1]) : fs::path("acceptance_out");
  fs::create_directories(dir);

  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "exact strong duality", [&] { return strong_duality(dir); }},
      {2, "complete-graph value n/k", [] { return complete_value(); }},
      {3, "extremal construction at (32,4,2,8)", [] { return extremal_large(); }},
      {4, "link floor bound and walkthrough, all 3-graphs on 5 vertices", [&] { return link_floor_exhaustive(dir); }},
      {5, "lower bound formula, all 2-graphs on n<=7", [&] { return lower_bound_exhaustive(dir); }},
      {6, "integral threshold at (8,2,0,2)", [&] { return frankl_in_range(dir); }},
      {7, "margin sweep k in [4,12]", [] { return margin_sweep(); }},
      {8, "determinism of report files", [&] { return determinism(dir); }},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += !o.pass;
    std::printf("%s criterion %d: %s: %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
