#include "hm/threshold.hpp"

#include <map>
#include <tuple>

#include "hm/error.hpp"

namespace hm {

namespace {

Rational ratio(long a, long b) { return Rational(a, b); }

std::string query_str(const ThresholdQuery& q) {
  return "(n=" + std::to_string(q.n) + ",k=" + std::to_string(q.k) + ",d=" +
         std::to_string(q.d) + ",s=" + q.s.str() + ")";
}

}  // namespace

void validate(const ThresholdQuery& q) {
  if (q.k < 1 || q.n < q.k) throw Error(ErrorKind::InvalidParams, "need 1 <= k <= n " + query_str(q));
  if (q.d < 0 || q.d > q.k - 1) throw Error(ErrorKind::InvalidParams, "need 0 <= d <= k-1 " + query_str(q));
  if (q.s.sign() <= 0 || q.s > ratio(q.n, q.k)) {
    throw Error(ErrorKind::InvalidParams, "need 0 < s <= n/k " + query_str(q));
  }
  if (q.mode == MatchingMode::Integral && !q.s.is_integer()) {
    throw Error(ErrorKind::InvalidParams, "integral mode needs an integer s " + query_str(q));
  }
}

Integer f_formula(long n, long k, long d, const Rational& s) {
  validate({n, k, d, s, MatchingMode::Fractional});
  const long c = static_cast<long>(to_int64(s.ceil())) - 1;
  return binomial(n - d, k - d) - binomial(n - d - c, k - d) + 1;
}

Integer m0_formula(long n, long k, long s) {
  validate({n, k, 0, Rational(s), MatchingMode::Integral});
  return binomial(n, k) - binomial(n - s + 1, k) + 1;
}

MarginKind theorem_margin(long k, long d) {
  if (2 * d >= k) return MarginKind::F;
  if (5 * d > 2 * k) return MarginKind::G;
  return MarginKind::None;
}

Regime regime(long n, long k, long d, const Rational& s, long fk_s0) {
  Regime r;
  r.fk_s0 = fk_s0;
  const Rational cs(s.ceil());
  const long lk = k - d, ln = n - d;
  r.margin_f = Rational(ln) - (Rational(2 * lk - 1) * cs + Rational(lk));
  r.margin_g = Rational(ln) - (Rational(5 * lk, 3) - Rational(2, 3)) * cs;
  r.theorem_s0 = 2 * d >= k ? Rational(0) : Rational(1);

  const bool in_d_range = 5 * d > 2 * k && d <= k - 1;
  r.theorem = k >= 4 && in_d_range && n >= 2 * k * k && s > r.theorem_s0 && k > 0 &&
              s <= ratio(n, k);
  r.frankl = lk >= 2 && r.margin_f.sign() >= 0;
  r.fk = lk >= 2 && cs >= Rational(fk_s0) && r.margin_g.sign() >= 0;
  r.lower_bound_only = !r.theorem;
  return r;
}

std::optional<ExtremalReport> extremal_report(const ThresholdQuery& q, std::uint64_t max_edges) {
  validate(q);
  if (binomial(q.n, q.k) > Integer(static_cast<unsigned long>(max_edges))) return std::nullopt;
  const auto n = static_cast<std::size_t>(q.n), k = static_cast<std::size_t>(q.k);
  const Hypergraph h = extremal(n, k, q.s);
  const MinDegree md = min_d_degree(h, static_cast<std::size_t>(q.d));
  const Certificate cert = extremal_certificate(n, k, q.s);

  ExtremalReport out;
  out.edges = h.num_edges();
  out.min_degree = md.value;
  out.degree_witness = md.witness;
  out.verdict = certify(h, cert.matching, cert.cover);
  const Rational expected(static_cast<long>(extremal_cover_size(q.s)));
  out.verified = Integer(static_cast<unsigned long>(md.value)) + 1 == f_formula(q.n, q.k, q.d, q.s) &&
                 out.verdict.optimal && out.verdict.cover_size == expected && expected < q.s;
  return out;
}

std::vector<ThresholdReport> brute_force_thresholds(long n, long k, long d, MatchingMode mode,
                                                    const std::vector<Rational>& sizes,
                                                    const OracleOptions& opt) {
  std::vector<ThresholdReport> reports;
  for (const auto& s : sizes) {
    ThresholdReport r;
    r.query = {n, k, d, s, mode};
    validate(r.query);
    r.formula = f_formula(n, k, d, s);
    r.regime = regime(n, k, d, s, opt.fk_s0);
    reports.push_back(std::move(r));
  }
  if (sizes.empty()) return reports;

  const EdgeUniverse u(static_cast<std::size_t>(n), static_cast<std::size_t>(k), opt.edge_cap);
  SweepQuery sq;
  sq.d = static_cast<std::size_t>(d);
  sq.sizes = sizes;
  sq.mode = mode;
  sq.shortcuts = opt.shortcuts;
  const MaskRange all{0, u.count()};
  const auto best = opt.parallel ? sweep_parallel(u, sq, all) : sweep_serial(u, sq, all);
  for (std::size_t t = 0; t < sizes.size(); ++t) {
    if (best[t].degree) {
      reports[t].oracle = Integer(static_cast<unsigned long>(*best[t].degree)) + 1;
      reports[t].witness = u.materialize(best[t].witness);
    } else {
      reports[t].oracle = Integer(0);
    }
  }
  return reports;
}

ThresholdReport brute_force_threshold(const ThresholdQuery& q, const OracleOptions& opt) {
  return brute_force_thresholds(q.n, q.k, q.d, q.mode, {q.s}, opt).front();
}

std::string to_string(MatchingMode mode) {
  return mode == MatchingMode::Fractional ? "fractional" : "integral";
}

MatchingMode parse_mode(const std::string& text) {
  if (text == "fractional") return MatchingMode::Fractional;
  if (text == "integral") return MatchingMode::Integral;
  throw Error(ErrorKind::Parse, "mode must be 'fractional' or 'integral', got '" + text + "'");
}

namespace {

Rational json_rational(const nlohmann::json& v) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  throw Error(ErrorKind::Parse, "s must be an integer or a \"p/q\" string");
}

}  // namespace

std::vector<ScanCell> parse_grid(const nlohmann::json& j) {
  std::vector<ScanCell> cells;
  try {
    if (!j.is_object()) throw Error(ErrorKind::Parse, "grid must be a JSON object");
    const auto mode = parse_mode(j.value("mode", std::string("fractional")));
    const bool oracle = j.value("oracle", true);
    if (j.contains("cells")) {
      for (const auto& c : j.at("cells")) {
        ScanCell cell;
        cell.query = {c.at("n").get<long>(), c.at("k").get<long>(), c.value("d", 0L),
                      json_rational(c.at("s")),
                      c.contains("mode") ? parse_mode(c.at("mode").get<std::string>()) : mode};
        cell.oracle = c.value("oracle", oracle);
        cells.push_back(cell);
      }
      return cells;
    }
    auto list = [&](const char* key) {
      if (!j.contains(key)) throw Error(ErrorKind::Parse, std::string("grid missing '") + key + "'");
      const auto& v = j.at(key);
      return v.is_array() ? v : nlohmann::json::array({v});
    };
    const auto ns = list("n"), ks = list("k"), ds = list("d"), ss = list("s");
    for (const auto& n : ns) {
      for (const auto& k : ks) {
        for (const auto& d : ds) {
          for (const auto& s : ss) {
            cells.push_back({{n.get<long>(), k.get<long>(), d.get<long>(), json_rational(s), mode},
                             oracle});
          }
        }
      }
    }
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::Parse, std::string("grid JSON: ") + ex.what());
  }
  return cells;
}

std::vector<ThresholdReport> scan(const std::vector<ScanCell>& cells, const OracleOptions& opt) {
  std::vector<ThresholdReport> reports(cells.size());
  // Oracle cells sharing (n,k,d,mode) share one sweep.
  std::map<std::tuple<long, long, long, int>, std::vector<std::size_t>> groups;

  for (std::size_t i = 0; i < cells.size(); ++i) {
    auto& r = reports[i];
    r.query = cells[i].query;
    try {
      validate(r.query);
      r.formula = f_formula(r.query.n, r.query.k, r.query.d, r.query.s);
      r.regime = regime(r.query.n, r.query.k, r.query.d, r.query.s, opt.fk_s0);
      r.certificate = extremal_report(r.query);
      if (cells[i].oracle) {
        groups[{r.query.n, r.query.k, r.query.d, static_cast<int>(r.query.mode)}].push_back(i);
      }
    } catch (const Error& e) {
      r.error = std::string(to_string(e.kind())) + ": " + e.what();
    }
  }

  for (const auto& [key, members] : groups) {
    const auto& [n, k, d, mode] = key;
    std::vector<Rational> sizes;
    for (std::size_t i : members) sizes.push_back(cells[i].query.s);
    try {
      auto out = brute_force_thresholds(n, k, d, static_cast<MatchingMode>(mode), sizes, opt);
      for (std::size_t t = 0; t < members.size(); ++t) {
        reports[members[t]].oracle = out[t].oracle;
        reports[members[t]].witness = out[t].witness;
      }
    } catch (const Error& e) {
      for (std::size_t i : members) reports[i].error = std::string(to_string(e.kind())) + ": " + e.what();
    }
  }
  return reports;
}

}  // namespace hm
