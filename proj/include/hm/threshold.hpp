#ifndef HM_THRESHOLD_HPP
#define HM_THRESHOLD_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hm/certificate.hpp"
#include "hm/enumerate.hpp"
#include "hm/io.hpp"
#include "hm/sweep.hpp"

namespace hm {

struct ThresholdQuery {
  long n = 0;
  long k = 0;
  long d = 0;
  Rational s;
  MatchingMode mode = MatchingMode::Fractional;
};

/// Throws InvalidParams unless 0 <= d <= k-1, k <= n, 0 < s <= n/k, and s is
/// an integer in integral mode.
void validate(const ThresholdQuery& q);

/// C(n-d, k-d) - C(n-d-(ceil(s)-1), k-d) + 1, with C(a,b) = 0 for a < b.
Integer f_formula(long n, long k, long d, const Rational& s);

/// C(n, k) - C(n-s+1, k) + 1 for an integer 1 <= s <= n/k.
Integer m0_formula(long n, long k, long s);

/// Range predicates and margins. Margins are evaluated at the link scale
/// (k-d, n-d) with ceil(s):
///   margin_f = (n-d) - [(2(k-d)-1) ceil(s) + (k-d)]
///   margin_g = (n-d) - (5(k-d)/3 - 2/3) ceil(s)
struct Regime {
  /// k >= 4, 2k/5 < d <= k-1, n >= 2k^2 and s0 < s <= n/k.
  bool theorem = false;
  /// k-d >= 2 and margin_f >= 0.
  bool frankl = false;
  /// k-d >= 2, ceil(s) >= fk_s0 and margin_g >= 0.
  bool fk = false;
  bool lower_bound_only = true;
  Rational margin_f;
  Rational margin_g;
  /// 0 when d >= k/2, 1 when 2k/5 < d < k/2.
  Rational theorem_s0;
  /// Lower size limit for the 5k/3 range predicate. No value is known for it,
  /// so it is a parameter and always reported as unverified.
  long fk_s0 = 1;
};

Regime regime(long n, long k, long d, const Rational& s, long fk_s0 = 1);

/// Which of the f(d) / g(d) margins the theorem uses for this (k, d).
enum class MarginKind { F, G, None };
MarginKind theorem_margin(long k, long d);

struct ExtremalReport {
  std::size_t edges = 0;
  std::size_t min_degree = 0;
  VertexSet degree_witness;
  Verdict verdict;
  /// min degree == formula - 1 and certify accepted value ceil(s)-1 < s.
  bool verified = false;
};

struct ThresholdReport {
  ThresholdQuery query;
  std::optional<Integer> formula;
  std::optional<Integer> oracle;
  Regime regime;
  std::optional<Hypergraph> witness;
  std::optional<ExtremalReport> certificate;
  std::optional<std::string> error;
};

struct OracleOptions {
  std::size_t edge_cap = kDefaultEdgeCap;
  bool parallel = true;
  bool shortcuts = true;
  long fk_s0 = 1;
};

/// Oracle by definition: 1 + max{delta_d(H) : H lacks a (fractional) matching
/// of size s}, maximized over every k-graph on n vertices; the first maximizer
/// in bitmask order is the witness.
ThresholdReport brute_force_threshold(const ThresholdQuery& q, const OracleOptions& opt = {});

/// Same oracle for several sizes sharing (n, k, d, mode) in one sweep.
std::vector<ThresholdReport> brute_force_thresholds(long n, long k, long d, MatchingMode mode,
                                                    const std::vector<Rational>& sizes,
                                                    const OracleOptions& opt = {});

/// Builds H_k(n,s) at full size and checks it sits one below the formula.
/// Returns nullopt when C(n,k) exceeds `max_edges`.
std::optional<ExtremalReport> extremal_report(const ThresholdQuery& q,
                                              std::uint64_t max_edges = 5'000'000);

struct ScanCell {
  ThresholdQuery query;
  bool oracle = true;
};

/// Parses {"cells":[{n,k,d,s,mode,oracle}...]} or a cartesian product
/// {"n":[..],"k":[..],"d":[..],"s":[..],"mode":..,"oracle":..}.
std::vector<ScanCell> parse_grid(const nlohmann::json& j);

/// One report per cell in input order; errors are recorded per cell.
std::vector<ThresholdReport> scan(const std::vector<ScanCell>& cells,
                                  const OracleOptions& opt = {});

std::string to_string(MatchingMode mode);
MatchingMode parse_mode(const std::string& text);

ordered_json to_json(const ThresholdQuery& q);
ordered_json to_json(const Regime& r);
ordered_json to_json(const ThresholdReport& r);
std::string reports_jsonl(const std::vector<ThresholdReport>& reports);
std::string reports_csv(const std::vector<ThresholdReport>& reports);

}  // namespace hm

#endif
