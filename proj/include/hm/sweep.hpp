#ifndef HM_SWEEP_HPP
#define HM_SWEEP_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "hm/enumerate.hpp"
#include "hm/hypergraph.hpp"

namespace hm {

enum class MatchingMode { Fractional, Integral };

/// What the threshold sweep looks for: over every k-graph on the universe,
/// the largest delta_d among graphs with no (fractional) matching of size s,
/// one answer per requested s.
struct SweepQuery {
  std::size_t d = 0;
  std::vector<Rational> sizes;
  MatchingMode mode = MatchingMode::Fractional;
  /// Decide nu' < s by integral matching / integral cover certificates before
  /// falling back to the LP. Disabling gives the plain LP-only definition.
  bool shortcuts = true;
};

struct SweepBest {
  /// Largest delta_d seen among graphs lacking the matching; nullopt if none.
  std::optional<std::size_t> degree;
  /// First mask (in bitmask order) attaining `degree`.
  EdgeMask witness = 0;

  friend bool operator==(const SweepBest&, const SweepBest&) = default;
};

struct SweepStats {
  std::uint64_t graphs = 0;
  std::uint64_t lp_solves = 0;
};

/// Reference kernel: one pass over `range` in increasing mask order.
std::vector<SweepBest> sweep_serial(const EdgeUniverse& u, const SweepQuery& q, MaskRange range,
                                    SweepStats* stats = nullptr);

/// OpenMP kernel: splits `range` into chunks, runs the reference kernel on
/// each, and merges in chunk order so the result equals sweep_serial exactly.
std::vector<SweepBest> sweep_parallel(const EdgeUniverse& u, const SweepQuery& q, MaskRange range,
                                      SweepStats* stats = nullptr);

/// nu'(N_H(S)) for every d-set S of H, in lexicographic order of S.
std::vector<Rational> link_values_serial(const Hypergraph& h, const std::vector<VertexSet>& sets);
std::vector<Rational> link_values_parallel(const Hypergraph& h,
                                           const std::vector<VertexSet>& sets);

/// Worker count used by the parallel kernels (HM_WORKERS or OpenMP default).
std::size_t worker_count();
void set_worker_count(std::size_t workers);

}  // namespace hm

#endif
