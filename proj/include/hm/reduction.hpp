#ifndef HM_REDUCTION_HPP
#define HM_REDUCTION_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hm/hypergraph.hpp"
#include "hm/io.hpp"
#include "hm/weights.hpp"

namespace hm {

/// All k-sets of V(H) whose w-weight is at least 1. Throws NotACover unless
/// w covers H, so E(H) is always contained in the result.
Hypergraph tight_expansion(const Hypergraph& h, const VertexWeighting& w);

/// Mean weight of the bottom d vertices is already >= 1/k.
struct EarlyExit {
  VertexSet bottom;
  Rational w0;
  /// n * w0; at most the total weight and at least n/k.
  Rational bound;
};

struct Rescaled {
  VertexSet bottom;
  Rational w0;
  /// (w'(v) - w0) / (1 - k w0), with w' equal to w off `bottom` and w0 on it.
  VertexWeighting rescaled;
};

using RescaleResult = std::variant<EarlyExit, Rescaled>;

/// Sorts vertices by weight descending (ties by ascending id), takes the last
/// d as S, and rescales unless their mean reaches 1/k.
RescaleResult bottom_d_rescale(const VertexWeighting& w, std::size_t d, std::size_t k);

struct LinkCheck {
  bool pass = true;
  /// First link edge (original ids) whose rescaled weight is below 1.
  std::optional<Edge> violation;
};

/// Checks that w2 covers every edge of N_{H_omega}(S).
LinkCheck link_cover_check(const Hypergraph& h_omega, const VertexSet& s,
                           const VertexWeighting& w2);

struct LinkFloor {
  Rational value;
  VertexSet witness;
};

/// Budget on sum over d-sets of link edges solved by link_floor.
inline constexpr std::uint64_t kDefaultLinkBudget = 50'000'000;

/// min over d-sets S of nu'(N_H(S)); ties go to the lexicographically least S.
LinkFloor link_floor(const Hypergraph& h, std::size_t d,
                     std::uint64_t budget = kDefaultLinkBudget);

struct Walkthrough {
  std::size_t d = 0;
  VertexWeighting cover;
  std::size_t h_omega_edges = 0;
  Rational nu_prime_h;
  Rational nu_prime_h_omega;
  LinkFloor floor;
  bool early_exit = false;
  VertexSet bottom;
  Rational w0;
  std::optional<VertexWeighting> w2;
  std::optional<LinkCheck> link_check;
  /// mu(N_{H_omega}(S)) on the rescale branch.
  std::optional<Rational> link_mu;
  /// Lower bound on nu'(H) delivered by the argument: n*w0 or sum of w2.
  Rational final_bound;

  struct Check {
    std::string name;
    bool pass = false;
  };
  std::vector<Check> checks;

  bool passed() const;
};

/// Runs the whole reduction argument on one instance and records every
/// intermediate value together with the inequalities it relies on.
Walkthrough proof_walkthrough(const Hypergraph& h, std::size_t d,
                              std::uint64_t budget = kDefaultLinkBudget);

ordered_json to_json(const Walkthrough& t);

}  // namespace hm

#endif
