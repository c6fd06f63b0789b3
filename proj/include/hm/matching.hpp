#ifndef HM_MATCHING_HPP
#define HM_MATCHING_HPP

#include <cstdint>
#include <vector>

#include "hm/hypergraph.hpp"

namespace hm {

inline constexpr std::uint64_t kDefaultNodeCap = 20'000'000;

struct IntegralMatching {
  std::size_t size = 0;
  std::vector<Edge> edges;
  std::uint64_t nodes = 0;
};

/// nu(H) by include/exclude branch and bound over edges in lexicographic
/// order. Bound: current + min(edges left, free vertices / k). Throws
/// TooLarge once `node_cap` search nodes have been expanded.
IntegralMatching nu_integral(const Hypergraph& h, std::uint64_t node_cap = kDefaultNodeCap);

bool is_matching(const Hypergraph& h, const std::vector<Edge>& edges);

}  // namespace hm

#endif
