#ifndef HM_RANDOM_HPP
#define HM_RANDOM_HPP

#include <cstdint>

#include "hm/hypergraph.hpp"

namespace hm {

/// G^(k)(n, p): every k-subset of {0..n-1}, visited in lexicographic order,
/// is kept independently with probability p = a/b.
///
/// Generator: std::mt19937_64 seeded with `seed` (its output sequence is fixed
/// by the C++ standard). Each candidate edge consumes one or more draws x;
/// draws at or above the largest multiple of b not exceeding 2^64 are
/// rejected, then the edge is kept iff (x mod b) < a. No distribution objects
/// are used, so the output is identical on every conforming platform.
///
/// Requires 0 <= p <= 1 and a denominator below 2^63.
Hypergraph random_graph(std::size_t n, std::size_t k, const Rational& p, std::uint64_t seed);

}  // namespace hm

#endif
