// Test-only reference computations, kept independent of the library's
// solver paths.
#ifndef HM_TESTS_ORACLES_HPP
#define HM_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

#include "hm/hypergraph.hpp"
#include "hm/rational.hpp"

namespace hm::oracle {

/// Pascal's triangle, no closed forms; 0 when b > a or a < 0.
inline std::int64_t pascal(long a, long b) {
  if (a < 0 || b < 0 || b > a) return 0;
  std::vector<std::vector<std::int64_t>> t(a + 1);
  for (long i = 0; i <= a; ++i) {
    t[i].assign(i + 1, 1);
    for (long j = 1; j < i; ++j) t[i][j] = t[i - 1][j - 1] + t[i - 1][j];
  }
  return t[a][b];
}

/// Edges of h containing every vertex of s, by direct scan.
inline std::size_t count_containing(const Hypergraph& h, const std::vector<Vertex>& s) {
  std::size_t c = 0;
  for (const auto& e : h.edges()) {
    bool all = true;
    for (Vertex v : s) all = all && std::find(e.begin(), e.end(), v) != e.end();
    c += all;
  }
  return c;
}

/// Minimum over all d-subsets (bitmask enumeration of vertex subsets).
inline std::size_t min_degree_bruteforce(const Hypergraph& h, std::size_t d) {
  std::size_t best = SIZE_MAX;
  for (std::uint32_t m = 0; m < (1u << h.n()); ++m) {
    if (static_cast<std::size_t>(__builtin_popcount(m)) != d) continue;
    std::vector<Vertex> s;
    for (Vertex v = 0; v < h.n(); ++v) {
      if (m >> v & 1) s.push_back(v);
    }
    best = std::min(best, count_containing(h, s));
  }
  return best;
}

/// nu(H) by trying every subset of edges (m <= ~20).
inline std::size_t nu_bruteforce(const Hypergraph& h) {
  const auto edges = h.edges();
  std::size_t best = 0;
  for (std::uint32_t m = 0; m < (1u << edges.size()); ++m) {
    std::uint64_t used = 0;
    bool ok = true;
    for (std::size_t i = 0; i < edges.size() && ok; ++i) {
      if (!(m >> i & 1)) continue;
      for (Vertex v : edges[i]) {
        if (used >> v & 1) ok = false;
        used |= std::uint64_t{1} << v;
      }
    }
    if (ok) best = std::max<std::size_t>(best, __builtin_popcount(m));
  }
  return best;
}

/// Fractional matching number of a graph (k = 2) via the deficiency formula
///   nu'(G) = (n - max_S (i(G - S) - |S|)) / 2,
/// i(.) counting isolated vertices, S over all vertex subsets (S = {} included).
inline Rational nu_frac_graph_deficiency(const Hypergraph& g) {
  const std::size_t n = g.n();
  long worst = 0;
  const auto edges = g.edges();
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    long isolated = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (m >> v & 1) continue;
      bool has_neighbor = false;
      for (const auto& e : edges) {
        const Vertex other = e[0] == v ? e[1] : (e[1] == v ? e[0] : v);
        if (other != v && !(m >> other & 1)) has_neighbor = true;
      }
      isolated += !has_neighbor;
    }
    worst = std::max(worst, isolated - static_cast<long>(__builtin_popcount(m)));
  }
  return Rational(static_cast<long>(n) - worst, 2);
}

}  // namespace hm::oracle

#endif
