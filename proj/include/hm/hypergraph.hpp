#ifndef HM_HYPERGRAPH_HPP
#define HM_HYPERGRAPH_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "hm/rational.hpp"

namespace hm {

using Vertex = std::uint32_t;
using Edge = std::vector<Vertex>;
/// Strictly increasing vertex ids.
using VertexSet = std::vector<Vertex>;

/// Immutable k-uniform hypergraph on vertices 0..n-1.
///
/// Edges are stored flat (m * k ids), each edge strictly increasing, the edge
/// list sorted lexicographically and deduplicated. Only `build` and the
/// generators below construct one, so the canonical form always holds.
class Hypergraph {
 public:
  Hypergraph() = default;

  std::size_t n() const { return n_; }
  std::size_t k() const { return k_; }
  std::size_t num_edges() const { return k_ == 0 ? 0 : flat_.size() / k_; }
  bool empty() const { return flat_.empty(); }

  std::span<const Vertex> edge(std::size_t i) const {
    return {flat_.data() + i * k_, k_};
  }
  Edge edge_vec(std::size_t i) const {
    auto e = edge(i);
    return {e.begin(), e.end()};
  }
  std::vector<Edge> edges() const;

  /// Index of `e` in the sorted edge list, or -1 if absent. `e` must be sorted.
  std::ptrdiff_t find(std::span<const Vertex> e) const;
  bool contains(std::span<const Vertex> e) const { return find(e) >= 0; }

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  friend Hypergraph build(std::size_t, std::size_t, std::vector<Edge>);
  friend Hypergraph from_sorted_unique(std::size_t, std::size_t, std::vector<Vertex>);

  std::size_t n_ = 0;
  std::size_t k_ = 1;
  std::vector<Vertex> flat_;
};

/// Canonicalizes raw edges. Throws NonUniformEdge / VertexOutOfRange.
Hypergraph build(std::size_t n, std::size_t k, std::vector<Edge> raw_edges);

/// Trusted constructor: `flat` already holds sorted, deduplicated, valid edges.
Hypergraph from_sorted_unique(std::size_t n, std::size_t k, std::vector<Vertex> flat);

/// Calls fn on every k-subset of {0..n-1} in lexicographic order.
/// Stops early if fn returns false.
void for_each_combination(std::size_t n, std::size_t k,
                          const std::function<bool(std::span<const Vertex>)>& fn);

/// Rank of a sorted subset in colexicographic order: sum_i C(a_i, i+1).
std::uint64_t colex_rank(std::span<const Vertex> subset);

Hypergraph complete(std::size_t n, std::size_t k);

/// H_k(n,s): all k-sets meeting {0, ..., ceil(s)-2}.
Hypergraph extremal(std::size_t n, std::size_t k, const Rational& s);

/// Size of the cover set used by `extremal`: ceil(s) - 1.
std::size_t extremal_cover_size(const Rational& s);

struct Link {
  Hypergraph graph;
  /// id_map[new_id] = original id.
  std::vector<Vertex> id_map;
};

/// N_H(S) as a (k-|S|)-graph on V(H)\S, relabeled to 0..n-|S|-1 in id order.
Link link(const Hypergraph& h, const VertexSet& s);

/// d_H(S) = number of edges containing S.
std::size_t degree(const Hypergraph& h, const VertexSet& s);

struct MinDegree {
  std::size_t value = 0;
  VertexSet witness;
};

/// delta_d(H) with the lexicographically least minimizing d-set.
MinDegree min_d_degree(const Hypergraph& h, std::size_t d);

/// Edge list of H plus every edge in `extra` (sorted ids), re-canonicalized.
Hypergraph with_edges(const Hypergraph& h, const std::vector<Edge>& extra);

}  // namespace hm

#endif
