#ifndef HM_ENUMERATE_HPP
#define HM_ENUMERATE_HPP

#include <cstdint>
#include <iterator>
#include <vector>

#include "hm/hypergraph.hpp"

namespace hm {

using EdgeMask = std::uint64_t;

/// Default bound on C(n,k) for exhaustive enumeration (2^24 hypergraphs).
inline constexpr std::size_t kDefaultEdgeCap = 24;
/// Hard limit imposed by the 64-bit edge mask.
inline constexpr std::size_t kMaxUniverse = 62;

/// All k-subsets of {0..n-1} in lexicographic order, indexed 0..size-1.
///
/// A hypergraph on the universe is an EdgeMask whose bit i selects edge i, so
/// counting masks upward visits hypergraphs in lexicographic bitmask order.
/// Precomputes the incidence masks that the sweep kernels need.
class EdgeUniverse {
 public:
  EdgeUniverse(std::size_t n, std::size_t k, std::size_t edge_cap = kDefaultEdgeCap);

  std::size_t n() const { return n_; }
  std::size_t k() const { return k_; }
  std::size_t size() const { return edges_.size(); }
  /// Number of hypergraphs, 2^size().
  std::uint64_t count() const { return std::uint64_t{1} << edges_.size(); }

  const Edge& edge(std::size_t i) const { return edges_[i]; }
  /// Vertex bitmask of edge i.
  std::uint64_t vertex_mask(std::size_t i) const { return vertex_masks_[i]; }
  /// Edges vertex-disjoint from edge i.
  EdgeMask disjoint_from(std::size_t i) const { return disjoint_[i]; }
  /// Edges containing vertex v.
  EdgeMask incident_to(Vertex v) const { return incident_[v]; }

  Hypergraph materialize(EdgeMask mask) const;
  EdgeMask mask_of(const Hypergraph& h) const;

  /// d-sets in lexicographic order with the mask of edges containing each.
  struct DegreeTable {
    std::vector<VertexSet> sets;
    std::vector<EdgeMask> containing;
  };
  DegreeTable degree_table(std::size_t d) const;

 private:
  std::size_t n_;
  std::size_t k_;
  std::vector<Edge> edges_;
  std::vector<std::uint64_t> vertex_masks_;
  std::vector<EdgeMask> disjoint_;
  std::vector<EdgeMask> incident_;
};

/// delta_d of a masked hypergraph; index of the lexicographically least minimizer in `witness`.
std::size_t min_d_degree(const EdgeUniverse::DegreeTable& table, EdgeMask mask,
                         std::size_t* witness = nullptr);

/// True iff the masked hypergraph has `size` pairwise disjoint edges.
bool has_matching(const EdgeUniverse& u, EdgeMask mask, std::size_t size);

/// True iff some set of `size` vertices meets every edge of the mask.
bool has_vertex_cover(const EdgeUniverse& u, EdgeMask mask, std::size_t size);

/// Half-open range of hypergraph indices (masks) [begin, end).
struct MaskRange {
  std::uint64_t begin = 0;
  std::uint64_t end = 0;
};

/// Splits [0, total) into `parts` contiguous ranges of near-equal length.
std::vector<MaskRange> partition(std::uint64_t total, std::size_t parts);

/// Stream of every k-graph on n vertices, lexicographic bitmask order.
/// Throws TooLarge if C(n,k) exceeds the edge cap.
class Enumeration {
 public:
  Enumeration(std::size_t n, std::size_t k, std::size_t edge_cap = kDefaultEdgeCap);
  Enumeration(const EdgeUniverse& universe, MaskRange range);

  class iterator {
   public:
    using value_type = Hypergraph;
    using difference_type = std::ptrdiff_t;
    iterator() = default;
    iterator(const EdgeUniverse* u, EdgeMask m) : u_(u), mask_(m) {}
    Hypergraph operator*() const { return u_->materialize(mask_); }
    iterator& operator++() { ++mask_; return *this; }
    iterator operator++(int) { auto t = *this; ++mask_; return t; }
    bool operator==(const iterator& o) const { return mask_ == o.mask_; }
    EdgeMask mask() const { return mask_; }

   private:
    const EdgeUniverse* u_ = nullptr;
    EdgeMask mask_ = 0;
  };

  iterator begin() const { return {&universe_, range_.begin}; }
  iterator end() const { return {&universe_, range_.end}; }
  std::uint64_t size() const { return range_.end - range_.begin; }
  const EdgeUniverse& universe() const { return universe_; }

 private:
  EdgeUniverse universe_;
  MaskRange range_;
};

inline Enumeration enumerate_all(std::size_t n, std::size_t k,
                                 std::size_t edge_cap = kDefaultEdgeCap) {
  return Enumeration(n, k, edge_cap);
}

}  // namespace hm

#endif
