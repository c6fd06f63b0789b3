#ifndef HM_WEIGHTS_HPP
#define HM_WEIGHTS_HPP

#include <map>
#include <vector>

#include "hm/hypergraph.hpp"
#include "hm/rational.hpp"

namespace hm {

/// Edge -> weight. Absent edges weigh zero.
struct EdgeWeighting {
  std::map<Edge, Rational> weights;

  Rational size() const;
  Rational at(const Edge& e) const;
  friend bool operator==(const EdgeWeighting&, const EdgeWeighting&) = default;
};

/// Dense vertex -> weight over 0..n-1. Signed on purpose: the rescaled cover
/// built by the reduction is only ever validated on link edges.
struct VertexWeighting {
  std::vector<Rational> weights;

  VertexWeighting() = default;
  explicit VertexWeighting(std::size_t n, const Rational& value = Rational(0))
      : weights(n, value) {}

  std::size_t n() const { return weights.size(); }
  Rational size() const;
  const Rational& operator[](Vertex v) const { return weights[v]; }
  Rational& operator[](Vertex v) { return weights[v]; }
  friend bool operator==(const VertexWeighting&, const VertexWeighting&) = default;
};

/// Sum of w over the vertices of e.
Rational edge_sum(const VertexWeighting& w, std::span<const Vertex> e);

/// Indicator of {0, ..., count-1} on n vertices.
VertexWeighting indicator(std::size_t n, std::size_t count);

}  // namespace hm

#endif
