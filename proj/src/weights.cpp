#include "hm/weights.hpp"

namespace hm {

Rational EdgeWeighting::size() const {
  Rational total;
  for (const auto& [e, w] : weights) total += w;
  return total;
}

Rational EdgeWeighting::at(const Edge& e) const {
  auto it = weights.find(e);
  return it == weights.end() ? Rational(0) : it->second;
}

Rational VertexWeighting::size() const {
  Rational total;
  for (const auto& w : weights) total += w;
  return total;
}

Rational edge_sum(const VertexWeighting& w, std::span<const Vertex> e) {
  Rational total;
  for (Vertex v : e) total += w[v];
  return total;
}

VertexWeighting indicator(std::size_t n, std::size_t count) {
  VertexWeighting w(n);
  for (std::size_t v = 0; v < count && v < n; ++v) w.weights[v] = 1;
  return w;
}

}  // namespace hm
