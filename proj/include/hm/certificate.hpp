#ifndef HM_CERTIFICATE_HPP
#define HM_CERTIFICATE_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "hm/hypergraph.hpp"
#include "hm/io.hpp"
#include "hm/weights.hpp"

namespace hm {

struct Certificate {
  EdgeWeighting matching;
  VertexWeighting cover;
};

struct Verdict {
  bool matching_feasible = false;
  bool cover_feasible = false;
  Rational matching_size;
  Rational cover_size;
  /// Both feasible and equal sizes: weak duality then pins nu' = mu = that value.
  bool optimal = false;
  /// First violated vertex / edge, for diagnostics.
  std::optional<Vertex> overloaded_vertex;
  std::optional<Edge> uncovered_edge;
  std::string reason;
};

/// Checks f as a fractional matching and w as a fractional cover of h.
/// Throws InvalidCertificate if f names a non-edge or w has the wrong length.
Verdict certify(const Hypergraph& h, const EdgeWeighting& f, const VertexWeighting& w);

bool is_fractional_matching(const Hypergraph& h, const EdgeWeighting& f,
                            std::optional<Vertex>* violation = nullptr);
bool is_fractional_cover(const Hypergraph& h, const VertexWeighting& w,
                         std::optional<Edge>* violation = nullptr);

/// {"matching":[{"edge":[..],"weight":"p/q"}],"cover":[{"vertex":v,"weight":"p/q"}]}
/// Only nonzero matching weights are written; the cover lists every vertex.
ordered_json to_json(const Certificate& c);
/// Vertices missing from "cover" weigh zero. Unknown edges, out-of-range or
/// repeated keys throw InvalidCertificate; malformed JSON throws Parse.
Certificate certificate_from_json(const nlohmann::json& j, const Hypergraph& h);

ordered_json to_json(const Verdict& v);

/// Certificate for nu'(H_k(n,s)) = ceil(s)-1: c = ceil(s)-1 disjoint edges
/// {i} ∪ {c+i(k-1), ..., c+i(k-1)+k-2}, each meeting the cover set exactly in
/// i, paired with the indicator cover of {0..c-1}.
Certificate extremal_certificate(std::size_t n, std::size_t k, const Rational& s);

}  // namespace hm

#endif
