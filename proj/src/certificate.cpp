#include "hm/certificate.hpp"

#include <set>

#include "hm/error.hpp"

namespace hm {

namespace {

bool in_unit_interval(const Rational& x) { return x.sign() >= 0 && x <= Rational(1); }

}  // namespace

bool is_fractional_matching(const Hypergraph& h, const EdgeWeighting& f,
                            std::optional<Vertex>* violation) {
  std::vector<Rational> load(h.n());
  for (const auto& [e, w] : f.weights) {
    if (!in_unit_interval(w)) {
      if (violation) *violation = e.front();
      return false;
    }
    for (Vertex v : e) load[v] += w;
  }
  for (Vertex v = 0; v < h.n(); ++v) {
    if (load[v] > Rational(1)) {
      if (violation) *violation = v;
      return false;
    }
  }
  return true;
}

bool is_fractional_cover(const Hypergraph& h, const VertexWeighting& w,
                         std::optional<Edge>* violation) {
  for (Vertex v = 0; v < w.n(); ++v) {
    if (!in_unit_interval(w[v])) return false;
  }
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    if (edge_sum(w, h.edge(i)) < Rational(1)) {
      if (violation) *violation = h.edge_vec(i);
      return false;
    }
  }
  return true;
}

Verdict certify(const Hypergraph& h, const EdgeWeighting& f, const VertexWeighting& w) {
  if (w.n() != h.n()) {
    throw Error(ErrorKind::InvalidCertificate, "cover has " + std::to_string(w.n()) +
                                                   " entries, hypergraph has n=" +
                                                   std::to_string(h.n()));
  }
  for (const auto& [e, weight] : f.weights) {
    if (!h.contains(e)) throw Error(ErrorKind::InvalidCertificate, "matching names a non-edge");
  }
  Verdict v;
  v.matching_size = f.size();
  v.cover_size = w.size();
  v.matching_feasible = is_fractional_matching(h, f, &v.overloaded_vertex);
  v.cover_feasible = is_fractional_cover(h, w, &v.uncovered_edge);
  v.optimal = v.matching_feasible && v.cover_feasible && v.matching_size == v.cover_size;
  if (!v.matching_feasible) {
    v.reason = "matching infeasible at vertex " + std::to_string(*v.overloaded_vertex);
  } else if (!v.cover_feasible) {
    v.reason = v.uncovered_edge ? "cover misses an edge" : "cover weight outside [0,1]";
  } else if (!v.optimal) {
    v.reason = "sizes differ";
  }
  return v;
}

ordered_json to_json(const Certificate& c) {
  ordered_json j;
  j["matching"] = ordered_json::array();
  for (const auto& [e, w] : c.matching.weights) {
    if (w.sign() == 0) continue;
    j["matching"].push_back({{"edge", e}, {"weight", w.str()}});
  }
  j["cover"] = ordered_json::array();
  for (Vertex v = 0; v < c.cover.n(); ++v) {
    j["cover"].push_back({{"vertex", v}, {"weight", c.cover[v].str()}});
  }
  return j;
}

Certificate certificate_from_json(const nlohmann::json& j, const Hypergraph& h) {
  Certificate c;
  c.cover = VertexWeighting(h.n());
  try {
    if (!j.is_object() || !j.contains("matching") || !j.contains("cover")) {
      throw Error(ErrorKind::Parse, "certificate JSON needs fields matching, cover");
    }
    for (const auto& entry : j.at("matching")) {
      auto edge = entry.at("edge").get<std::vector<std::int64_t>>();
      Edge e;
      for (auto x : edge) {
        if (x < 0 || static_cast<std::size_t>(x) >= h.n()) {
          throw Error(ErrorKind::InvalidCertificate, "matching edge has out-of-range vertex");
        }
        e.push_back(static_cast<Vertex>(x));
      }
      std::ranges::sort(e);
      if (!h.contains(e)) throw Error(ErrorKind::InvalidCertificate, "matching names a non-edge");
      if (c.matching.weights.contains(e)) {
        throw Error(ErrorKind::InvalidCertificate, "matching lists an edge twice");
      }
      c.matching.weights[e] = Rational::parse(entry.at("weight").get<std::string>());
    }
    std::set<Vertex> seen;
    for (const auto& entry : j.at("cover")) {
      const auto v = entry.at("vertex").get<std::int64_t>();
      if (v < 0 || static_cast<std::size_t>(v) >= h.n()) {
        throw Error(ErrorKind::InvalidCertificate, "cover names an out-of-range vertex");
      }
      if (!seen.insert(static_cast<Vertex>(v)).second) {
        throw Error(ErrorKind::InvalidCertificate, "cover lists a vertex twice");
      }
      c.cover[static_cast<Vertex>(v)] = Rational::parse(entry.at("weight").get<std::string>());
    }
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::Parse, std::string("certificate JSON: ") + ex.what());
  }
  return c;
}

ordered_json to_json(const Verdict& v) {
  ordered_json j;
  j["matching_feasible"] = v.matching_feasible;
  j["cover_feasible"] = v.cover_feasible;
  j["matching_size"] = v.matching_size.str();
  j["cover_size"] = v.cover_size.str();
  j["optimal"] = v.optimal;
  if (v.overloaded_vertex) j["overloaded_vertex"] = *v.overloaded_vertex;
  if (v.uncovered_edge) j["uncovered_edge"] = *v.uncovered_edge;
  return j;
}

Certificate extremal_certificate(std::size_t n, std::size_t k, const Rational& s) {
  const std::size_t c = extremal_cover_size(s);
  if (c * k > n) throw Error(ErrorKind::InvalidParams, "extremal certificate needs ceil(s)-1 <= n/k");
  Certificate cert;
  cert.cover = indicator(n, c);
  for (std::size_t i = 0; i < c; ++i) {
    Edge e{static_cast<Vertex>(i)};
    for (std::size_t j = 0; j + 1 < k; ++j) e.push_back(static_cast<Vertex>(c + i * (k - 1) + j));
    cert.matching.weights[e] = Rational(1);
  }
  return cert;
}

}  // namespace hm
