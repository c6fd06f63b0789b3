#include "hm/hypergraph.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "hm/error.hpp"

namespace hm {

namespace {

constexpr std::uint64_t kMaxDegreeTable = std::uint64_t{1} << 27;

std::string edge_str(const Edge& e) {
  std::string s = "[";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(e[i]);
  }
  return s + "]";
}

bool lex_less(std::span<const Vertex> a, std::span<const Vertex> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

std::vector<Edge> Hypergraph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (std::size_t i = 0; i < num_edges(); ++i) out.push_back(edge_vec(i));
  return out;
}

std::ptrdiff_t Hypergraph::find(std::span<const Vertex> e) const {
  if (e.size() != k_) return -1;
  std::size_t lo = 0, hi = num_edges();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (lex_less(edge(mid), e)) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (lo < num_edges() && std::ranges::equal(edge(lo), e)) {
    return static_cast<std::ptrdiff_t>(lo);
  }
  return -1;
}

Hypergraph build(std::size_t n, std::size_t k, std::vector<Edge> raw_edges) {
  if (k == 0) throw Error(ErrorKind::InvalidParams, "uniformity k must be positive");
  for (auto& e : raw_edges) {
    if (e.size() != k) {
      throw Error(ErrorKind::NonUniformEdge,
                  "edge " + edge_str(e) + " has " + std::to_string(e.size()) +
                      " vertices, expected " + std::to_string(k));
    }
    std::ranges::sort(e);
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
      throw Error(ErrorKind::NonUniformEdge, "edge " + edge_str(e) + " repeats a vertex");
    }
    if (e.back() >= n) {
      throw Error(ErrorKind::VertexOutOfRange,
                  "edge " + edge_str(e) + " has a vertex >= n=" + std::to_string(n));
    }
  }
  std::ranges::sort(raw_edges);
  raw_edges.erase(std::unique(raw_edges.begin(), raw_edges.end()), raw_edges.end());

  Hypergraph h;
  h.n_ = n;
  h.k_ = k;
  h.flat_.reserve(raw_edges.size() * k);
  for (const auto& e : raw_edges) h.flat_.insert(h.flat_.end(), e.begin(), e.end());
  return h;
}

Hypergraph from_sorted_unique(std::size_t n, std::size_t k, std::vector<Vertex> flat) {
  Hypergraph h;
  h.n_ = n;
  h.k_ = k;
  h.flat_ = std::move(flat);
  return h;
}

void for_each_combination(std::size_t n, std::size_t k,
                          const std::function<bool(std::span<const Vertex>)>& fn) {
  if (k > n) return;
  std::vector<Vertex> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = static_cast<Vertex>(i);
  while (true) {
    if (!fn(c)) return;
    // Advance to the next combination in lexicographic order.
    std::size_t i = k;
    while (i > 0 && c[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++c[i - 1];
    for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

std::uint64_t colex_rank(std::span<const Vertex> subset) {
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < subset.size(); ++i) r += binomial_u64(subset[i], i + 1);
  return r;
}

Hypergraph complete(std::size_t n, std::size_t k) {
  if (k == 0 || k > n) {
    throw Error(ErrorKind::InvalidParams, "complete(n,k) requires 0 < k <= n");
  }
  std::vector<Vertex> flat;
  flat.reserve(binomial_u64(n, k) * k);
  for_each_combination(n, k, [&](std::span<const Vertex> c) {
    flat.insert(flat.end(), c.begin(), c.end());
    return true;
  });
  return from_sorted_unique(n, k, std::move(flat));
}

std::size_t extremal_cover_size(const Rational& s) {
  if (s.sign() <= 0) throw Error(ErrorKind::InvalidParams, "s must be positive");
  return static_cast<std::size_t>(to_int64(s.ceil()) - 1);
}

Hypergraph extremal(std::size_t n, std::size_t k, const Rational& s) {
  if (k == 0 || k > n) throw Error(ErrorKind::InvalidParams, "extremal requires 0 < k <= n");
  if (s.sign() <= 0 || s > Rational(Integer(static_cast<unsigned long>(n)),
                                    Integer(static_cast<unsigned long>(k)))) {
    throw Error(ErrorKind::InvalidParams, "extremal requires 0 < s <= n/k, got s=" + s.str());
  }
  const std::size_t cover = extremal_cover_size(s);
  std::vector<Vertex> flat;
  for_each_combination(n, k, [&](std::span<const Vertex> c) {
    // Edges are sorted, so the edge meets the cover set iff its first vertex does.
    if (c[0] < cover) flat.insert(flat.end(), c.begin(), c.end());
    return true;
  });
  return from_sorted_unique(n, k, std::move(flat));
}

Link link(const Hypergraph& h, const VertexSet& s) {
  if (s.size() >= h.k()) {
    throw Error(ErrorKind::InvalidParams, "link requires |S| < k");
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] >= h.n()) throw Error(ErrorKind::VertexOutOfRange, "S contains a vertex >= n");
    if (i > 0 && s[i] <= s[i - 1]) {
      throw Error(ErrorKind::InvalidParams, "S must be strictly increasing");
    }
  }
  Link out;
  constexpr Vertex kRemoved = std::numeric_limits<Vertex>::max();
  std::vector<Vertex> relabel(h.n(), kRemoved);
  for (Vertex v = 0, next = 0; v < h.n(); ++v) {
    if (!std::ranges::binary_search(s, v)) {
      relabel[v] = next++;
      out.id_map.push_back(v);
    }
  }
  const std::size_t lk = h.k() - s.size();
  std::vector<Vertex> flat;
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    auto e = h.edge(i);
    if (!std::ranges::includes(e, s)) continue;
    // Relabeling is monotone, so the remaining vertices stay sorted and the
    // edge order restricted to edges containing S stays lexicographic.
    for (Vertex v : e) {
      if (relabel[v] != kRemoved) flat.push_back(relabel[v]);
    }
  }
  out.graph = from_sorted_unique(h.n() - s.size(), lk, std::move(flat));
  return out;
}

std::size_t degree(const Hypergraph& h, const VertexSet& s) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    if (std::ranges::includes(h.edge(i), s)) ++count;
  }
  return count;
}

MinDegree min_d_degree(const Hypergraph& h, std::size_t d) {
  if (d >= h.k()) {
    throw Error(ErrorKind::InvalidParams, "min_d_degree requires 0 <= d <= k-1");
  }
  if (d == 0) return {h.num_edges(), {}};
  if (d > h.n()) return {0, {}};

  const std::uint64_t num_sets = binomial_u64(h.n(), d);
  if (num_sets > kMaxDegreeTable) {
    throw Error(ErrorKind::TooLarge, "too many d-sets for min_d_degree");
  }
  std::vector<std::uint32_t> counts(num_sets, 0);
  std::vector<Vertex> sub(d);
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    auto e = h.edge(i);
    for_each_combination(h.k(), d, [&](std::span<const Vertex> pos) {
      for (std::size_t j = 0; j < d; ++j) sub[j] = e[pos[j]];
      ++counts[colex_rank(sub)];
      return true;
    });
  }
  MinDegree best{std::numeric_limits<std::size_t>::max(), {}};
  for_each_combination(h.n(), d, [&](std::span<const Vertex> c) {
    const std::size_t value = counts[colex_rank(c)];
    if (value < best.value) {
      best.value = value;
      best.witness.assign(c.begin(), c.end());
    }
    return best.value > 0;
  });
  return best;
}

Hypergraph with_edges(const Hypergraph& h, const std::vector<Edge>& extra) {
  auto all = h.edges();
  all.insert(all.end(), extra.begin(), extra.end());
  return build(h.n(), h.k(), std::move(all));
}

}  // namespace hm
