#include "hm/enumerate.hpp"

#include <bit>
#include <limits>
#include <string>

#include "hm/error.hpp"

namespace hm {

EdgeUniverse::EdgeUniverse(std::size_t n, std::size_t k, std::size_t edge_cap)
    : n_(n), k_(k) {
  if (k == 0 || k > n) throw Error(ErrorKind::InvalidParams, "enumeration requires 0 < k <= n");
  if (n > 64) throw Error(ErrorKind::TooLarge, "enumeration supports at most 64 vertices");
  const std::uint64_t universe = binomial_u64(n, k);
  const std::size_t cap = std::min(edge_cap, kMaxUniverse);
  if (universe > cap) {
    throw Error(ErrorKind::TooLarge, "C(" + std::to_string(n) + "," + std::to_string(k) +
                                         ")=" + std::to_string(universe) +
                                         " exceeds the edge cap " + std::to_string(cap));
  }
  for_each_combination(n, k, [&](std::span<const Vertex> c) {
    edges_.emplace_back(c.begin(), c.end());
    std::uint64_t vm = 0;
    for (Vertex v : c) vm |= std::uint64_t{1} << v;
    vertex_masks_.push_back(vm);
    return true;
  });
  disjoint_.assign(edges_.size(), 0);
  incident_.assign(n, 0);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    for (std::size_t j = 0; j < edges_.size(); ++j) {
      if ((vertex_masks_[i] & vertex_masks_[j]) == 0) disjoint_[i] |= EdgeMask{1} << j;
    }
    for (Vertex v : edges_[i]) incident_[v] |= EdgeMask{1} << i;
  }
}

Hypergraph EdgeUniverse::materialize(EdgeMask mask) const {
  std::vector<Vertex> flat;
  flat.reserve(static_cast<std::size_t>(std::popcount(mask)) * k_);
  while (mask) {
    const int i = std::countr_zero(mask);
    flat.insert(flat.end(), edges_[i].begin(), edges_[i].end());
    mask &= mask - 1;
  }
  return from_sorted_unique(n_, k_, std::move(flat));
}

EdgeMask EdgeUniverse::mask_of(const Hypergraph& h) const {
  if (h.n() != n_ || h.k() != k_) {
    throw Error(ErrorKind::InvalidParams, "hypergraph does not belong to this universe");
  }
  EdgeMask mask = 0;
  std::size_t j = 0;
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    auto e = h.edge(i);
    while (!std::ranges::equal(edges_[j], e)) ++j;
    mask |= EdgeMask{1} << j;
  }
  return mask;
}

EdgeUniverse::DegreeTable EdgeUniverse::degree_table(std::size_t d) const {
  DegreeTable t;
  for_each_combination(n_, d, [&](std::span<const Vertex> c) {
    t.sets.emplace_back(c.begin(), c.end());
    EdgeMask m = 0;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      if (std::ranges::includes(edges_[i], c)) m |= EdgeMask{1} << i;
    }
    t.containing.push_back(m);
    return true;
  });
  return t;
}

std::size_t min_d_degree(const EdgeUniverse::DegreeTable& table, EdgeMask mask,
                         std::size_t* witness) {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::size_t arg = 0;
  for (std::size_t i = 0; i < table.containing.size(); ++i) {
    const auto value = static_cast<std::size_t>(std::popcount(mask & table.containing[i]));
    if (value < best) {
      best = value;
      arg = i;
      if (best == 0) break;
    }
  }
  if (witness) *witness = arg;
  return best;
}

bool has_matching(const EdgeUniverse& u, EdgeMask mask, std::size_t size) {
  if (size == 0) return true;
  if (static_cast<std::size_t>(std::popcount(mask)) < size) return false;
  // Either the lowest edge is in the matching or it is not.
  const int i = std::countr_zero(mask);
  const EdgeMask rest = mask & (mask - 1);
  return has_matching(u, rest & u.disjoint_from(i), size - 1) || has_matching(u, rest, size);
}

namespace {

bool cover_search(const EdgeUniverse& u, EdgeMask uncovered, std::size_t budget) {
  if (uncovered == 0) return true;
  if (budget == 0) return false;
  // Some vertex of the lowest uncovered edge must be chosen.
  const Edge& e = u.edge(std::countr_zero(uncovered));
  for (Vertex v : e) {
    if (cover_search(u, uncovered & ~u.incident_to(v), budget - 1)) return true;
  }
  return false;
}

}  // namespace

bool has_vertex_cover(const EdgeUniverse& u, EdgeMask mask, std::size_t size) {
  return cover_search(u, mask, std::min(size, u.n()));
}

std::vector<MaskRange> partition(std::uint64_t total, std::size_t parts) {
  std::vector<MaskRange> out;
  if (parts == 0) parts = 1;
  const std::uint64_t step = total / parts, extra = total % parts;
  std::uint64_t at = 0;
  for (std::size_t i = 0; i < parts; ++i) {
    const std::uint64_t len = step + (i < extra ? 1 : 0);
    if (len == 0) continue;
    out.push_back({at, at + len});
    at += len;
  }
  return out;
}

Enumeration::Enumeration(std::size_t n, std::size_t k, std::size_t edge_cap)
    : universe_(n, k, edge_cap), range_{0, universe_.count()} {}

Enumeration::Enumeration(const EdgeUniverse& universe, MaskRange range)
    : universe_(universe), range_(range) {}

}  // namespace hm
