#include "hm/reduction.hpp"

#include <algorithm>
#include <numeric>

#include "hm/certificate.hpp"
#include "hm/error.hpp"
#include "hm/lp.hpp"
#include "hm/sweep.hpp"

namespace hm {

namespace {

constexpr std::uint64_t kMaxExpansionCandidates = 50'000'000;

std::vector<std::string> to_strings(const VertexWeighting& w) {
  std::vector<std::string> out;
  for (const auto& x : w.weights) out.push_back(x.str());
  return out;
}

}  // namespace

Hypergraph tight_expansion(const Hypergraph& h, const VertexWeighting& w) {
  if (w.n() != h.n()) throw Error(ErrorKind::InvalidParams, "weighting size differs from n");
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    if (edge_sum(w, h.edge(i)) < Rational(1)) {
      throw Error(ErrorKind::NotACover, "weighting does not cover every edge");
    }
  }
  if (binomial_u64(h.n(), h.k()) > kMaxExpansionCandidates) {
    throw Error(ErrorKind::TooLarge, "too many k-sets for tight_expansion");
  }
  const Rational one(1);
  std::vector<Vertex> flat;
  Rational sum;
  for_each_combination(h.n(), h.k(), [&](std::span<const Vertex> c) {
    sum = 0;
    for (Vertex v : c) sum += w[v];
    if (sum >= one) flat.insert(flat.end(), c.begin(), c.end());
    return true;
  });
  return from_sorted_unique(h.n(), h.k(), std::move(flat));
}

RescaleResult bottom_d_rescale(const VertexWeighting& w, std::size_t d, std::size_t k) {
  if (d < 1 || d + 1 > k) throw Error(ErrorKind::InvalidParams, "rescale requires 1 <= d <= k-1");
  if (w.n() < k) throw Error(ErrorKind::InvalidParams, "rescale requires n >= k");

  std::vector<Vertex> order(w.n());
  std::iota(order.begin(), order.end(), Vertex{0});
  std::ranges::stable_sort(order, [&](Vertex a, Vertex b) { return w[a] > w[b]; });

  VertexSet bottom(order.end() - static_cast<std::ptrdiff_t>(d), order.end());
  std::ranges::sort(bottom);
  Rational w0;
  for (Vertex v : bottom) w0 += w[v];
  w0 /= Rational(d);

  const Rational kw0 = Rational(k) * w0;
  if (kw0 >= Rational(1)) {
    return EarlyExit{bottom, w0, Rational(w.n()) * w0};
  }
  Rescaled out{bottom, w0, VertexWeighting(w.n())};
  const Rational scale = Rational(1) - kw0;
  for (Vertex v = 0; v < w.n(); ++v) {
    const bool in_bottom = std::ranges::binary_search(bottom, v);
    out.rescaled[v] = in_bottom ? Rational(0) : (w[v] - w0) / scale;
  }
  return out;
}

LinkCheck link_cover_check(const Hypergraph& h_omega, const VertexSet& s,
                           const VertexWeighting& w2) {
  const Link lk = link(h_omega, s);
  const Rational one(1);
  Rational sum;
  for (std::size_t i = 0; i < lk.graph.num_edges(); ++i) {
    sum = 0;
    for (Vertex v : lk.graph.edge(i)) sum += w2[lk.id_map[v]];
    if (sum < one) {
      Edge original;
      for (Vertex v : lk.graph.edge(i)) original.push_back(lk.id_map[v]);
      return {false, original};
    }
  }
  return {};
}

LinkFloor link_floor(const Hypergraph& h, std::size_t d, std::uint64_t budget) {
  if (d < 1 || d + 1 > h.k()) throw Error(ErrorKind::InvalidParams, "link_floor requires 1 <= d <= k-1");
  const std::uint64_t sets = binomial_u64(h.n(), d);
  if (sets > budget || sets * std::max<std::uint64_t>(h.num_edges(), 1) > budget) {
    throw Error(ErrorKind::TooLarge, "link_floor exceeds its budget");
  }
  std::vector<VertexSet> all;
  for_each_combination(h.n(), d, [&](std::span<const Vertex> c) {
    all.emplace_back(c.begin(), c.end());
    return true;
  });
  if (all.empty()) return {Rational(0), {}};
  const auto values = link_values_parallel(h, all);
  std::size_t arg = 0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] < values[arg]) arg = i;
  }
  return {values[arg], all[arg]};
}

bool Walkthrough::passed() const {
  return std::ranges::all_of(checks, [](const Check& c) { return c.pass; });
}

Walkthrough proof_walkthrough(const Hypergraph& h, std::size_t d, std::uint64_t budget) {
  if (d < 1 || d + 1 > h.k()) throw Error(ErrorKind::InvalidParams, "walkthrough requires 1 <= d <= k-1");
  Walkthrough t;
  t.d = d;
  auto check = [&](std::string name, bool pass) { t.checks.push_back({std::move(name), pass}); };

  const Rational n_over_k(static_cast<long>(h.n()), static_cast<long>(h.k()));
  const LPOutcome base = nu_frac(h);
  t.nu_prime_h = base.value;
  t.cover = base.dual;
  check("cover_is_minimum", is_fractional_cover(h, t.cover) && t.cover.size() == base.value);

  const Hypergraph h_omega = tight_expansion(h, t.cover);
  t.h_omega_edges = h_omega.num_edges();
  bool contained = true;
  for (std::size_t i = 0; i < h.num_edges() && contained; ++i) contained = h_omega.contains(h.edge(i));
  check("expansion_contains_H", contained);
  t.nu_prime_h_omega = nu_frac(h_omega).value;
  check("nu_prime_preserved", t.nu_prime_h_omega == t.nu_prime_h);

  t.floor = link_floor(h, d, budget);
  const Rational total = t.cover.size();
  check("cover_size_le_n_over_k", total <= n_over_k);

  const RescaleResult step = bottom_d_rescale(t.cover, d, h.k());
  if (const auto* exit = std::get_if<EarlyExit>(&step)) {
    t.early_exit = true;
    t.bottom = exit->bottom;
    t.w0 = exit->w0;
    t.final_bound = exit->bound;
    check("early_exit_bound_ge_n_over_k", exit->bound >= n_over_k);
  } else {
    const auto& r = std::get<Rescaled>(step);
    t.bottom = r.bottom;
    t.w0 = r.w0;
    t.w2 = r.rescaled;
    t.final_bound = r.rescaled.size();
    bool zero_on_bottom = true, nonnegative = true;
    for (Vertex v = 0; v < h.n(); ++v) {
      if (std::ranges::binary_search(t.bottom, v) && r.rescaled[v].sign() != 0) zero_on_bottom = false;
      if (r.rescaled[v].sign() < 0) nonnegative = false;
    }
    check("w2_zero_on_S", zero_on_bottom);
    check("w2_nonnegative", nonnegative);

    t.link_check = link_cover_check(h_omega, t.bottom, r.rescaled);
    check("link_cover", t.link_check->pass);
    t.link_mu = nu_frac(link(h_omega, t.bottom).graph).value;
    check("w2_size_ge_link_mu", t.final_bound >= *t.link_mu);
    const Rational link_in_h = nu_frac(link(h, t.bottom).graph).value;
    check("link_mu_ge_floor", *t.link_mu >= link_in_h && link_in_h >= t.floor.value);
    // k w0 * sum(omega) <= k w0 * (n/k) = n w0 is what gives sum(w2) <= sum(omega).
    check("k_w0_total_le_n_w0",
          Rational(h.k()) * t.w0 * total <= Rational(h.n()) * t.w0);
  }
  check("final_bound_le_nu_prime", t.final_bound <= t.nu_prime_h);
  check("nu_prime_ge_min_floor_n_over_k", t.nu_prime_h >= min(t.floor.value, n_over_k));
  return t;
}

ordered_json to_json(const Walkthrough& t) {
  ordered_json j;
  j["d"] = t.d;
  j["cover"] = to_strings(t.cover);
  j["H_omega_edges"] = t.h_omega_edges;
  j["nu_prime_H"] = t.nu_prime_h.str();
  j["nu_prime_H_omega"] = t.nu_prime_h_omega.str();
  j["link_floor"] = {{"value", t.floor.value.str()}, {"witness", t.floor.witness}};
  j["branch"] = t.early_exit ? "early_exit" : "rescale";
  j["S"] = t.bottom;
  j["w0"] = t.w0.str();
  j["w2"] = t.w2 ? ordered_json(to_strings(*t.w2)) : ordered_json(nullptr);
  if (t.link_check) {
    ordered_json lc;
    lc["pass"] = t.link_check->pass;
    lc["violation"] = t.link_check->violation ? ordered_json(*t.link_check->violation)
                                              : ordered_json(nullptr);
    j["link_check"] = lc;
  } else {
    j["link_check"] = nullptr;
  }
  j["link_mu"] = t.link_mu ? ordered_json(t.link_mu->str()) : ordered_json(nullptr);
  j["final_bound"] = t.final_bound.str();
  j["checks"] = ordered_json::array();
  for (const auto& c : t.checks) j["checks"].push_back({{"name", c.name}, {"pass", c.pass}});
  j["passed"] = t.passed();
  return j;
}

}  // namespace hm
