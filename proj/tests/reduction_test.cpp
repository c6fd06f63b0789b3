#include <gtest/gtest.h>

#include <random>

#include "hm/certificate.hpp"
#include "hm/enumerate.hpp"
#include "hm/error.hpp"
#include "hm/lp.hpp"
#include "hm/random.hpp"
#include "hm/reduction.hpp"

using namespace hm;

TEST(TightExpansion, Examples) {
  EXPECT_EQ(tight_expansion(complete(6, 3), VertexWeighting(6, Rational(1, 3))), complete(6, 3));
  const Hypergraph ext = extremal(6, 3, Rational(2));
  EXPECT_EQ(tight_expansion(ext, indicator(6, 1)), ext);
}

TEST(TightExpansion, RejectsNonCover) {
  try {
    tight_expansion(complete(5, 3), VertexWeighting(5, Rational(1, 4)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotACover);
  }
}

TEST(TightExpansion, PreservesNuPrimeWithMinimumCover) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Hypergraph h = random_graph(7, 3, Rational(seed % 3 + 1, 4), seed);
    const LPOutcome lp = nu_frac(h);
    const Hypergraph ho = tight_expansion(h, lp.dual);
    for (std::size_t i = 0; i < h.num_edges(); ++i) EXPECT_TRUE(ho.contains(h.edge(i)));
    EXPECT_EQ(nu_frac(ho).value, lp.value);
  }
}

TEST(TightExpansion, MonotoneInCover) {
  const Hypergraph h = build(6, 3, {});
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    std::mt19937_64 gen(seed);
    VertexWeighting lo(6), hi(6);
    for (Vertex v = 0; v < 6; ++v) {
      lo[v] = Rational(static_cast<long>(gen() % 4), 4);
      hi[v] = lo[v] + Rational(static_cast<long>(gen() % 2), 4);
      if (hi[v] > Rational(1)) hi[v] = Rational(1);
    }
    const Hypergraph a = tight_expansion(h, lo), b = tight_expansion(h, hi);
    for (std::size_t i = 0; i < a.num_edges(); ++i) EXPECT_TRUE(b.contains(a.edge(i)));
  }
}

TEST(BottomRescale, EarlyExitOnUniformCover) {
  for (std::size_t d = 1; d < 4; ++d) {
    const auto r = bottom_d_rescale(VertexWeighting(8, Rational(1, 4)), d, 4);
    ASSERT_TRUE(std::holds_alternative<EarlyExit>(r));
    EXPECT_EQ(std::get<EarlyExit>(r).w0, Rational(1, 4));
    EXPECT_EQ(std::get<EarlyExit>(r).bound, Rational(2));
  }
}

TEST(BottomRescale, IndicatorTrace) {
  const auto r = bottom_d_rescale(indicator(6, 1), 2, 3);
  ASSERT_TRUE(std::holds_alternative<Rescaled>(r));
  const auto& res = std::get<Rescaled>(r);
  EXPECT_EQ(res.bottom, (VertexSet{4, 5}));
  EXPECT_EQ(res.w0, Rational(0));
  EXPECT_EQ(res.rescaled, indicator(6, 1));
}

TEST(BottomRescale, DistinctWeightsPickSmallest) {
  VertexWeighting w(5);
  const long vals[] = {3, 0, 4, 1, 2};
  for (Vertex v = 0; v < 5; ++v) w[v] = Rational(vals[v], 20);
  const auto r = bottom_d_rescale(w, 2, 3);
  const auto& res = std::get<Rescaled>(r);
  EXPECT_EQ(res.bottom, (VertexSet{1, 3}));
  EXPECT_EQ(res.w0, Rational(1, 40));
  // (3/20 - 1/40) / (1 - 3/40) = (5/40) / (37/40)
  EXPECT_EQ(res.rescaled[0], Rational(5, 37));
}

TEST(BottomRescale, TiesBreakByLargerIdsLast) {
  const auto r = bottom_d_rescale(VertexWeighting(5), 2, 3);
  const auto& res = std::get<Rescaled>(r);
  EXPECT_EQ(res.bottom, (VertexSet{3, 4}));
  EXPECT_THROW(bottom_d_rescale(VertexWeighting(5), 0, 3), Error);
  EXPECT_THROW(bottom_d_rescale(VertexWeighting(5), 3, 3), Error);
}

TEST(LinkCoverCheck, Cases) {
  const Hypergraph ext = extremal(6, 3, Rational(2));
  EXPECT_TRUE(link_cover_check(ext, {4, 5}, indicator(6, 1)).pass);
  EXPECT_TRUE(link_cover_check(build(6, 3, {}), {4, 5}, VertexWeighting(6)).pass);
  const LinkCheck fail = link_cover_check(ext, {4, 5}, VertexWeighting(6));
  EXPECT_FALSE(fail.pass);
  EXPECT_EQ(fail.violation, (Edge{0}));
}

TEST(LinkFloor, Examples) {
  const LinkFloor c = link_floor(complete(6, 3), 1);
  EXPECT_EQ(c.value, Rational(5, 2));
  EXPECT_EQ(c.witness, (VertexSet{0}));
  const LinkFloor e = link_floor(extremal(6, 3, Rational(2)), 1);
  EXPECT_EQ(e.value, Rational(1));
  EXPECT_EQ(e.witness, (VertexSet{1}));
  EXPECT_EQ(link_floor(build(5, 3, {}), 1).value, Rational(0));
  EXPECT_THROW(link_floor(complete(6, 3), 1, 10), Error);
}

TEST(Walkthrough, Complete) {
  const Walkthrough t = proof_walkthrough(complete(6, 3), 1);
  EXPECT_TRUE(t.passed());
  EXPECT_EQ(t.nu_prime_h, Rational(2));
  EXPECT_EQ(t.nu_prime_h_omega, Rational(2));
}

TEST(Walkthrough, Extremal) {
  const Walkthrough t = proof_walkthrough(extremal(6, 3, Rational(2)), 2);
  EXPECT_TRUE(t.passed());
  EXPECT_FALSE(t.early_exit);
  EXPECT_EQ(t.cover, indicator(6, 1));
  EXPECT_EQ(t.bottom, (VertexSet{4, 5}));
  EXPECT_EQ(t.final_bound, Rational(1));
  EXPECT_EQ(t.nu_prime_h, Rational(1));
}

TEST(Walkthrough, UniformCoverTakesEarlyExit) {
  // K_4^(3)'s unique minimum cover is uniform 1/3.
  const Walkthrough t = proof_walkthrough(complete(4, 3), 1);
  EXPECT_EQ(t.cover, VertexWeighting(4, Rational(1, 3)));
  EXPECT_TRUE(t.early_exit);
  EXPECT_EQ(t.final_bound, Rational(4, 3));
  EXPECT_TRUE(t.passed());
}

TEST(Walkthrough, RandomInstancesPass) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const std::size_t k = 3 + seed % 2;
    const Hypergraph h = random_graph(7, k, Rational(1, 2), seed);
    for (std::size_t d = 1; d < k; ++d) {
      const Walkthrough t = proof_walkthrough(h, d);
      EXPECT_TRUE(t.passed()) << to_json(t).dump();
    }
  }
}

TEST(Walkthrough, JsonFields) {
  const ordered_json j = to_json(proof_walkthrough(extremal(6, 3, Rational(2)), 2));
  for (const char* key : {"cover", "H_omega_edges", "nu_prime_H", "nu_prime_H_omega", "branch", "S",
                          "w0", "w2", "link_check", "final_bound"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["branch"], "rescale");
  EXPECT_EQ(j["H_omega_edges"], 10);
  EXPECT_EQ(j["w0"], "0/1");
}
