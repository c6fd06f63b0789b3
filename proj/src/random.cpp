#include "hm/random.hpp"

#include <limits>
#include <random>

#include "hm/error.hpp"

namespace hm {

Hypergraph random_graph(std::size_t n, std::size_t k, const Rational& p, std::uint64_t seed) {
  if (k == 0 || k > n) throw Error(ErrorKind::InvalidParams, "random_graph requires 0 < k <= n");
  if (p.sign() < 0 || p > Rational(1)) {
    throw Error(ErrorKind::InvalidParams, "edge probability must lie in [0,1]");
  }
  const Integer den = p.denominator();
  if (!mpz_fits_slong_p(den.get_mpz_t())) {
    throw Error(ErrorKind::InvalidParams, "edge probability denominator too large");
  }
  const auto b = static_cast<std::uint64_t>(den.get_si());
  const auto a = static_cast<std::uint64_t>(p.numerator().get_si());
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  // Accept x <= limit, where limit + 1 is the largest multiple of b <= 2^64.
  const std::uint64_t limit = kMax - (kMax % b + 1) % b;

  std::mt19937_64 gen(seed);
  std::vector<Vertex> flat;
  for_each_combination(n, k, [&](std::span<const Vertex> c) {
    std::uint64_t x = gen();
    while (x > limit) x = gen();
    if (x % b < a) flat.insert(flat.end(), c.begin(), c.end());
    return true;
  });
  return from_sorted_unique(n, k, std::move(flat));
}

}  // namespace hm
