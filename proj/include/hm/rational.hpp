#ifndef HM_RATIONAL_HPP
#define HM_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <type_traits>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace hm {

using Integer = mpz_class;

/// Exact rational in lowest terms with a positive denominator.
///
/// Thin value wrapper over GMP's mpq_class. Every constructor and operator
/// leaves the value canonical, so equality is structural.
class Rational {
 public:
  Rational() = default;
  template <std::integral T>
  Rational(T value) : q_(Integer(wide(value))) {}  // NOLINT(implicit)
  Rational(const Integer& value) : q_(value) {}  // NOLINT(implicit)
  Rational(const Integer& num, const Integer& den);
  Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

  /// Accepts "p/q" or a bare integer "p"; throws Error(Parse) otherwise.
  static Rational parse(std::string_view text);

  template <std::integral T>
  static auto wide(T v) {
    if constexpr (std::is_signed_v<T>) {
      return static_cast<long>(v);
    } else {
      return static_cast<unsigned long>(v);
    }
  }

  Integer numerator() const { return q_.get_num(); }
  Integer denominator() const { return q_.get_den(); }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Integer floor() const;
  Integer ceil() const;

  /// Always "p/q", including integers ("2/1").
  std::string str() const;

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    Rational r;
    r.q_ = -a.q_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.q_, b.q_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return q_; }

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

/// Binomial coefficient with C(a, b) = 0 whenever b < 0 or a < b (a may be negative).
Integer binomial(long a, long b);

/// Binomial into 64 bits; throws Error(TooLarge) on overflow.
std::uint64_t binomial_u64(std::uint64_t a, std::uint64_t b);

/// Converts an Integer to int64, throwing Error(TooLarge) if it does not fit.
std::int64_t to_int64(const Integer& value);

}  // namespace hm

#endif
