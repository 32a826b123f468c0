#pragma once

// Exact rational arithmetic used for every regime decision and bound value.
// 64-bit numerator/denominator, always reduced with a positive denominator;
// intermediate products are computed in 128 bits and overflow throws.

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ldmac {

class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return from_wide(-static_cast<__int128>(num_), den_); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const __int128 l = static_cast<__int128>(a.num_) * b.den_;
    const __int128 r = static_cast<__int128>(b.num_) * a.den_;
    return l < r ? std::strong_ordering::less : (l > r ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

 private:
  static Rational from_wide(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Largest integer not exceeding r.
std::int64_t floor(const Rational& r);

/// Parses "p/q", an integer, or a plain decimal such as "0.55" into an exact rational.
/// Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

/// "p/q", or just "p" when the denominator is one.
std::string to_exact_string(const Rational& r);

/// Decimal with at most `digits` fractional digits, rounded half away from zero,
/// trailing zeros removed ("1.3", "2", "0.543478260870").
std::string to_decimal_string(const Rational& r, int digits = 12);

inline Rational positive_part(const Rational& r) { return r > Rational(0) ? r : Rational(0); }

}  // namespace ldmac
