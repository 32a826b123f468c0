#include "ldmac/rational.hpp"

#include <charconv>
#include <cstdlib>
#include <stdexcept>

namespace ldmac {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  *this = from_wide(num, den);
}

Rational Rational::from_wide(__int128 num, __int128 den) {
  if (den == 0) throw std::domain_error("division by zero");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const __int128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  constexpr __int128 lim = INT64_MAX;
  if (num > lim || num < -lim || den > lim) throw std::overflow_error("rational overflow");
  Rational r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  return *this = from_wide(static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_,
                           static_cast<__int128>(den_) * o.den_);
}

Rational& Rational::operator-=(const Rational& o) {
  return *this = from_wide(static_cast<__int128>(num_) * o.den_ - static_cast<__int128>(o.num_) * den_,
                           static_cast<__int128>(den_) * o.den_);
}

Rational& Rational::operator*=(const Rational& o) {
  return *this = from_wide(static_cast<__int128>(num_) * o.num_, static_cast<__int128>(den_) * o.den_);
}

Rational& Rational::operator/=(const Rational& o) {
  return *this = from_wide(static_cast<__int128>(num_) * o.den_, static_cast<__int128>(den_) * o.num_);
}

std::int64_t floor(const Rational& r) {
  std::int64_t q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
  return q;
}

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    throw std::invalid_argument("not a rational number: '" + std::string(whole) + "'");
  return v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  if (s.empty()) throw std::invalid_argument("empty rational");

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    const auto den = parse_int(s.substr(slash + 1), text);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(parse_int(s.substr(0, slash), text), den);
  }

  bool negative = false;
  if (s.front() == '-' || s.front() == '+') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  auto dot = s.find('.');
  std::string_view int_part = s.substr(0, dot);
  std::string_view frac_part = dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
  if (int_part.empty() && frac_part.empty()) throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
  if (frac_part.size() > 15) throw std::invalid_argument("too many decimal digits in '" + std::string(text) + "'");

  std::int64_t scale = 1;
  for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
  const std::int64_t whole = int_part.empty() ? 0 : parse_int(int_part, text);
  const std::int64_t frac = frac_part.empty() ? 0 : parse_int(frac_part, text);
  if (whole < 0 || frac < 0) throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
  Rational r(whole * scale + frac, scale);
  return negative ? -r : r;
}

std::string to_exact_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string to_decimal_string(const Rational& r, int digits) {
  const bool negative = r < 0;
  const Rational a = negative ? -r : r;
  std::int64_t scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;

  // Round half up on the magnitude using 128-bit intermediates.
  const __int128 num = a.numerator();
  const __int128 den = a.denominator();
  const __int128 scaled = (num * scale * 2 + den) / (den * 2);
  const auto whole = static_cast<std::int64_t>(scaled / scale);
  auto frac = static_cast<std::int64_t>(scaled % scale);

  std::string out = (negative && scaled != 0) ? "-" : "";
  out += std::to_string(whole);
  if (frac != 0) {
    std::string f = std::to_string(frac);
    f.insert(0, static_cast<std::size_t>(digits) - f.size(), '0');
    while (!f.empty() && f.back() == '0') f.pop_back();
    out += "." + f;
  }
  return out;
}

}  // namespace ldmac
