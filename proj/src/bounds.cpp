#include "ldmac/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace ldmac {

std::int64_t floor_div(const Rational& p, const Rational& q) {
  if (p < 0 || q < 0) throw std::invalid_argument("floor_div: arguments must be nonnegative");
  if (q == 0) return 0;
  return floor(p / q);
}

Rational phi1(const Rational& p, const Rational& q) {
  const std::int64_t l = floor_div(p, q);
  if (l % 2 == 0) return q + Rational(l) * q / 2;
  return p - Rational(l - 1) * q / 2;
}

Rational phi2(const Rational& p, const Rational& q) {
  const std::int64_t l = floor_div(p, q);
  if (l % 2 == 0) return p - Rational(l) * q / 2;
  return Rational(l + 1) * q / 2;
}

Rational ic_sum_capacity(const Rational& n, const Rational& m) {
  const Rational two_sided = std::max(n, m) + positive_part(n - m);
  const Rational genie = 2 * std::max(m, positive_part(n - m));
  return std::min({2 * n, two_sided, genie});
}

SumRateBound sum_rate_bound(const SystemParams& p) {
  const DerivedParams d = derive(p);
  SumRateBound out;
  out.regime = classify(p);
  const Rational n1(p.n1), n2(p.n2), ni(p.ni), delta(d.delta);

  switch (out.regime.branch) {
    case Branch::Weak:
      out.value = n1 + n2 - 2 * ni + phi1(ni, delta);
      out.expression = "n1 + n2 - 2*ni + phi1(ni, Delta)";
      break;
    case Branch::AlignLow:
      out.value = 2 * ni + phi2(n2 - ni, delta);
      out.expression = "2*ni + phi2(n2 - ni, Delta)";
      break;
    case Branch::AlignHigh:
      out.value = 2 * ni + phi2(2 * n1 - 3 * ni, delta);
      out.expression = "2*ni + phi2(2*n1 - 3*ni, Delta)";
      break;
    case Branch::StrongIC:
      out.value = std::min(2 * n1, std::max(n1, ni) + positive_part(n1 - ni));
      out.expression = "min(2*n1, max(n1, ni) + (n1 - ni)^+)";
      break;
    case Branch::MacSilencedIC:
      out.value = ic_sum_capacity(n1, ni);
      out.expression = "min(2*n1, max(n1, ni) + (n1 - ni)^+, 2*max(ni, (n1 - ni)^+))";
      out.uncapped = std::min(std::max(n1, ni) + positive_part(n1 - ni), 2 * std::max(ni, positive_part(n1 - ni)));
      return out;
  }
  out.uncapped = out.value;
  return out;
}

}  // namespace ldmac
