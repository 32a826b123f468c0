#include "ldmac/gdof.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "ldmac/bounds.hpp"

namespace ldmac::gdof {

Rational a_bar(const Rational& b) { return std::min(1 - b / 2, Rational(2, 3)); }

Branch classify(const Rational& a, const Rational& b) {
  if (a < 0 || b < 0 || b > 1) throw std::invalid_argument("exponents need a >= 0 and 0 <= b <= 1");
  if (a >= b) return Branch::MacSilencedIC;
  if (a <= Rational(1, 2)) return Branch::Weak;
  if (a >= Rational(2, 3)) return Branch::StrongIC;
  return a >= a_bar(b) ? Branch::AlignHigh : Branch::AlignLow;
}

Rational w_curve(const Rational& a) {
  if (a < 0) throw std::invalid_argument("w_curve needs a >= 0");
  return ic_sum_capacity(1, a);
}

GdofPoint gdof_lower(const Rational& a, const Rational& b) {
  GdofPoint pt;
  pt.a = a;
  pt.b = b;
  pt.branch = classify(a, b);
  pt.w_ref = w_curve(a);
  const Rational gap = 1 - b;
  switch (pt.branch) {
    case Branch::Weak:
      pt.d_lower = 1 + b - 2 * a + phi1(a, gap);
      break;
    case Branch::AlignLow:
      pt.d_lower = 2 * a + phi2(b - a, gap);
      break;
    case Branch::AlignHigh:
      pt.d_lower = 2 * a + phi2(2 - 3 * a, gap);
      break;
    case Branch::StrongIC:
      pt.d_lower = std::min(Rational(2), std::max(Rational(1), a) + positive_part(1 - a));
      break;
    case Branch::MacSilencedIC:
      pt.d_lower = pt.w_ref;
      break;
  }
  return pt;
}

namespace {

Rational abs_diff(const Rational& x, const Rational& y) { return x >= y ? x - y : y - x; }

}  // namespace

PhiLimitReport phi_limit_check(const Rational& a, const Rational& b, int K) {
  if (a < 0 || b < 0 || b > 1) throw std::invalid_argument("phi_limit_check needs a >= 0 and 0 <= b <= 1");
  if (K < 1 || K > 40) throw std::invalid_argument("K must be in 1..40");
  PhiLimitReport rep;
  rep.a = a;
  rep.b = b;
  const Rational gap = 1 - b;
  rep.limit_weak = phi1(a, gap);
  if (b >= a) rep.limit_align_low = phi2(b - a, gap);
  if (2 - 3 * a >= 0) rep.limit_align_high = phi2(2 - 3 * a, gap);

  for (int k = 1; k <= K; ++k) {
    PhiLimitStep st;
    st.k = k;
    st.t = std::int64_t{1} << k;
    const Rational t(st.t);
    const Rational ak(floor(a * t)), bk(floor(b * t));
    const Rational qk = t - bk;
    st.err_weak = abs_diff(phi1(ak, qk) / t, *rep.limit_weak);
    if (rep.limit_align_low && bk >= ak) st.err_align_low = abs_diff(phi2(bk - ak, qk) / t, *rep.limit_align_low);
    if (rep.limit_align_high && 2 * t - 3 * ak >= 0)
      st.err_align_high = abs_diff(phi2(2 * t - 3 * ak, qk) / t, *rep.limit_align_high);
    rep.steps.push_back(st);
  }
  const PhiLimitStep& last = rep.steps.back();
  rep.final_error = *last.err_weak;
  if (last.err_align_low) rep.final_error = std::max(rep.final_error, *last.err_align_low);
  if (last.err_align_high) rep.final_error = std::max(rep.final_error, *last.err_align_high);
  return rep;
}

std::vector<GdofPoint> sweep(const GridRange& a, const GridRange& b, const Rational& step) {
  if (step <= 0) throw std::invalid_argument("sweep step must be positive");
  if (a.lo > a.hi || b.lo > b.hi) throw std::invalid_argument("sweep range with lo > hi");
  std::vector<GdofPoint> out;
  for (Rational bv = b.lo; bv <= b.hi; bv += step)
    for (Rational av = a.lo; av <= a.hi; av += step) out.push_back(gdof_lower(av, bv));
  return out;
}

void write_csv(std::ostream& out, const std::vector<GdofPoint>& points) {
  out << "a,b,d_lower,w_ref,branch\n";
  for (const GdofPoint& p : points)
    out << to_decimal_string(p.a) << ',' << to_decimal_string(p.b) << ',' << to_decimal_string(p.d_lower) << ','
        << to_decimal_string(p.w_ref) << ',' << to_string(p.branch) << '\n';
}

}  // namespace ldmac::gdof
