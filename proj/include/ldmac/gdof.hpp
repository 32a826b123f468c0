#pragma once

// Normalized (generalized degrees of freedom) counterpart of the sum-rate
// bound: gains become exponents a = ni / n1 and b = n2 / n1 of a reference
// gain.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ldmac/channel.hpp"
#include "ldmac/rational.hpp"

namespace ldmac::gdof {

struct GdofPoint {
  Rational a;
  Rational b;
  /// Achievable value (a lower bound on the GDoF, not a converse).
  Rational d_lower;
  /// Interference-channel W curve at a.
  Rational w_ref;
  Branch branch = Branch::Weak;
};

/// min(1 - b/2, 2/3), the threshold separating the two alignment branches.
Rational a_bar(const Rational& b);

/// Branch for exponents (a, b), matching the integer classification of
/// (n1, n2, ni) = (1, b, a) scaled.
Branch classify(const Rational& a, const Rational& b);

/// Requires a >= 0 and 0 <= b <= 1.
GdofPoint gdof_lower(const Rational& a, const Rational& b);

/// min(2, max(1, a) + (1 - a)^+, 2 max(a, (1 - a)^+)). Requires a >= 0.
Rational w_curve(const Rational& a);

struct PhiLimitStep {
  int k = 0;
  std::int64_t t = 0;  // 2^k
  /// |phi(...)/t - limit| for the three sequences; unset when the limit
  /// arguments are negative at (a, b).
  std::optional<Rational> err_weak, err_align_low, err_align_high;
};

struct PhiLimitReport {
  Rational a, b;
  std::optional<Rational> limit_weak;        // phi1(a, 1 - b)
  std::optional<Rational> limit_align_low;   // phi2(b - a, 1 - b)
  std::optional<Rational> limit_align_high;  // phi2(2 - 3a, 1 - b)
  std::vector<PhiLimitStep> steps;
  /// Largest error over the three sequences at the last step.
  Rational final_error;
};

/// Integer approximations a_k = floor(a t_k), b_k = floor(b t_k), t_k = 2^k
/// for k = 1..K (K <= 40), compared with the limits.
PhiLimitReport phi_limit_check(const Rational& a, const Rational& b, int K);

struct GridRange {
  Rational lo, hi;
};

/// Row-major grid (b outer, a inner) with endpoints included.
std::vector<GdofPoint> sweep(const GridRange& a, const GridRange& b, const Rational& step);

/// Header `a,b,d_lower,w_ref,branch`; decimals with 12 fractional digits at most.
void write_csv(std::ostream& out, const std::vector<GdofPoint>& points);

}  // namespace ldmac::gdof
