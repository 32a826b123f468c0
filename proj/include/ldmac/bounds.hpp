#pragma once

// Sum-rate outer bound for the deterministic channel and the piecewise
// functions phi1 / phi2 it is built from. Everything is exact.

#include "ldmac/channel.hpp"
#include "ldmac/rational.hpp"

#include <cstdint>
#include <string>

namespace ldmac {

/// floor(p / q) for q > 0, and 0 when q == 0. Requires p, q >= 0.
std::int64_t floor_div(const Rational& p, const Rational& q);

/// q + l q / 2 for even l = floor_div(p, q), p - (l - 1) q / 2 for odd l.
Rational phi1(const Rational& p, const Rational& q);
/// p - l q / 2 for even l, (l + 1) q / 2 for odd l.
Rational phi2(const Rational& p, const Rational& q);

struct SumRateBound {
  Rational value;
  Regime regime;
  /// Human-readable expression that produced `value`, e.g. "2*ni + phi2(2*n1 - 3*ni, Delta)".
  std::string expression;
  /// For MacSilencedIC: the value without the 2*n1 cap, for transparency. Equal to `value` elsewhere.
  Rational uncapped;
};

SumRateBound sum_rate_bound(const SystemParams& p);

/// Sum capacity of the two-user symmetric interference channel (Tx1, Tx3) with
/// direct gain n and cross gain m: min(2n, max(n, m) + (n - m)^+, 2 max(m, (n - m)^+)).
Rational ic_sum_capacity(const Rational& n, const Rational& m);

}  // namespace ldmac
