#pragma once

// The deterministic channel: two MAC transmitters (Tx1, Tx2) into Rx1 and a
// point-to-point pair (Tx3 -> Rx2), each mutually interfering.
//
//   Y1 = S^{q-n1} X1 + S^{q-n2} X2 + S^{q-ni} X3
//   Y2 = S^{q-ni} X1 + S^{q-ni} X2 + S^{q-n1} X3

#include "ldmac/gf2.hpp"
#include "ldmac/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

namespace ldmac {

struct SystemParams {
  int n1 = 0;  // Tx1 -> Rx1 and Tx3 -> Rx2
  int n2 = 0;  // Tx2 -> Rx1
  int ni = 0;  // every cross link
  int q = 0;   // signal length; 0 means max(n1, n2, ni)

  SystemParams() = default;
  SystemParams(int n1_, int n2_, int ni_, int q_ = 0) : n1(n1_), n2(n2_), ni(ni_), q(q_) {}

  int levels() const;
  /// Throws std::invalid_argument when gains are negative, n2 > n1, or q is too small.
  void validate() const;

  friend bool operator==(const SystemParams&, const SystemParams&) = default;
};

struct DerivedParams {
  int delta = 0;  // n1 - n2
  int sigma = 0;  // 2ni - n1
  int tau = 0;    // 2ni - n2
  int rho = 0;    // ni - sigma - tau
  Rational alpha;      // ni / n1
  Rational beta;       // n2 / n1
  Rational alpha_bar;  // min(1 - beta/2, 2/3)
};

enum class Branch { MacSilencedIC, Weak, AlignLow, AlignHigh, StrongIC };
enum class AlignSubcase { RhoNeg, RhoPosLow, RhoPosHigh };

struct Regime {
  Branch branch = Branch::Weak;
  std::optional<AlignSubcase> subcase;  // set for AlignLow / AlignHigh only

  friend bool operator==(const Regime&, const Regime&) = default;
};

std::string to_string(Branch b);
std::string to_string(AlignSubcase s);

/// Requires n1 > 0.
DerivedParams derive(const SystemParams& p);
Regime classify(const SystemParams& p);

struct ChannelOutputs {
  gf2::BitMatrix y1;
  gf2::BitMatrix y2;
};

/// Evaluates the input/output equations. Each Xi is q x m (m >= 1 columns = a batch of symbols).
ChannelOutputs transmit(const SystemParams& p, const gf2::BitMatrix& x1, const gf2::BitMatrix& x2,
                        const gf2::BitMatrix& x3);

}  // namespace ldmac
