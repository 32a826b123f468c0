#include "ldmac/channel.hpp"

#include <algorithm>
#include <stdexcept>

namespace ldmac {

int SystemParams::levels() const { return q > 0 ? q : std::max({n1, n2, ni}); }

void SystemParams::validate() const {
  if (n1 < 0 || n2 < 0 || ni < 0 || q < 0) throw std::invalid_argument("channel gains must be nonnegative");
  if (n2 > n1) throw std::invalid_argument("n2 must not exceed n1 (label the stronger MAC user Tx1)");
  if (q != 0 && q < std::max({n1, n2, ni}))
    throw std::invalid_argument("q must be at least max(n1, n2, ni)");
}

DerivedParams derive(const SystemParams& p) {
  p.validate();
  if (p.n1 == 0) throw std::invalid_argument("derived parameters need n1 > 0");
  DerivedParams d;
  d.delta = p.n1 - p.n2;
  d.sigma = 2 * p.ni - p.n1;
  d.tau = 2 * p.ni - p.n2;
  d.rho = p.ni - d.sigma - d.tau;
  d.alpha = Rational(p.ni, p.n1);
  d.beta = Rational(p.n2, p.n1);
  d.alpha_bar = std::min(Rational(1) - d.beta / 2, Rational(2, 3));
  return d;
}

Regime classify(const SystemParams& p) {
  const DerivedParams d = derive(p);
  if (d.alpha >= d.beta) return {Branch::MacSilencedIC, std::nullopt};
  if (d.alpha <= Rational(1, 2)) return {Branch::Weak, std::nullopt};
  if (d.alpha >= Rational(2, 3)) return {Branch::StrongIC, std::nullopt};

  const bool high = d.alpha >= d.alpha_bar;
  AlignSubcase sub = d.rho < 0 ? AlignSubcase::RhoNeg : (high ? AlignSubcase::RhoPosHigh : AlignSubcase::RhoPosLow);
  return {high ? Branch::AlignHigh : Branch::AlignLow, sub};
}

std::string to_string(Branch b) {
  switch (b) {
    case Branch::MacSilencedIC: return "MacSilencedIC";
    case Branch::Weak: return "Weak";
    case Branch::AlignLow: return "AlignLow";
    case Branch::AlignHigh: return "AlignHigh";
    case Branch::StrongIC: return "StrongIC";
  }
  return "?";
}

std::string to_string(AlignSubcase s) {
  switch (s) {
    case AlignSubcase::RhoNeg: return "RhoNeg";
    case AlignSubcase::RhoPosLow: return "RhoPosLow";
    case AlignSubcase::RhoPosHigh: return "RhoPosHigh";
  }
  return "?";
}

ChannelOutputs transmit(const SystemParams& p, const gf2::BitMatrix& x1, const gf2::BitMatrix& x2,
                        const gf2::BitMatrix& x3) {
  p.validate();
  const auto q = static_cast<std::size_t>(p.levels());
  for (const auto* x : {&x1, &x2, &x3})
    if (x->rows() != q || x->cols() != x1.cols())
      throw std::invalid_argument("transmit: inputs must all be q x m with q = " + std::to_string(q));

  const auto sh = [q](int gain) { return q - static_cast<std::size_t>(gain); };
  ChannelOutputs out;
  out.y1 = gf2::shift_apply(sh(p.n1), x1) ^ gf2::shift_apply(sh(p.n2), x2) ^ gf2::shift_apply(sh(p.ni), x3);
  out.y2 = gf2::shift_apply(sh(p.ni), x1) ^ gf2::shift_apply(sh(p.ni), x2) ^ gf2::shift_apply(sh(p.n1), x3);
  return out;
}

}  // namespace ldmac
