#include <doctest.h>

#include <random>

#include "ldmac/channel.hpp"

using namespace ldmac;
using gf2::BitMatrix;

namespace {

BitMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  BitMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, rng() & 1U);
  return m;
}

// Row i (zero-based) of S^{q-n} X is row i - (q - n) of X, or zero.
bool shifted_bit(const BitMatrix& x, int q, int n, int i, std::size_t col) {
  const int src = i - (q - n);
  return src >= 0 && x.get(static_cast<std::size_t>(src), col);
}

}  // namespace

TEST_CASE("derive examples") {
  const DerivedParams a = derive({23, 21, 13});
  CHECK(a.delta == 2);
  CHECK(a.sigma == 3);
  CHECK(a.tau == 5);
  CHECK(a.rho == 5);
  CHECK(a.alpha == Rational(13, 23));
  CHECK(a.beta == Rational(21, 23));
  CHECK(a.alpha_bar == Rational(25, 46));

  const DerivedParams b = derive({10, 10, 5});
  CHECK(b.delta == 0);
  CHECK(b.sigma == 0);
  CHECK(b.tau == 0);
  CHECK(b.rho == 5);
  CHECK(b.alpha == Rational(1, 2));
  CHECK(b.beta == 1);

  const DerivedParams c = derive({4, 1, 2});
  CHECK(c.delta == 3);
  CHECK(c.sigma == 0);
  CHECK(c.tau == 3);
  CHECK(c.rho == -1);
  CHECK(c.alpha == Rational(1, 2));
  CHECK(c.beta == Rational(1, 4));
}

TEST_CASE("classify examples") {
  CHECK(classify({23, 21, 13}) == Regime{Branch::AlignHigh, AlignSubcase::RhoPosHigh});
  CHECK(classify({5, 4, 2}).branch == Branch::Weak);
  CHECK_FALSE(classify({5, 4, 2}).subcase.has_value());
  CHECK(classify({4, 1, 2}).branch == Branch::MacSilencedIC);
  CHECK(classify({4, 4, 3}).branch == Branch::StrongIC);
  CHECK(classify({12, 11, 7}) == Regime{Branch::AlignHigh, AlignSubcase::RhoPosHigh});
  CHECK(classify({7, 5, 4}).branch == Branch::AlignLow);
}

TEST_CASE("classify boundary conventions") {
  // alpha = 1/2 is Weak, alpha = 2/3 is StrongIC, alpha = alpha_bar is AlignHigh.
  CHECK(classify({10, 9, 5}).branch == Branch::Weak);
  CHECK(classify({12, 11, 8}).branch == Branch::StrongIC);
  // (46, 42, 25): alpha = 25/46 = alpha_bar exactly.
  CHECK(derive({46, 42, 25}).alpha_bar == Rational(25, 46));
  CHECK(classify({46, 42, 25}).branch == Branch::AlignHigh);
  CHECK(classify({46, 42, 24}).branch == Branch::AlignLow);
}

TEST_CASE("classify is scale invariant and never aligns when alpha >= beta") {
  for (int n1 = 1; n1 <= 12; ++n1)
    for (int n2 = 0; n2 <= n1; ++n2)
      for (int ni = 0; ni <= 2 * n1; ++ni) {
        const Regime r = classify({n1, n2, ni});
        for (int c = 2; c <= 4; ++c) CHECK(classify({c * n1, c * n2, c * ni}) == r);
        if (ni >= n2) CHECK(r.branch == Branch::MacSilencedIC);
        const bool align = r.branch == Branch::AlignLow || r.branch == Branch::AlignHigh;
        CHECK(align == r.subcase.has_value());
      }
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(SystemParams(3, 4, 1).validate(), std::invalid_argument);
  CHECK_THROWS_AS(SystemParams(3, 2, -1).validate(), std::invalid_argument);
  CHECK_THROWS_AS(SystemParams(3, 2, 5, 4).validate(), std::invalid_argument);
  CHECK_NOTHROW(SystemParams(3, 2, 5, 5).validate());
  CHECK(SystemParams(3, 2, 1).levels() == 3);
  CHECK(SystemParams(3, 2, 5).levels() == 5);
  CHECK(SystemParams(3, 2, 1, 7).levels() == 7);
  CHECK_THROWS(derive({0, 0, 0}));
}

TEST_CASE("transmit examples") {
  const SystemParams p{2, 1, 1};
  const auto zero = BitMatrix::zero(2, 1);
  const ChannelOutputs z = transmit(p, zero, zero, zero);
  CHECK(z.y1 == zero);
  CHECK(z.y2 == zero);

  const ChannelOutputs y = transmit(p, BitMatrix::from_rows({{1}, {0}}), BitMatrix::from_rows({{1}, {0}}),
                                    BitMatrix::from_rows({{0}, {1}}));
  CHECK(y.y1 == BitMatrix::from_rows({{1}, {1}}));
  CHECK(y.y2 == BitMatrix::from_rows({{0}, {1}}));

  CHECK_THROWS_AS(transmit(p, BitMatrix::zero(3, 1), zero, zero), std::invalid_argument);
  CHECK_THROWS_AS(transmit(p, zero, BitMatrix::zero(2, 2), zero), std::invalid_argument);
}

TEST_CASE("transmit with no cross gain leaves Rx2 clean") {
  std::mt19937_64 rng(1);
  const SystemParams p{5, 3, 0};
  const BitMatrix x1 = random_matrix(rng, 5, 2), x2 = random_matrix(rng, 5, 2), x3 = random_matrix(rng, 5, 2);
  CHECK(transmit(p, x1, x2, x3).y2 == x3);
}

TEST_CASE("transmit matches the per-row output equations and is linear") {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 300; ++t) {
    const int n1 = 1 + static_cast<int>(rng() % 9);
    const int n2 = static_cast<int>(rng() % (n1 + 1));
    const int ni = static_cast<int>(rng() % (2 * n1 + 1));
    const int q = std::max(n1, ni) + static_cast<int>(rng() % 3);
    const SystemParams p{n1, n2, ni, q};
    const std::size_t m = 1 + rng() % 3;
    const BitMatrix x1 = random_matrix(rng, q, m), x2 = random_matrix(rng, q, m), x3 = random_matrix(rng, q, m);
    const ChannelOutputs y = transmit(p, x1, x2, x3);
    for (int i = 0; i < q; ++i)
      for (std::size_t c = 0; c < m; ++c) {
        const bool y1 = shifted_bit(x1, q, n1, i, c) ^ shifted_bit(x2, q, n2, i, c) ^ shifted_bit(x3, q, ni, i, c);
        const bool y2 = shifted_bit(x1, q, ni, i, c) ^ shifted_bit(x2, q, ni, i, c) ^ shifted_bit(x3, q, n1, i, c);
        CHECK(y.y1.get(static_cast<std::size_t>(i), c) == y1);
        CHECK(y.y2.get(static_cast<std::size_t>(i), c) == y2);
      }

    const BitMatrix x1b = random_matrix(rng, q, m);
    const BitMatrix zero = BitMatrix::zero(static_cast<std::size_t>(q), m);
    const ChannelOutputs sum = transmit(p, x1 ^ x1b, x2, x3);
    const ChannelOutputs part = transmit(p, x1b, zero, zero);
    CHECK(sum.y1 == (y.y1 ^ part.y1));
    CHECK(sum.y2 == (y.y2 ^ part.y2));
  }
}
