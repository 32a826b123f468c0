#include <doctest.h>

#include <random>

#include "ldmac/bounds.hpp"
#include "ldmac/coding.hpp"
#include "../common/independent_rates.hpp"

using namespace ldmac;
using gf2::BitMatrix;

namespace {

std::vector<int> members(int delta, int n, KConvention c) { return AlignIndexSet(delta, n, c).members(); }

bool is_degenerate(const SystemParams& p) {
  const Branch b = classify(p).branch;
  return p.n1 == p.n2 && (b == Branch::AlignLow || b == Branch::AlignHigh);
}

}  // namespace

TEST_CASE("align index set examples") {
  CHECK(members(2, 5, KConvention::Literal) == std::vector<int>{1, 4, 5});
  CHECK(members(2, 5, KConvention::Shifted) == std::vector<int>{1, 2, 5});
  CHECK(members(1, 4, KConvention::Shifted) == std::vector<int>{1, 3});
  CHECK(members(1, 4, KConvention::Literal) == std::vector<int>{2, 4});
  CHECK(members(3, 0, KConvention::Shifted).empty());

  const AlignIndexSet k(2, 7, KConvention::Shifted);
  CHECK(k.size() == 4);
  CHECK(k.contains(6));
  CHECK_FALSE(k.contains(3));
  CHECK(k.position(5) == 3);
  CHECK_THROWS_AS(k.position(3), std::out_of_range);
}

TEST_CASE("align index set size is n/2 on multiples of 2 Delta and matches phi2") {
  for (int delta = 1; delta <= 6; ++delta)
    for (int n = 0; n <= 40; ++n) {
      const AlignIndexSet s(delta, n, KConvention::Shifted);
      if (n % (2 * delta) == 0) CHECK(s.size() == static_cast<std::size_t>(n / 2));
      CHECK(Rational(static_cast<std::int64_t>(s.size())) == phi2(n, delta));
      const auto& m = s.members();
      for (std::size_t i = 0; i < m.size(); ++i) CHECK(s.position(m[i]) == static_cast<int>(i) + 1);
    }
}

TEST_CASE("k convention parsing") {
  CHECK(parse_k_convention("literal") == KConvention::Literal);
  CHECK(parse_k_convention("shifted") == KConvention::Shifted);
  CHECK(to_string(KConvention::Shifted) == "shifted");
  CHECK_THROWS_AS(parse_k_convention("other"), std::invalid_argument);
}

TEST_CASE("achievable rates examples") {
  const SystemParams p{4, 3, 2};
  const BitMatrix empty(4, 0);
  CHECK(achievable_rates(p, {BitMatrix::identity(4), empty, empty}) == RateTriple{4, 0, 0});
  CHECK(achievable_rates(p, {empty, empty, empty}) == RateTriple{0, 0, 0});
}

TEST_CASE("rank rates agree with an independent recomputation on random precoders") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 400; ++t) {
    const int n1 = 1 + static_cast<int>(rng() % 8);
    const int n2 = static_cast<int>(rng() % (n1 + 1));
    const int ni = static_cast<int>(rng() % (2 * n1 + 1));
    const int q = std::max(n1, ni) + static_cast<int>(rng() % 2);
    const SystemParams p{n1, n2, ni, q};
    auto rnd = [&](std::size_t k) {
      BitMatrix m(static_cast<std::size_t>(q), k);
      for (int i = 0; i < q; ++i)
        for (std::size_t j = 0; j < k; ++j) m.set(static_cast<std::size_t>(i), j, rng() & 1U);
      return m;
    };
    const PrecoderTriple v{rnd(rng() % 4), rnd(rng() % 4), rnd(rng() % 4)};
    const RateTriple r = achievable_rates(p, v);
    CHECK(r == testdata::independent_rates(p, v));
    CHECK(r.r1 <= static_cast<int>(v.v1.cols()));
    CHECK(r.sum() <= 2 * n1);
  }
}

TEST_CASE("construction examples") {
  const Construction a = construct_precoders({23, 21, 13});
  CHECK(a.scheme == "align-doubled-levels");
  CHECK(a.precoders.v3.cols() == 5 + 4 + 3);
  CHECK(achievable_rates({23, 21, 13}, a.precoders).sum() == 30);

  const Construction b = construct_precoders({12, 11, 7});
  CHECK(achievable_rates({12, 11, 7}, b.precoders).sum() == 16);

  const Construction c = construct_precoders({4, 1, 2});
  CHECK(c.precoders.v2.cols() == 0);
  CHECK(c.regime.branch == Branch::MacSilencedIC);
  CHECK(achievable_rates({4, 1, 2}, c.precoders).sum() == 4);
}

TEST_CASE("literal index convention falls short at the dense alignment example") {
  const SystemParams p{23, 21, 13};
  const Construction lit = construct_precoders(p, {KConvention::Literal});
  CHECK(achievable_rates(p, lit.precoders) == RateTriple{13, 4, 11});
  CHECK(achievable_rates(p, construct_precoders(p).precoders) == RateTriple{13, 5, 12});
}

TEST_CASE("constructions meet the bound on every non-degenerate triple up to n1 = 16") {
  for (int n1 = 1; n1 <= 16; ++n1)
    for (int n2 = 0; n2 <= n1; ++n2)
      for (int ni = 0; ni <= 2 * n1 + 1; ++ni) {
        const SystemParams p{n1, n2, ni};
        if (is_degenerate(p)) {
          CHECK_THROWS_AS(construct_precoders(p), DegenerateParameters);
          continue;
        }
        CAPTURE(n1);
        CAPTURE(n2);
        CAPTURE(ni);
        const Construction c = construct_precoders(p);
        CHECK(c.regime == classify(p));
        CHECK(c.precoders.q() == static_cast<std::size_t>(p.levels()));
        CHECK(Rational(testdata::independent_rates(p, c.precoders).sum()) == sum_rate_bound(p).value);
      }
}

TEST_CASE("constructions with extra levels keep the same rates") {
  for (const SystemParams base : {SystemParams{23, 21, 13}, SystemParams{9, 7, 5}, SystemParams{8, 6, 3},
                                  SystemParams{4, 4, 3}, SystemParams{5, 2, 9}}) {
    const SystemParams padded{base.n1, base.n2, base.ni, base.levels() + 3};
    const Construction c = construct_precoders(padded);
    CHECK(c.precoders.q() == static_cast<std::size_t>(padded.levels()));
    CHECK(achievable_rates(padded, c.precoders) == achievable_rates(base, construct_precoders(base).precoders));
  }
}

TEST_CASE("alignment schemes overlap Tx1 and Tx2 at Rx2") {
  for (const SystemParams p : {SystemParams{23, 21, 13}, SystemParams{12, 11, 7}, SystemParams{9, 7, 5},
                               SystemParams{20, 14, 11}}) {
    const Construction c = construct_precoders(p);
    const ReceiverImages img = receiver_images(p, c.precoders);
    const std::size_t k12 = c.precoders.v1.cols() + c.precoders.v2.cols();
    CHECK(gf2::rank(gf2::hstack(img.d, img.e)) < k12);
  }
}

TEST_CASE("degenerate parameters are refused") {
  CHECK_THROWS_AS(construct_precoders({5, 5, 3}), DegenerateParameters);
  CHECK_THROWS_AS(construct_precoders({0, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(construct_precoders({3, 4, 1}), std::invalid_argument);
  CHECK_NOTHROW(construct_precoders({10, 10, 5}));
}

TEST_CASE("zero-error verification") {
  SUBCASE("interference-free identity precoders") {
    const SystemParams p{3, 2, 0};
    const PrecoderTriple v{BitMatrix::identity(3), BitMatrix(3, 0), BitMatrix::identity(3)};
    const ZeroErrorReport r = verify_zero_error(p, v);
    CHECK(r.full_rate());
    CHECK(r.consistent_with_rank);
    CHECK(r.decodable1 == 3);
    CHECK(r.decodable3 == 3);
  }
  SUBCASE("colliding single columns") {
    const SystemParams p{2, 2, 1};
    const BitMatrix top = BitMatrix::from_rows({{1}, {0}});
    const ZeroErrorReport r = verify_zero_error(p, {top, top, BitMatrix(2, 0)});
    CHECK_FALSE(r.rx1_joint_unique);
    CHECK(r.rank_rates.r1 == 0);
    CHECK(r.rank_rates.r2 == 0);
    CHECK(r.consistent_with_rank);
  }
  SUBCASE("alignment construction") {
    const SystemParams p{12, 11, 7};
    const ZeroErrorReport r = verify_zero_error(p, construct_precoders(p).precoders);
    CHECK(r.full_rate());
    CHECK(r.consistent_with_rank);
    CHECK(r.rank_rates.sum() == 16);
  }
  SUBCASE("guard") {
    const SystemParams p{23, 21, 13};
    try {
      verify_zero_error(p, construct_precoders(p).precoders, 20);
      FAIL("expected refusal");
    } catch (const EnumerationBudgetExceeded& e) {
      CHECK(e.required_bits() == 30);
      CHECK(e.guard_bits() == 20);
    }
  }
}
