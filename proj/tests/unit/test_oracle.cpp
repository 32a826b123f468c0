#include <doctest.h>

#include <cmath>
#include <random>

#include "ldmac/bounds.hpp"
#include "ldmac/oracle.hpp"
#include "../common/independent_rates.hpp"

using namespace ldmac;
using namespace ldmac::oracle;

TEST_CASE("exhaustive search examples") {
  for (const auto& [p, expected] : std::vector<std::pair<SystemParams, int>>{
           {{2, 1, 1}, 2}, {{2, 2, 1}, 2}, {{1, 1, 0}, 2}, {{5, 4, 2}, 7}, {{4, 1, 2}, 4}, {{4, 4, 3}, 5}}) {
    CAPTURE(p.n1);
    CAPTURE(p.n2);
    CAPTURE(p.ni);
    const SearchResult r = best_linear_sum_rate(p);
    CHECK(r.complete);
    CHECK(r.mode_used == SearchMode::Exhaustive);
    CHECK(r.rates.sum() == expected);
    CHECK(testdata::independent_rates(p, r.precoders) == r.rates);
  }
}

TEST_CASE("Delta = 0 in the alignment range stays below the formula") {
  const SystemParams p{5, 5, 3};
  const SearchResult r = best_linear_sum_rate(p);
  CHECK(r.complete);
  CHECK(r.rates.sum() == 6);
  CHECK(sum_rate_bound(p).value == 7);
}

TEST_CASE("search is deterministic and independent of the worker count") {
  const SystemParams p{4, 3, 3};
  SearchBudget one;
  one.jobs = 1;
  SearchBudget many;
  many.jobs = 4;
  const SearchResult a = best_linear_sum_rate(p, one), b = best_linear_sum_rate(p, many);
  CHECK(a.rates == b.rates);
  CHECK(a.precoders == b.precoders);
}

TEST_CASE("randomized search never exceeds the bound") {
  for (const SystemParams p : {SystemParams{9, 7, 5}, SystemParams{12, 11, 7}, SystemParams{10, 6, 3}}) {
    SearchBudget b;
    b.mode = SearchMode::Randomized;
    b.restarts = 4;
    b.moves_per_restart = 400;
    b.seed = 9;
    const SearchResult r = best_linear_sum_rate(p, b);
    CHECK_FALSE(r.complete);
    CHECK(r.mode_used == SearchMode::Randomized);
    CHECK(Rational(r.rates.sum()) <= sum_rate_bound(p).value);
    CHECK(testdata::independent_rates(p, r.precoders) == r.rates);
    const SearchResult again = best_linear_sum_rate(p, b);
    CHECK(again.rates == r.rates);
  }
}

TEST_CASE("canonical subspace counts") {
  // Subspaces of F2^2 injective on the top row: {0}, and the two lines not equal to span(e2).
  CHECK(canonical_subspace_count(2, 1) == 3);
  // Injective on everything: all subspaces of F2^2 (1 + 3 + 1).
  CHECK(canonical_subspace_count(2, 2) == 5);
  CHECK(canonical_subspace_count(3, 0) == 1);
}

TEST_CASE("joint distribution basics") {
  const JointDistribution u = JointDistribution::uniform(2, 2);
  CHECK(u.atoms().size() == 16);
  CHECK(u.probability(5) == Rational(1, 16));
  CHECK(std::fabs(static_cast<double>(u.entropy_bits()) - 4.0) < 1e-12);
  CHECK(JointDistribution::point_mass(2, 1, 3).entropy_bits() == 0);
  CHECK(u.rows_slice(2, 2).rows() == 1);
  CHECK(std::fabs(static_cast<double>(u.rows_slice(1, 1).entropy_bits()) - 2.0) < 1e-12);

  JointDistribution d(1, 2);
  d.add(0, 3);
  d.add(3, 1);
  CHECK(d.probability(0) == Rational(3, 4));
  CHECK(d.probability(1) == 0);
  const JointDistribution s = xor_convolve(d, d);
  CHECK(s.probability(0) == Rational(10, 16));
  CHECK(s.probability(3) == Rational(6, 16));
  CHECK_THROWS(xor_convolve(d, u));
}

TEST_CASE("shifted-sum entropy examples") {
  SUBCASE("point masses") {
    const Lemma1Result r = lemma1_gap(JointDistribution::point_mass(2, 2, 6), JointDistribution::point_mass(3, 2, 45));
    CHECK(r.gap == 0);
    CHECK(r.holds);
    CHECK(r.bound == phi2(2, 1) * 2);
  }
  SUBCASE("uniform A absorbs B") {
    std::mt19937_64 rng(4);
    const Lemma1Result r = lemma1_gap(JointDistribution::uniform(2, 2), random_distribution(4, 2, rng));
    CHECK(std::fabs(static_cast<double>(r.h_top) - 4.0) < 1e-12);
    CHECK(std::fabs(static_cast<double>(r.h_shifted) - 4.0) < 1e-12);
    CHECK(r.holds);
  }
  SUBCASE("Delta = 0 gives no gap") {
    std::mt19937_64 rng(5);
    const Lemma1Result r = lemma1_gap(random_distribution(2, 2, rng), random_distribution(2, 2, rng));
    CHECK(r.gap == 0);
    CHECK(r.bound == 4);  // phi2(n, 0) = n
    CHECK(r.holds);
  }
  SUBCASE("tight instance") {
    JointDistribution b(2, 1);
    b.add(0, 1);
    b.add(1, 1);  // top row uniform, bottom row zero
    const Lemma1Result r = lemma1_gap(JointDistribution::point_mass(1, 1, 0), b);
    CHECK(std::fabs(static_cast<double>(r.gap) - 1.0) < 1e-12);
    CHECK(r.bound == 1);
    CHECK(r.holds);
  }
  SUBCASE("shape mismatch") {
    CHECK_THROWS_AS(lemma1_gap(JointDistribution::uniform(2, 1), JointDistribution::uniform(2, 2)),
                    std::invalid_argument);
    CHECK_THROWS_AS(lemma1_gap(JointDistribution::uniform(3, 1), JointDistribution::uniform(2, 1)),
                    std::invalid_argument);
  }
}

TEST_CASE("shifted-sum entropy inequality holds on random instances and the gap search stays below the bound") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 200; ++t) {
    const int n = 1 + static_cast<int>(rng() % 3), delta = static_cast<int>(rng() % 3), m = 1 + static_cast<int>(rng() % 2);
    const Lemma1Result r = lemma1_gap(random_distribution(n, m, rng), random_distribution(n + delta, m, rng));
    CHECK(r.holds);
  }
  CHECK(max_lemma1_gap_search(1, 1, 1, 10) <= 1 + kEntropySlack);
  CHECK(max_lemma1_gap_search(1, 1, 1, 10) > 0.9L);
  CHECK(max_lemma1_gap_search(2, 1, 1, 10) <= 1 + kEntropySlack);
  CHECK(max_lemma1_gap_search(2, 0, 1, 5) == 0);
}
