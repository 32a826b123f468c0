#pragma once

// Ground-truth generators that do not share code with the constructions:
// a search over linear precoders for small channels and an exact-entropy
// checker for the shifted-sum entropy inequality.

#include <chrono>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "ldmac/channel.hpp"
#include "ldmac/coding.hpp"
#include "ldmac/rational.hpp"

namespace ldmac::oracle {

enum class SearchMode { Exhaustive, Randomized };

struct SearchBudget {
  SearchMode mode = SearchMode::Exhaustive;
  /// Randomized mode: total number of columns over all three precoders.
  int max_total_columns = 64;
  std::uint64_t seed = 1;
  /// Randomized mode: restarts and local moves per restart.
  int restarts = 40;
  int moves_per_restart = 4000;
  /// Exhaustive mode is refused (falls back to randomized) when any user's
  /// canonical subspace count exceeds this.
  std::uint64_t canonical_ceiling = std::uint64_t{1} << 21;
  /// Safety stop; a search cut short by it reports complete = false.
  std::chrono::milliseconds time_guard{std::chrono::minutes(10)};
  unsigned jobs = 0;
};

struct SearchResult {
  RateTriple rates;
  PrecoderTriple precoders;
  /// True when the exhaustive enumeration finished: rates.sum() is the optimum.
  bool complete = false;
  SearchMode mode_used = SearchMode::Exhaustive;
  std::uint64_t evaluated = 0;
};

/// Number of canonical subspaces a user's precoder ranges over: subspaces of
/// F2^rows on which the projection to the top `decoded` rows is injective.
std::uint64_t canonical_subspace_count(int rows, int decoded);

/// Largest rank-based sum rate over linear precoders. Exhaustive mode
/// enumerates column spaces in reduced echelon form with branch-and-bound;
/// randomized mode hill-climbs over level and doubled-level columns.
SearchResult best_linear_sum_rate(const SystemParams& p, const SearchBudget& budget = {});

// ---------------------------------------------------------------------------
// Entropy inequality for shifted sums

/// Distribution of a random r x m binary matrix, stored sparsely as atoms with
/// integer weights; probability of an atom is weight / total. Matrix bit
/// (i, j) (zero-based) is bit i * m + j of the key.
class JointDistribution {
 public:
  JointDistribution(int rows, int cols);

  static JointDistribution point_mass(int rows, int cols, std::uint32_t matrix);
  static JointDistribution uniform(int rows, int cols);

  void add(std::uint32_t matrix, std::uint64_t weight);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::uint64_t total() const { return total_; }
  const std::vector<std::pair<std::uint32_t, std::uint64_t>>& atoms() const { return atoms_; }
  Rational probability(std::uint32_t matrix) const;

  /// Rows i..j inclusive (one-based) as an (j - i + 1) x m distribution.
  JointDistribution rows_slice(int i, int j) const;
  long double entropy_bits() const;

 private:
  int rows_, cols_;
  std::uint64_t total_ = 0;
  std::vector<std::pair<std::uint32_t, std::uint64_t>> atoms_;  // sorted by key, positive weights
};

/// Distribution of X + Y (bitwise XOR) for independent X and Y of equal shape.
JointDistribution xor_convolve(const JointDistribution& x, const JointDistribution& y);

struct Lemma1Result {
  int n = 0, delta = 0, m = 0;
  long double h_top = 0;     // H(A + B[1:n])
  long double h_shifted = 0; // H(A + B[Delta+1 : n+Delta])
  long double gap = 0;
  Rational bound;            // m * phi2(n, Delta)
  bool holds = false;        // gap <= bound + 1e-9
};

constexpr long double kEntropySlack = 1e-9L;
/// Product of atom counts above which lemma1_gap refuses.
constexpr std::uint64_t kLemma1SupportGuard = std::uint64_t{1} << 24;

/// A is n x m and B is (n + Delta) x m; they are independent by construction.
/// Throws std::invalid_argument on shape mismatch and std::length_error when
/// the convolution would exceed kLemma1SupportGuard.
Lemma1Result lemma1_gap(const JointDistribution& a, const JointDistribution& b);

/// Random distribution on r x m matrices: mixes sparse random supports,
/// products of independent biased entries and point masses.
JointDistribution random_distribution(int rows, int cols, std::mt19937_64& rng);

/// Random restarts with local weight and support moves maximizing the gap.
/// Returns the largest gap found (0 for Delta = 0).
long double max_lemma1_gap_search(int n, int delta, int m, int restarts, std::uint64_t seed = 1);

}  // namespace ldmac::oracle
