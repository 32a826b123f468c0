#pragma once

// Linear precoding over a single channel use: rank-based achievable rates,
// per-regime precoder constructions and exhaustive zero-error verification.

#include "ldmac/channel.hpp"
#include "ldmac/gf2.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ldmac {

/// Precoders V_i with q rows and k_i columns; Tx i sends V_i x_i.
struct PrecoderTriple {
  gf2::BitMatrix v1, v2, v3;

  std::size_t q() const { return v1.rows(); }
  std::size_t total_columns() const { return v1.cols() + v2.cols() + v3.cols(); }
  friend bool operator==(const PrecoderTriple&, const PrecoderTriple&) = default;
};

struct RateTriple {
  int r1 = 0, r2 = 0, r3 = 0;
  int sum() const { return r1 + r2 + r3; }
  friend bool operator==(const RateTriple&, const RateTriple&) = default;
};

/// The six receiver-side images of the precoders:
/// A, B, C at Rx1 (from Tx1, Tx2, Tx3) and D, E, F at Rx2.
struct ReceiverImages {
  gf2::BitMatrix a, b, c, d, e, f;
};

ReceiverImages receiver_images(const SystemParams& p, const PrecoderTriple& v);

/// R1 = rank[A B C] - rank[B C], R2 = rank[A B C] - rank[A C], R3 = rank[D E F] - rank[D E].
RateTriple achievable_rates(const SystemParams& p, const PrecoderTriple& v);

enum class KConvention {
  Literal,  // k mod 2D < D
  Shifted,  // (k - 1) mod 2D < D, i.e. blocks of D members starting at 1
};

std::string to_string(KConvention c);
KConvention parse_k_convention(const std::string& s);

/// Ordered index set {k in 1..n : k mod 2D < D} (or its shifted variant) with
/// the position map k -> 1-based rank among the members.
class AlignIndexSet {
 public:
  AlignIndexSet(int delta, int n, KConvention conv = KConvention::Shifted);

  const std::vector<int>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(int k) const;
  /// Throws std::out_of_range if k is not a member.
  int position(int k) const;

 private:
  int delta_;
  std::vector<int> members_;
};

struct ConstructionOptions {
  KConvention k_convention = KConvention::Shifted;
};

struct Construction {
  PrecoderTriple precoders;
  Regime regime;
  /// Short name of the scheme used, e.g. "ic-very-strong" or "align-doubled-levels".
  std::string scheme;
};

/// Parameters for which no construction is defined (n1 == n2 inside the
/// alignment regime).
class DegenerateParameters : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Builds precoders whose rank-based sum rate meets the sum-rate bound.
/// Throws std::invalid_argument for n1 == 0 or invalid gains and
/// DegenerateParameters when Delta == 0 in an alignment branch.
Construction construct_precoders(const SystemParams& p, const ConstructionOptions& opts = {});

struct ZeroErrorReport {
  int k1 = 0, k2 = 0, k3 = 0;
  /// (x1, x2) is a function of Y1 for every x3.
  bool rx1_joint_unique = false;
  /// x3 is a function of Y2 for every (x1, x2).
  bool rx2_unique = false;
  /// log2 of the number of distinguishable classes per message, by enumeration.
  double decodable1 = 0, decodable2 = 0, decodable3 = 0;
  RateTriple rank_rates;
  /// Decodable counts coincide with the rank formula for all three users.
  bool consistent_with_rank = false;
  bool full_rate() const { return rx1_joint_unique && rx2_unique; }
};

inline constexpr int kDefaultEnumerationGuard = 24;

/// Thrown when the number of data bits exceeds the enumeration guard.
class EnumerationBudgetExceeded : public std::runtime_error {
 public:
  EnumerationBudgetExceeded(int required, int guard);
  int required_bits() const { return required_; }
  int guard_bits() const { return guard_; }

 private:
  int required_, guard_;
};

/// Enumerates every data triple and checks decodability at both receivers.
ZeroErrorReport verify_zero_error(const SystemParams& p, const PrecoderTriple& v,
                                  int max_total_bits = kDefaultEnumerationGuard, unsigned jobs = 0);

}  // namespace ldmac
