#include "ldmac/coding.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "ldmac/bounds.hpp"

namespace ldmac {

using gf2::BitMatrix;

ReceiverImages receiver_images(const SystemParams& p, const PrecoderTriple& v) {
  p.validate();
  const auto q = static_cast<std::size_t>(p.levels());
  if (v.v1.rows() != q || v.v2.rows() != q || v.v3.rows() != q)
    throw std::invalid_argument("precoders must have q = " + std::to_string(q) + " rows");
  const auto sh = [q](int gain) { return q - static_cast<std::size_t>(gain); };
  return {gf2::shift_apply(sh(p.n1), v.v1), gf2::shift_apply(sh(p.n2), v.v2), gf2::shift_apply(sh(p.ni), v.v3),
          gf2::shift_apply(sh(p.ni), v.v1), gf2::shift_apply(sh(p.ni), v.v2), gf2::shift_apply(sh(p.n1), v.v3)};
}

RateTriple achievable_rates(const SystemParams& p, const PrecoderTriple& v) {
  const ReceiverImages m = receiver_images(p, v);
  const auto rk = [](std::initializer_list<const BitMatrix*> parts) {
    return static_cast<int>(gf2::rank(gf2::hstack(parts)));
  };
  const int abc = rk({&m.a, &m.b, &m.c});
  const int def = rk({&m.d, &m.e, &m.f});
  return {abc - rk({&m.b, &m.c}), abc - rk({&m.a, &m.c}), def - rk({&m.d, &m.e})};
}

// ---------------------------------------------------------------------------
// Alignment index sets

std::string to_string(KConvention c) { return c == KConvention::Literal ? "literal" : "shifted"; }

KConvention parse_k_convention(const std::string& s) {
  if (s == "literal") return KConvention::Literal;
  if (s == "shifted") return KConvention::Shifted;
  throw std::invalid_argument("k-convention must be 'literal' or 'shifted', got '" + s + "'");
}

AlignIndexSet::AlignIndexSet(int delta, int n, KConvention conv) : delta_(delta) {
  if (delta < 1) throw std::invalid_argument("alignment index set needs Delta >= 1");
  for (int k = 1; k <= n; ++k) {
    const int r = conv == KConvention::Literal ? k % (2 * delta) : (k - 1) % (2 * delta);
    if (r < delta) members_.push_back(k);
  }
}

bool AlignIndexSet::contains(int k) const { return std::binary_search(members_.begin(), members_.end(), k); }

int AlignIndexSet::position(int k) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), k);
  if (it == members_.end() || *it != k) throw std::out_of_range("index " + std::to_string(k) + " not in K set");
  return static_cast<int>(it - members_.begin()) + 1;
}

// ---------------------------------------------------------------------------
// Constructions

namespace {

// Accumulates precoder columns given as lists of 1-based levels.
class ColumnList {
 public:
  void unit(int level) { cols_.push_back({level}); }
  void pair(int a, int b) { cols_.push_back({a, b}); }
  void levels(int from, int to) {
    for (int l = from; l <= to; ++l) unit(l);
  }
  BitMatrix build(int q) const {
    BitMatrix m(static_cast<std::size_t>(q), cols_.size());
    for (std::size_t c = 0; c < cols_.size(); ++c)
      for (int level : cols_[c]) {
        if (level < 1 || level > q) throw std::logic_error("construction placed level " + std::to_string(level) + " outside 1.." + std::to_string(q));
        m.flip(static_cast<std::size_t>(level - 1), c);
      }
    return m;
  }

 private:
  std::vector<std::vector<int>> cols_;
};

struct Columns {
  ColumnList v1, v2, v3;
  PrecoderTriple build(int q) const { return {v1.build(q), v2.build(q), v3.build(q)}; }
};

// Two-user symmetric interference channel Tx1 -> Rx1, Tx3 -> Rx2 with direct
// gain n and cross gain m; Tx2 stays silent.
std::string interference_channel_scheme(int n, int m, Columns& cols) {
  if (2 * m <= n) {
    // Top n - m levels of each sender arrive above the other's interference.
    cols.v1.levels(1, n - m);
    cols.v3.levels(1, n - m);
    return "ic-weak";
  }
  if (3 * m <= 2 * n) {
    // No two used levels differ by s = n - m: along each residue chain mod s
    // take every other level.
    const int s = n - m;
    for (int l = 1; l <= n; ++l)
      if (((l - 1) / s) % 2 == 0) {
        cols.v1.unit(l);
        cols.v3.unit(l);
      }
    return "ic-moderate";
  }
  if (m < n) {
    // Tx3: top s and bottom s (private) levels. Tx1: private bottom levels plus
    // a crossing subspace avoiding the interference rows s+1..2s at Rx1 and
    // the levels m-s+1..m whose images would land on Tx3's private rows at Rx2.
    const int s = n - m;
    cols.v3.levels(1, s);
    cols.v3.levels(m + 1, n);
    cols.v1.levels(m + 1, n);
    const auto in_x = [s](int l) { return l > s && l <= 2 * s; };
    const auto in_y = [m, s](int l) { return l > m - s && l <= m; };
    std::vector<int> x_only, y_only;
    for (int l = 1; l <= m; ++l) {
      if (!in_x(l) && !in_y(l)) cols.v1.unit(l);
      else if (in_x(l) && !in_y(l)) x_only.push_back(l);
      else if (in_y(l) && !in_x(l)) y_only.push_back(l);
    }
    for (std::size_t k = 0; k < x_only.size(); ++k) cols.v1.pair(x_only[k], y_only[k]);
    return "ic-strong-private-common";
  }
  const int t = m - n;
  cols.v1.levels(1, n);
  if (t >= n) {
    cols.v3.levels(1, n);
    return "ic-very-strong";
  }
  // Tx3 columns reach a clean top row at Rx1 and a clean bottom row at Rx2.
  for (int j = 1; j <= t; ++j) cols.v3.pair(j, n - t + j);
  return "ic-strong-coded";
}

std::string weak_scheme(const SystemParams& p, const DerivedParams& d, Columns& cols) {
  // Tx1 and Tx2 transmit on the same crossing levels j so they arrive on one
  // row at Rx2 but on rows j and j + Delta at Rx1. Tx3 fills everything at
  // Rx2 not hit by that interference, without crossing into Rx1.
  const int s = p.n1 - p.ni;
  std::vector<bool> aligned(static_cast<std::size_t>(p.ni) + 1, false);
  if (d.delta > 0)
    for (int j = 1; j + d.delta <= p.ni; ++j)
      if ((j - 1) % (2 * d.delta) < d.delta) {
        aligned[static_cast<std::size_t>(j)] = true;
        cols.v1.unit(j);
        cols.v2.unit(j);
      }
  cols.v1.levels(p.ni + 1, p.n1);
  cols.v3.levels(p.ni + 1, s);
  for (int j = 1; j <= p.ni; ++j)
    if (!aligned[static_cast<std::size_t>(j)]) cols.v3.unit(s + j);
  return "weak-aligned-pairs";
}

std::string align_scheme(const SystemParams& p, const DerivedParams& d, KConvention conv, Columns& cols) {
  const int s = p.n1 - p.ni;
  const int delta = d.delta, sigma = d.sigma, tau = d.tau, rho = d.rho;
  const auto kset = [&](int n) { return AlignIndexSet(delta, std::max(n, 0), conv); };

  // Tx1: Delta doubled columns (k, s+k), alignment singles, private bottom levels.
  for (int k = 1; k <= delta; ++k) cols.v1.pair(k, s + k);
  const AlignIndexSet k_rho = kset(rho), k_low = kset(rho - delta), k_high = kset(rho + delta);
  for (int k : k_rho.members()) cols.v1.unit(tau + k);
  cols.v1.levels(p.ni + delta + 1, p.n1);

  // Tx2: sigma doubled columns aligned at Rx2 with Tx1's, alignment singles.
  for (int k = 1; k <= sigma; ++k) cols.v2.pair(k, s + k);
  for (int k : k_low.members()) cols.v2.unit(tau + k);

  // Tx3: top block, interleaved private levels, bottom sigma private levels.
  cols.v3.levels(1, std::min(tau, s));
  for (int k : k_high.members()) cols.v3.unit(p.ni + k);
  for (int k = 1; k <= sigma; ++k) cols.v3.unit(2 * s + k);
  return "align-doubled-levels";
}

// Every receive level at Rx1 is filled. Levels 1..ni at Rx1 are taken by
// Tx1 (level p), Tx2 (level p - Delta) or Tx3 (level p - s); a Tx1/Tx2 level l
// in (sigma, ni] costs Tx3 its private level l + s. Levels that cannot be
// filled for free are paired at distance Delta so one Tx1/Tx2 level covers two.
std::string align_low_scheme(const SystemParams& p, const DerivedParams& d, Columns& cols) {
  const int s = p.n1 - p.ni, delta = d.delta, sigma = d.sigma;
  std::vector<bool> used(static_cast<std::size_t>(p.n1) + 1, false);
  const auto mac = [&](ColumnList& v, int level) {
    v.unit(level);
    used[static_cast<std::size_t>(level)] = true;
  };
  std::vector<int> hard;
  for (int pos = 1; pos <= p.ni; ++pos) {
    if (pos <= sigma) mac(cols.v1, pos);
    else if (pos > s) cols.v3.unit(pos - s);
    else if (pos > delta && pos - delta <= sigma) mac(cols.v2, pos - delta);
    else hard.push_back(pos);
  }
  std::vector<bool> done(static_cast<std::size_t>(p.n1) + delta + 1, false);
  const auto is_hard = [&](int pos) { return std::binary_search(hard.begin(), hard.end(), pos); };
  for (int pos : hard) {
    if (done[static_cast<std::size_t>(pos)]) continue;
    done[static_cast<std::size_t>(pos)] = true;
    mac(cols.v1, pos);
    if (is_hard(pos + delta)) {
      done[static_cast<std::size_t>(pos + delta)] = true;
      mac(cols.v2, pos);
    }
  }
  cols.v1.levels(p.ni + 1, p.n1);
  for (int m = 1; m <= s; ++m)
    if (!used[static_cast<std::size_t>(sigma + m)]) cols.v3.unit(p.ni + m);
  return "align-low-filled-levels";
}

}  // namespace

Construction construct_precoders(const SystemParams& p, const ConstructionOptions& opts) {
  const DerivedParams d = derive(p);
  Construction out;
  out.regime = classify(p);
  Columns cols;
  switch (out.regime.branch) {
    case Branch::MacSilencedIC:
    case Branch::StrongIC:
      out.scheme = interference_channel_scheme(p.n1, p.ni, cols);
      break;
    case Branch::Weak:
      out.scheme = weak_scheme(p, d, cols);
      break;
    case Branch::AlignLow:
    case Branch::AlignHigh:
      if (d.delta == 0)
        throw DegenerateParameters("Delta = 0 inside the alignment regime: Tx1 and Tx2 are indistinguishable, "
                                   "no alignment construction exists");
      if (out.regime.branch == Branch::AlignLow)
        out.scheme = align_low_scheme(p, d, cols);
      else
        out.scheme = align_scheme(p, d, opts.k_convention, cols);
      break;
  }
  out.precoders = cols.build(p.levels());
  return out;
}

// ---------------------------------------------------------------------------
// Zero-error verification

EnumerationBudgetExceeded::EnumerationBudgetExceeded(int required, int guard)
    : std::runtime_error("exhaustive verification needs 2^" + std::to_string(required) +
                         " input combinations, above the guard of 2^" + std::to_string(guard) +
                         "; use rank-only evaluation instead"),
      required_(required),
      guard_(guard) {}

namespace {

std::vector<std::uint64_t> column_masks(const BitMatrix& m) {
  if (m.rows() > 64) throw std::invalid_argument("verification supports at most 64 signal levels");
  std::vector<std::uint64_t> out(m.cols(), 0);
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (m.get(r, c)) out[c] |= std::uint64_t{1} << r;
  return out;
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }
  std::size_t components() {
    std::size_t n = 0;
    for (std::size_t i = 0; i < parent_.size(); ++i) n += find(i) == i;
    return n;
  }

 private:
  std::vector<std::size_t> parent_;
};

// Received words with the packed inputs (x1 | x2 << k1 | x3 << (k1 + k2))
// that produce them, sorted by output so that colliding inputs are adjacent.
struct Observations {
  std::vector<std::uint64_t> output;
  std::vector<std::uint32_t> input;
};

// LSD radix sort of `key_bits`-wide keys.
void radix_sort(std::vector<std::uint64_t>& keys, int key_bits) {
  const int passes = std::max(1, (key_bits + 15) / 16);
  const int digit = (key_bits + passes - 1) / passes;
  const std::uint64_t mask = (std::uint64_t{1} << digit) - 1;
  std::vector<std::uint64_t> tmp(keys.size());
  std::vector<std::size_t> count((std::size_t{1} << digit) + 1);
  for (int pass = 0; pass < passes; ++pass) {
    const int shift = pass * digit;
    std::fill(count.begin(), count.end(), 0);
    for (std::uint64_t k : keys) ++count[((k >> shift) & mask) + 1];
    for (std::size_t i = 1; i < count.size(); ++i) count[i] += count[i - 1];
    for (std::uint64_t k : keys) tmp[count[(k >> shift) & mask]++] = k;
    keys.swap(tmp);
  }
}

Observations observe_all(const std::vector<std::uint64_t>& masks, int rows) {
  const int bits = static_cast<int>(masks.size());
  const std::size_t total = std::size_t{1} << bits;
  Observations obs;
  obs.output.assign(total, 0);
  // y(x) = y(x without its lowest set bit) ^ mask(lowest set bit).
  for (std::size_t x = 1; x < total; ++x)
    obs.output[x] = obs.output[x & (x - 1)] ^ masks[static_cast<std::size_t>(std::countr_zero(x))];
  obs.input.resize(total);

  if (rows + bits <= 64) {
    for (std::size_t x = 0; x < total; ++x) obs.output[x] = (obs.output[x] << bits) | x;
    radix_sort(obs.output, rows + bits);
    const std::uint64_t in_mask = (std::uint64_t{1} << bits) - 1;
    for (std::size_t i = 0; i < total; ++i) {
      obs.input[i] = static_cast<std::uint32_t>(obs.output[i] & in_mask);
      obs.output[i] >>= bits;
    }
    return obs;
  }
  std::vector<std::uint32_t> order(total);
  std::iota(order.begin(), order.end(), 0U);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::uint32_t a, std::uint32_t b) { return obs.output[a] < obs.output[b]; });
  std::vector<std::uint64_t> sorted(total);
  for (std::size_t i = 0; i < total; ++i) sorted[i] = obs.output[order[i]];
  obs.output.swap(sorted);
  obs.input.swap(order);
  return obs;
}

// log2 of the number of classes of the field (shift, width) of the input
// that can be told apart from the output.
double decodable_bits(const Observations& obs, int shift, int width) {
  if (width == 0) return 0.0;
  const std::uint32_t mask = (std::uint32_t{1} << width) - 1;
  DisjointSets sets(std::size_t{1} << width);
  for (std::size_t i = 1; i < obs.output.size(); ++i)
    if (obs.output[i] == obs.output[i - 1])
      sets.unite((obs.input[i] >> shift) & mask, (obs.input[i - 1] >> shift) & mask);
  return std::log2(static_cast<double>(sets.components()));
}

}  // namespace

ZeroErrorReport verify_zero_error(const SystemParams& p, const PrecoderTriple& v, int max_total_bits,
                                  unsigned jobs) {
  const int k1 = static_cast<int>(v.v1.cols()), k2 = static_cast<int>(v.v2.cols()),
            k3 = static_cast<int>(v.v3.cols());
  const int total = k1 + k2 + k3;
  const int guard = std::min(max_total_bits, 30);
  if (total > guard) throw EnumerationBudgetExceeded(total, guard);
  if (jobs == 0) jobs = std::max(1U, std::thread::hardware_concurrency());

  const ReceiverImages img = receiver_images(p, v);
  ZeroErrorReport rep;
  rep.k1 = k1;
  rep.k2 = k2;
  rep.k3 = k3;

  // Packed input layout is (x1 | x2 << k1 | x3 << (k1 + k2)) at both receivers.
  std::vector<std::uint64_t> rx1 = column_masks(img.a), rx2 = column_masks(img.d);
  for (auto m : column_masks(img.b)) rx1.push_back(m);
  for (auto m : column_masks(img.c)) rx1.push_back(m);
  for (auto m : column_masks(img.e)) rx2.push_back(m);
  for (auto m : column_masks(img.f)) rx2.push_back(m);

  const int rows = static_cast<int>(v.q());
  const auto receiver1 = [&] {
    const auto obs = observe_all(rx1, rows);
    rep.decodable1 = decodable_bits(obs, 0, k1);
    rep.decodable2 = decodable_bits(obs, k1, k2);
    rep.rx1_joint_unique = decodable_bits(obs, 0, k1 + k2) == static_cast<double>(k1 + k2);
  };
  const auto receiver2 = [&] {
    const auto obs = observe_all(rx2, rows);
    rep.decodable3 = decodable_bits(obs, k1 + k2, k3);
    rep.rx2_unique = rep.decodable3 == static_cast<double>(k3);
  };
  if (jobs > 1) {
    std::jthread second(receiver2);
    receiver1();
  } else {
    receiver1();
    receiver2();
  }
  rep.rank_rates = achievable_rates(p, v);
  rep.consistent_with_rank = rep.decodable1 == rep.rank_rates.r1 && rep.decodable2 == rep.rank_rates.r2 &&
                             rep.decodable3 == rep.rank_rates.r3;
  return rep;
}

}  // namespace ldmac
