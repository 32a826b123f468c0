#include "ldmac/oracle.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <map>
#include <random>
#include <stdexcept>
#include <thread>

#include "ldmac/bounds.hpp"

namespace ldmac::oracle {

namespace {

// Vectors are bit masks over the q receive levels: bit r - 1 is level r.
using Vec = std::uint32_t;

struct XorBasis {
  std::array<Vec, 32> pivot{};
  int rank = 0;

  bool insert(Vec v) {
    for (int i = 31; i >= 0 && v != 0; --i) {
      if (((v >> i) & 1U) == 0) continue;
      if (pivot[static_cast<std::size_t>(i)] == 0) {
        pivot[static_cast<std::size_t>(i)] = v;
        ++rank;
        return true;
      }
      v ^= pivot[static_cast<std::size_t>(i)];
    }
    return false;
  }
};

constexpr int kMaxExhaustiveDim = 8;
constexpr int kMaxLevels = 32;

struct Subspace {
  std::array<Vec, kMaxExhaustiveDim> v{};
  int k = 0;
};

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

// Number of k-dimensional subspaces of F2^t.
std::uint64_t gaussian_binomial(int t, int k) {
  long double num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    num *= std::pow(2.0L, t - i) - 1;
    den *= std::pow(2.0L, i + 1) - 1;
  }
  const long double r = std::round(num / den);
  return r >= 1.8e19L ? UINT64_MAX : static_cast<std::uint64_t>(r);
}

// Reduced echelon bases (pivot = lowest set bit) of every subspace of F2^t,
// extended by every choice of the rows t+1..rows: that is every subspace of
// F2^rows mapped injectively onto its top t rows.
void enumerate_subspaces(int rows, int t, std::vector<Subspace>& out) {
  for (int k = std::min(t, kMaxExhaustiveDim); k >= 0; --k) {
    std::vector<int> pivots(static_cast<std::size_t>(k));
    // Iterate pivot sets in lexicographic order.
    for (int i = 0; i < k; ++i) pivots[static_cast<std::size_t>(i)] = i;
    while (true) {
      // Free positions of basis vector j: non-pivot bits above its pivot, plus
      // the rows below t.
      std::vector<std::vector<int>> free(static_cast<std::size_t>(k));
      int total_free = 0;
      for (int j = 0; j < k; ++j) {
        for (int b = pivots[static_cast<std::size_t>(j)] + 1; b < t; ++b)
          if (std::find(pivots.begin(), pivots.end(), b) == pivots.end())
            free[static_cast<std::size_t>(j)].push_back(b);
        for (int b = t; b < rows; ++b) free[static_cast<std::size_t>(j)].push_back(b);
        total_free += static_cast<int>(free[static_cast<std::size_t>(j)].size());
      }
      if (total_free > 40) throw std::length_error("subspace enumeration too large");
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << total_free); ++bits) {
        Subspace s;
        s.k = k;
        int used = 0;
        for (int j = 0; j < k; ++j) {
          Vec v = Vec{1} << pivots[static_cast<std::size_t>(j)];
          for (int b : free[static_cast<std::size_t>(j)]) {
            if ((bits >> used) & 1U) v |= Vec{1} << b;
            ++used;
          }
          s.v[static_cast<std::size_t>(j)] = v;
        }
        out.push_back(s);
      }
      // Next pivot set.
      int i = k - 1;
      while (i >= 0 && pivots[static_cast<std::size_t>(i)] == t - k + i) --i;
      if (i < 0) break;
      ++pivots[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j) pivots[static_cast<std::size_t>(j)] = pivots[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
}

struct Shifts {
  int q, a, b, c, d, e, f;
  Vec mask;
  explicit Shifts(const SystemParams& p)
      : q(p.levels()),
        a(q - p.n1), b(q - p.n2), c(q - p.ni), d(q - p.ni), e(q - p.ni), f(q - p.n1),
        mask(q >= 32 ? ~Vec{0} : (Vec{1} << q) - 1) {}
  Vec sh(Vec v, int k) const { return (v << k) & mask; }
};

struct Triple {
  std::vector<Vec> v1, v2, v3;
};

RateTriple rates_of(const Shifts& s, const Triple& t) {
  const auto rank_of = [](std::initializer_list<std::pair<const std::vector<Vec>*, int>> parts, const Shifts& sh) {
    XorBasis basis;
    for (auto [vs, k] : parts)
      for (Vec v : *vs) basis.insert(sh.sh(v, k));
    return basis.rank;
  };
  const int abc = rank_of({{&t.v1, s.a}, {&t.v2, s.b}, {&t.v3, s.c}}, s);
  const int bc = rank_of({{&t.v2, s.b}, {&t.v3, s.c}}, s);
  const int ac = rank_of({{&t.v1, s.a}, {&t.v3, s.c}}, s);
  const int def = rank_of({{&t.v1, s.d}, {&t.v2, s.e}, {&t.v3, s.f}}, s);
  const int de = rank_of({{&t.v1, s.d}, {&t.v2, s.e}}, s);
  return {abc - bc, abc - ac, def - de};
}

gf2::BitMatrix to_matrix(const std::vector<Vec>& cols, int q) {
  gf2::BitMatrix m(static_cast<std::size_t>(q), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (int r = 0; r < q; ++r)
      if ((cols[c] >> r) & 1U) m.set(static_cast<std::size_t>(r), c);
  return m;
}

SearchResult package(const SystemParams& p, const Triple& t, bool complete, SearchMode mode, std::uint64_t evaluated) {
  const Shifts s(p);
  SearchResult out;
  out.rates = rates_of(s, t);
  out.precoders = {to_matrix(t.v1, s.q), to_matrix(t.v2, s.q), to_matrix(t.v3, s.q)};
  out.complete = complete;
  out.mode_used = mode;
  out.evaluated = evaluated;
  return out;
}

// ---------------------------------------------------------------------------
// Exhaustive branch-and-bound

// Without loss of generality every column carries one decodable bit: the
// optimum over all precoders equals the optimum over column spaces on which
// A, B and F are injective with dim[A B C] = k1 + k2 + dim C and
// F(U3) meeting D + E trivially.
class Exhaustive {
 public:
  Exhaustive(const SystemParams& p, const SearchBudget& budget) : p_(p), s_(p), budget_(budget) {
    enumerate_subspaces(std::max(p.n1, p.ni), p.n1, cand1_);
    enumerate_subspaces(std::max(p.n2, p.ni), p.n2, cand2_);
    enumerate_subspaces(std::max(p.ni, p.n1), p.n1, cand3_);
    for (int r = 0; r < std::max(p.n1, p.ni); ++r) l12_.insert(s_.sh(Vec{1} << r, s_.a));
    for (int r = 0; r < std::max(p.n2, p.ni); ++r) {
      l12_.insert(s_.sh(Vec{1} << r, s_.b));
      l2_.insert(s_.sh(Vec{1} << r, s_.b));
    }
  }

  // Parallel pass for the optimum value, then a sequential pass for the
  // first witness in enumeration order so the result is order-independent.
  SearchResult run(int seed_value) {
    const auto start = std::chrono::steady_clock::now();
    std::atomic<int> best{seed_value};
    std::atomic<std::size_t> next{0};
    std::atomic<std::uint64_t> evaluated{0};
    std::atomic<bool> timed_out{false};
    unsigned jobs = budget_.jobs != 0 ? budget_.jobs : std::max(1U, std::thread::hardware_concurrency());
    jobs = std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(1, cand3_.size())));
    {
      std::vector<std::jthread> workers;
      for (unsigned w = 0; w < jobs; ++w)
        workers.emplace_back([&] {
          std::uint64_t local = 0;
          for (std::size_t i; (i = next.fetch_add(1)) < cand3_.size();) {
            if (std::chrono::steady_clock::now() - start > budget_.time_guard) {
              timed_out = true;
              break;
            }
            explore(cand3_[i], best, false, nullptr, local);
          }
          evaluated += local;
        });
    }
    Triple witness;
    std::atomic<int> target{best.load() - 1};
    std::uint64_t local = 0;
    for (const Subspace& u3 : cand3_)
      if (explore(u3, target, true, &witness, local)) break;
    return package(p_, witness, !timed_out, SearchMode::Exhaustive, evaluated + local);
  }

 private:
  // Explores all (U1, U2) under a fixed U3, raising `best` on improvement.
  // In witness mode returns true at the first triple exceeding `best`.
  bool explore(const Subspace& u3, std::atomic<int>& best, bool witness_mode, Triple* witness, std::uint64_t& evaluated) {
    XorBasis c;
    for (int j = 0; j < u3.k; ++j) c.insert(s_.sh(u3.v[static_cast<std::size_t>(j)], s_.c));
    XorBasis l12c = l12_;
    for (int j = 0; j < u3.k; ++j) l12c.insert(s_.sh(u3.v[static_cast<std::size_t>(j)], s_.c));
    if (u3.k + l12c.rank - c.rank <= best.load()) return false;

    for (const Subspace& u1 : cand1_) {
      if (u3.k + u1.k + p_.n2 <= best.load()) continue;
      XorBasis ac = c;
      bool ok = true;
      for (int j = 0; j < u1.k && ok; ++j) ok = ac.insert(s_.sh(u1.v[static_cast<std::size_t>(j)], s_.a));
      if (!ok) continue;
      XorBasis d;
      for (int j = 0; j < u1.k; ++j) d.insert(s_.sh(u1.v[static_cast<std::size_t>(j)], s_.d));
      XorBasis df = d;
      for (int j = 0; j < u3.k && ok; ++j) ok = df.insert(s_.sh(u3.v[static_cast<std::size_t>(j)], s_.f));
      if (!ok) continue;
      XorBasis l2ac = ac;
      for (Vec v : l2_.pivot)
        if (v != 0) l2ac.insert(v);
      if (u3.k + u1.k + l2ac.rank - ac.rank <= best.load()) continue;

      for (const Subspace& u2 : cand2_) {
        const int total = u1.k + u2.k + u3.k;
        if (total <= best.load()) break;  // candidates are sorted by decreasing dimension
        ++evaluated;
        XorBasis abc = ac;
        for (int j = 0; j < u2.k && ok; ++j) ok = abc.insert(s_.sh(u2.v[static_cast<std::size_t>(j)], s_.b));
        if (!ok) {
          ok = true;
          continue;
        }
        XorBasis def = d;
        for (int j = 0; j < u2.k; ++j) def.insert(s_.sh(u2.v[static_cast<std::size_t>(j)], s_.e));
        for (int j = 0; j < u3.k && ok; ++j) ok = def.insert(s_.sh(u3.v[static_cast<std::size_t>(j)], s_.f));
        if (!ok) {
          ok = true;
          continue;
        }
        if (witness_mode) {
          witness->v1.assign(u1.v.begin(), u1.v.begin() + u1.k);
          witness->v2.assign(u2.v.begin(), u2.v.begin() + u2.k);
          witness->v3.assign(u3.v.begin(), u3.v.begin() + u3.k);
          return true;
        }
        int cur = best.load();
        while (total > cur && !best.compare_exchange_weak(cur, total)) {
        }
      }
    }
    return false;
  }

  SystemParams p_;
  Shifts s_;
  SearchBudget budget_;
  std::vector<Subspace> cand1_, cand2_, cand3_;
  XorBasis l12_, l2_;
};

// ---------------------------------------------------------------------------
// Randomized structured search

Triple randomized_search(const SystemParams& p, const SearchBudget& budget, std::uint64_t& evaluated) {
  const Shifts s(p);
  std::mt19937_64 rng(budget.seed);
  const int rows[3] = {std::max(p.n1, p.ni), std::max(p.n2, p.ni), std::max(p.ni, p.n1)};
  const auto pick = [&rng](int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); };

  const auto random_column = [&](int user) -> Vec {
    const int r = rows[user];
    if (r == 0) return 0;
    const int kind = pick(8);
    Vec v = Vec{1} << pick(r);
    if (kind >= 5) v |= Vec{1} << pick(r);                    // doubled level
    if (kind == 7) v = static_cast<Vec>(rng()) & ((Vec{1} << r) - 1);  // unstructured
    return v;
  };
  // Each wasted column costs more than a decoded bit gains, which keeps the
  // search on fully decodable configurations.
  const auto score = [&](const Triple& t, int& sum) {
    const RateTriple r = rates_of(s, t);
    sum = r.sum();
    const int waste = static_cast<int>(t.v1.size() + t.v2.size() + t.v3.size()) - sum;
    return 4 * sum - 5 * waste;
  };

  Triple best;
  int best_sum = 0;
  const auto start = std::chrono::steady_clock::now();
  for (int restart = 0; restart < budget.restarts; ++restart) {
    Triple cur;
    int cur_sum = 0;
    int cur_score = score(cur, cur_sum);
    for (int move = 0; move < budget.moves_per_restart; ++move) {
      Triple next = cur;
      const int user = pick(3);
      if (rows[user] == 0) continue;
      std::vector<Vec>& cols = user == 0 ? next.v1 : user == 1 ? next.v2 : next.v3;
      const int kind = pick(3);
      const int total = static_cast<int>(next.v1.size() + next.v2.size() + next.v3.size());
      if ((kind == 0 || cols.empty()) && total < budget.max_total_columns) cols.push_back(random_column(user));
      else if (kind == 1 && !cols.empty()) cols.erase(cols.begin() + pick(static_cast<int>(cols.size())));
      else if (!cols.empty()) cols[static_cast<std::size_t>(pick(static_cast<int>(cols.size())))] = random_column(user);
      int next_sum = 0;
      const int next_score = score(next, next_sum);
      ++evaluated;
      if (next_score >= cur_score || pick(256) == 0) {
        cur = std::move(next);
        cur_score = next_score;
        cur_sum = next_sum;
        if (cur_sum > best_sum) {
          best_sum = cur_sum;
          best = cur;
        }
      }
    }
    if (std::chrono::steady_clock::now() - start > budget.time_guard) break;
  }
  return best;
}

}  // namespace

std::uint64_t canonical_subspace_count(int rows, int decoded) {
  std::uint64_t total = 0;
  for (int k = 0; k <= decoded; ++k) {
    const int extra = k * (rows - decoded);
    const std::uint64_t maps = extra >= 64 ? UINT64_MAX : std::uint64_t{1} << extra;
    const std::uint64_t add = saturating_mul(gaussian_binomial(decoded, k), maps);
    total = add > UINT64_MAX - total ? UINT64_MAX : total + add;
  }
  return total;
}

SearchResult best_linear_sum_rate(const SystemParams& p, const SearchBudget& budget) {
  p.validate();
  if (p.levels() > kMaxLevels) throw std::invalid_argument("search supports at most 32 signal levels");

  std::uint64_t evaluated = 0;
  SearchBudget seed_budget = budget;
  seed_budget.restarts = std::min(budget.restarts, 8);
  seed_budget.moves_per_restart = std::min(budget.moves_per_restart, 1500);

  const bool exhaustive_ok =
      budget.mode == SearchMode::Exhaustive && p.n1 <= kMaxExhaustiveDim &&
      canonical_subspace_count(std::max(p.n1, p.ni), p.n1) <= budget.canonical_ceiling &&
      canonical_subspace_count(std::max(p.n2, p.ni), p.n2) <= budget.canonical_ceiling;
  if (!exhaustive_ok) {
    const Triple t = randomized_search(p, budget, evaluated);
    return package(p, t, false, SearchMode::Randomized, evaluated);
  }
  // A quick randomized run only seeds the pruning threshold.
  const Triple seed = randomized_search(p, seed_budget, evaluated);
  const int seed_value = rates_of(Shifts(p), seed).sum();
  Exhaustive search(p, budget);
  SearchResult out = search.run(seed_value - 1);
  out.evaluated += evaluated;
  return out;
}

// ---------------------------------------------------------------------------
// Entropy inequality for shifted sums

JointDistribution::JointDistribution(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0 || rows * cols > 30) throw std::invalid_argument("matrix distribution supports at most 30 entries");
}

JointDistribution JointDistribution::point_mass(int rows, int cols, std::uint32_t matrix) {
  JointDistribution d(rows, cols);
  d.add(matrix, 1);
  return d;
}

JointDistribution JointDistribution::uniform(int rows, int cols) {
  JointDistribution d(rows, cols);
  if (rows * cols > 20) throw std::length_error("uniform distribution support too large");
  for (std::uint32_t x = 0; x < (std::uint32_t{1} << (rows * cols)); ++x) d.add(x, 1);
  return d;
}

void JointDistribution::add(std::uint32_t matrix, std::uint64_t weight) {
  if (weight == 0) return;
  const int bits = rows_ * cols_;
  if (bits < 32 && (matrix >> bits) != 0) throw std::invalid_argument("matrix key has bits outside the shape");
  auto it = std::lower_bound(atoms_.begin(), atoms_.end(), matrix,
                             [](const auto& atom, std::uint32_t key) { return atom.first < key; });
  if (it != atoms_.end() && it->first == matrix) it->second += weight;
  else atoms_.insert(it, {matrix, weight});
  total_ += weight;
}

Rational JointDistribution::probability(std::uint32_t matrix) const {
  auto it = std::lower_bound(atoms_.begin(), atoms_.end(), matrix,
                             [](const auto& atom, std::uint32_t key) { return atom.first < key; });
  if (it == atoms_.end() || it->first != matrix) return 0;
  return Rational(static_cast<std::int64_t>(it->second), static_cast<std::int64_t>(total_));
}

JointDistribution JointDistribution::rows_slice(int i, int j) const {
  if (i < 1 || j > rows_ || i > j + 1) throw std::out_of_range("row slice outside the matrix");
  JointDistribution out(j - i + 1, cols_);
  const int width = (j - i + 1) * cols_;
  const std::uint32_t mask = width >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << width) - 1;
  std::map<std::uint32_t, std::uint64_t> merged;
  for (auto [key, w] : atoms_) merged[(key >> ((i - 1) * cols_)) & mask] += w;
  for (auto [key, w] : merged) out.add(key, w);
  return out;
}

long double JointDistribution::entropy_bits() const {
  if (total_ == 0) throw std::logic_error("entropy of an empty distribution");
  const long double t = static_cast<long double>(total_);
  long double acc = 0;
  for (auto [key, w] : atoms_) {
    const long double x = static_cast<long double>(w);
    acc += x * std::log2(x);
  }
  return std::log2(t) - acc / t;
}

JointDistribution xor_convolve(const JointDistribution& x, const JointDistribution& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) throw std::invalid_argument("xor of differently shaped matrices");
  std::map<std::uint32_t, std::uint64_t> merged;
  for (auto [kx, wx] : x.atoms())
    for (auto [ky, wy] : y.atoms()) merged[kx ^ ky] += wx * wy;
  JointDistribution out(x.rows(), x.cols());
  for (auto [key, w] : merged) out.add(key, w);
  return out;
}

Lemma1Result lemma1_gap(const JointDistribution& a, const JointDistribution& b) {
  const int n = a.rows(), m = a.cols();
  if (b.cols() != m || b.rows() < n) throw std::invalid_argument("B must have the columns of A and at least as many rows");
  if (a.total() == 0 || b.total() == 0) throw std::invalid_argument("empty distribution");
  if (saturating_mul(a.atoms().size(), b.atoms().size()) > kLemma1SupportGuard)
    throw std::length_error("support product " + std::to_string(a.atoms().size()) + " x " +
                            std::to_string(b.atoms().size()) + " exceeds the guard of 2^24");
  if (a.total() > UINT64_MAX / b.total()) throw std::overflow_error("distribution weights too large");
  Lemma1Result r;
  r.n = n;
  r.delta = b.rows() - n;
  r.m = m;
  r.h_top = n == 0 ? 0 : xor_convolve(a, b.rows_slice(1, n)).entropy_bits();
  r.h_shifted = n == 0 ? 0 : xor_convolve(a, b.rows_slice(r.delta + 1, n + r.delta)).entropy_bits();
  r.gap = r.h_top - r.h_shifted;
  r.bound = Rational(m) * phi2(n, r.delta);
  r.holds = r.gap <= static_cast<long double>(r.bound.to_double()) + kEntropySlack;
  return r;
}

JointDistribution random_distribution(int rows, int cols, std::mt19937_64& rng) {
  JointDistribution d(rows, cols);
  const int bits = rows * cols;
  const std::uint32_t mask = bits >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << bits) - 1;
  const auto pick = [&rng](std::uint64_t n) { return rng() % n; };
  switch (pick(5)) {
    case 0:  // point mass
      d.add(static_cast<std::uint32_t>(rng()) & mask, 1);
      break;
    case 1:
    case 2: {  // sparse support with random weights
      const std::uint64_t atoms = 1 + pick(12);
      for (std::uint64_t i = 0; i < atoms; ++i) d.add(static_cast<std::uint32_t>(rng()) & mask, 1 + pick(30));
      break;
    }
    case 3: {  // independent biased entries on a random set of positions, the rest fixed
      const std::uint32_t fixed = static_cast<std::uint32_t>(rng()) & mask;
      std::vector<int> free;
      for (int b = 0; b < bits; ++b)
        if (pick(3) == 0 && free.size() < 8) free.push_back(b);
      std::vector<std::pair<std::uint64_t, std::uint64_t>> bias;
      for (std::size_t i = 0; i < free.size(); ++i) bias.emplace_back(1 + pick(5), 1 + pick(5));
      for (std::uint32_t x = 0; x < (std::uint32_t{1} << free.size()); ++x) {
        std::uint32_t key = fixed;
        std::uint64_t w = 1;
        for (std::size_t i = 0; i < free.size(); ++i) {
          const bool on = (x >> i) & 1U;
          key &= ~(std::uint32_t{1} << free[i]);
          if (on) key |= std::uint32_t{1} << free[i];
          w *= on ? bias[i].second : bias[i].first;
        }
        d.add(key, w);
      }
      break;
    }
    default: {  // uniform over a random coset of a small subspace
      const std::uint32_t offset = static_cast<std::uint32_t>(rng()) & mask;
      const int dim = static_cast<int>(pick(static_cast<std::uint64_t>(std::min(bits, 6)) + 1));
      std::vector<std::uint32_t> gens;
      for (int i = 0; i < dim; ++i) gens.push_back(static_cast<std::uint32_t>(rng()) & mask);
      for (std::uint32_t x = 0; x < (std::uint32_t{1} << dim); ++x) {
        std::uint32_t key = offset;
        for (int i = 0; i < dim; ++i)
          if ((x >> i) & 1U) key ^= gens[static_cast<std::size_t>(i)];
        d.add(key, 1);
      }
      break;
    }
  }
  return d;
}

long double max_lemma1_gap_search(int n, int delta, int m, int restarts, std::uint64_t seed) {
  if (n < 0 || delta < 0 || m < 0) throw std::invalid_argument("negative dimensions");
  std::mt19937_64 rng(seed);
  const int bits_b = (n + delta) * m;
  const std::uint32_t mask_b = (std::uint32_t{1} << bits_b) - 1;
  long double best = 0;
  for (int r = 0; r < restarts; ++r) {
    JointDistribution a = random_distribution(n, m, rng);
    JointDistribution b = random_distribution(n + delta, m, rng);
    long double cur = lemma1_gap(a, b).gap;
    for (int move = 0; move < 200; ++move) {
      // Perturb B: move weight onto a fresh atom or reweight an existing one.
      JointDistribution nb(n + delta, m);
      for (auto [key, w] : b.atoms()) nb.add(key, rng() % 4 == 0 ? 1 + rng() % 30 : w);
      if (rng() % 3 == 0 && nb.atoms().size() < 16) nb.add(static_cast<std::uint32_t>(rng()) & mask_b, 1 + rng() % 30);
      JointDistribution na = rng() % 4 == 0 ? random_distribution(n, m, rng) : a;
      const long double g = lemma1_gap(na, nb).gap;
      if (g >= cur) {
        cur = g;
        a = std::move(na);
        b = std::move(nb);
      }
    }
    best = std::max(best, cur);
  }
  return best;
}

}  // namespace ldmac::oracle
