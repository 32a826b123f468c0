#include "ldmac/gf2.hpp"

#include <stdexcept>
#include <utility>

namespace ldmac::gf2 {

namespace {

std::size_t words_for(std::size_t cols) { return (cols + 63) / 64; }

}  // namespace

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_(words_for(cols)), data_(rows * words_for(cols), 0) {}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BitMatrix BitMatrix::shift_matrix(std::size_t q, std::size_t k) {
  BitMatrix s(q, q);
  for (std::size_t i = k; i < q; ++i) s.set(i, i - k);
  return s;
}

BitMatrix BitMatrix::from_rows(std::initializer_list<std::initializer_list<int>> rows) {
  const std::size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
  BitMatrix m(rows.size(), cols);
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != cols) throw std::invalid_argument("from_rows: ragged rows");
    std::size_t c = 0;
    for (int v : row) {
      if (v != 0 && v != 1) throw std::invalid_argument("from_rows: entries must be 0 or 1");
      m.set(r, c++, v == 1);
    }
    ++r;
  }
  return m;
}

BitMatrix BitMatrix::from_strings(const std::vector<std::string>& rows, std::size_t cols) {
  BitMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw std::invalid_argument("from_strings: row " + std::to_string(r + 1) + " has " +
                                  std::to_string(rows[r].size()) + " entries, expected " + std::to_string(cols));
    for (std::size_t c = 0; c < cols; ++c) {
      const char ch = rows[r][c];
      if (ch != '0' && ch != '1') throw std::invalid_argument("from_strings: entries must be '0' or '1'");
      m.set(r, c, ch == '1');
    }
  }
  return m;
}

void BitMatrix::set(std::size_t r, std::size_t c, bool v) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("BitMatrix::set index out of range");
  auto& w = data_[r * words_ + c / 64];
  const std::uint64_t bit = std::uint64_t{1} << (c % 64);
  w = v ? (w | bit) : (w & ~bit);
}

std::vector<std::size_t> BitMatrix::column_support(std::size_t c) const {
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < rows_; ++r)
    if (get(r, c)) out.push_back(r);
  return out;
}

std::vector<std::string> BitMatrix::to_strings() const {
  std::vector<std::string> out(rows_, std::string(cols_, '0'));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (get(r, c)) out[r][c] = '1';
  return out;
}

BitMatrix& BitMatrix::operator^=(const BitMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("xor: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] ^= other.data_[i];
  return *this;
}

BitMatrix multiply(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("multiply: inner dimensions differ");
  BitMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (a.get(i, k))
        for (std::size_t j = 0; j < b.cols(); ++j)
          if (b.get(k, j)) out.flip(i, j);
  return out;
}

BitMatrix hstack(const BitMatrix& a, const BitMatrix& b) { return hstack({&a, &b}); }

BitMatrix hstack(std::initializer_list<const BitMatrix*> parts) {
  std::size_t rows = parts.size() == 0 ? 0 : (*parts.begin())->rows();
  std::size_t cols = 0;
  for (const auto* p : parts) {
    if (p->rows() != rows) throw std::invalid_argument("hstack: row counts differ");
    cols += p->cols();
  }
  BitMatrix out(rows, cols);
  std::size_t offset = 0;
  for (const auto* p : parts) {
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < p->cols(); ++c)
        if (p->get(r, c)) out.set(r, offset + c);
    offset += p->cols();
  }
  return out;
}

BitMatrix vstack(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column counts differ");
  BitMatrix out(a.rows() + b.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (a.get(r, c)) out.set(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c)
      if (b.get(r, c)) out.set(a.rows() + r, c);
  return out;
}

BitMatrix rows_slice(const BitMatrix& a, std::size_t i, std::size_t j) {
  if (i < 1 || i > j || j > a.rows())
    throw std::out_of_range("rows_slice: need 1 <= i <= j <= rows, got i=" + std::to_string(i) +
                            " j=" + std::to_string(j) + " rows=" + std::to_string(a.rows()));
  BitMatrix out(j - i + 1, a.cols());
  for (std::size_t r = i - 1; r < j; ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (a.get(r, c)) out.set(r - (i - 1), c);
  return out;
}

BitMatrix shift_apply(std::size_t k, const BitMatrix& m) {
  BitMatrix out(m.rows(), m.cols());
  for (std::size_t r = k; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m.get(r - k, c)) out.set(r, c);
  return out;
}

std::size_t rank(const BitMatrix& m) {
  if (m.empty()) return 0;
  // Row rank equals column rank; eliminate on packed rows.
  const std::size_t words = (m.cols() + 63) / 64;
  std::vector<std::uint64_t> rows(m.rows() * words, 0);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m.get(r, c)) rows[r * words + c / 64] |= std::uint64_t{1} << (c % 64);

  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    const std::size_t w = c / 64;
    const std::uint64_t bit = std::uint64_t{1} << (c % 64);
    std::size_t pivot = rank;
    while (pivot < m.rows() && !(rows[pivot * words + w] & bit)) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != rank)
      for (std::size_t k = 0; k < words; ++k) std::swap(rows[pivot * words + k], rows[rank * words + k]);
    for (std::size_t r = rank + 1; r < m.rows(); ++r)
      if (rows[r * words + w] & bit)
        for (std::size_t k = w; k < words; ++k) rows[r * words + k] ^= rows[rank * words + k];
    ++rank;
  }
  return rank;
}

}  // namespace ldmac::gf2
