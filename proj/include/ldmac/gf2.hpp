#pragma once

// Dense matrices over the binary field.
//
// Row 1 is the top row, i.e. the most significant signal level. Rows are
// packed into 64-bit words so elimination works a word at a time.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace ldmac::gf2 {

class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);

  static BitMatrix zero(std::size_t rows, std::size_t cols) { return BitMatrix(rows, cols); }
  static BitMatrix identity(std::size_t n);
  /// Explicit power S^k of the q x q down-shift matrix.
  static BitMatrix shift_matrix(std::size_t q, std::size_t k);
  /// Builds from nested 0/1 lists; every inner list must have the same length.
  static BitMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows);
  /// Builds from strings of '0'/'1' characters, one string per row.
  static BitMatrix from_strings(const std::vector<std::string>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  // Zero-based element access.
  bool get(std::size_t r, std::size_t c) const {
    return (data_[r * words_ + c / 64] >> (c % 64)) & 1U;
  }
  void set(std::size_t r, std::size_t c, bool v = true);
  void flip(std::size_t r, std::size_t c) { data_[r * words_ + c / 64] ^= std::uint64_t{1} << (c % 64); }

  /// Column c as a list of set row indices (zero-based).
  std::vector<std::size_t> column_support(std::size_t c) const;
  std::vector<std::string> to_strings() const;

  BitMatrix& operator^=(const BitMatrix& other);
  friend BitMatrix operator^(BitMatrix a, const BitMatrix& b) { return a ^= b; }
  friend bool operator==(const BitMatrix& a, const BitMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> data_;
};

BitMatrix multiply(const BitMatrix& a, const BitMatrix& b);

/// Places B to the right of A. Requires equal row counts.
BitMatrix hstack(const BitMatrix& a, const BitMatrix& b);
BitMatrix hstack(std::initializer_list<const BitMatrix*> parts);
/// Places A on top of B. Requires equal column counts.
BitMatrix vstack(const BitMatrix& a, const BitMatrix& b);
/// Rows i..j inclusive, one-based: 1 <= i <= j <= rows.
BitMatrix rows_slice(const BitMatrix& a, std::size_t i, std::size_t j);

/// S^k * M for the down-shift S of size rows(M): row i takes row i-k, the top k rows become zero.
BitMatrix shift_apply(std::size_t k, const BitMatrix& m);

/// Dimension of the column space.
std::size_t rank(const BitMatrix& m);

}  // namespace ldmac::gf2
