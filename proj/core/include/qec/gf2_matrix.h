#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qec {

using BitVector = std::vector<std::uint8_t>;

inline constexpr int kMaxMatrixColumns = 64;

// Bit i of a row mask is column i.
std::uint64_t to_mask(const BitVector& bits);
BitVector from_mask(std::uint64_t mask, int length);
std::string bits_to_string(const BitVector& bits);
BitVector bits_from_string(std::string_view text);

// Dense GF(2) matrix with at most 64 columns.
class Gf2Matrix {
 public:
  Gf2Matrix(int cols, std::vector<std::uint64_t> rows);
  static Gf2Matrix from_rows(int cols, const std::vector<BitVector>& rows);

  int cols() const { return cols_; }
  int num_rows() const { return static_cast<int>(rows_.size()); }
  const std::vector<std::uint64_t>& rows() const { return rows_; }
  BitVector row(int i) const { return from_mask(rows_[static_cast<std::size_t>(i)], cols_); }

  int rank() const;
  // Reduced row echelon form with nonzero rows only. Pivots are the lowest
  // set column in each row, in increasing order.
  Gf2Matrix rref() const;
  // Basis of {x : M x^T = 0}.
  Gf2Matrix null_space() const;
  // Row space of `other` is a subspace of this row space.
  bool contains_row_space(const Gf2Matrix& other) const;
  bool in_row_space(std::uint64_t v) const;
  // Reduces v against this matrix, assumed to be in RREF: the result has a
  // zero at every pivot column. This is the lexicographically smallest member
  // of v + rowspace when words are read from column 0.
  std::uint64_t reduce(std::uint64_t v) const;
  // Entry (i, j) = <row_i(this), row_j(other)> mod 2.
  std::vector<std::vector<std::uint8_t>> times_transpose(const Gf2Matrix& other) const;

 private:
  int cols_;
  std::vector<std::uint64_t> rows_;
};

// Lowest set column of a nonzero mask.
int lowest_bit(std::uint64_t v);

}  // namespace qec
