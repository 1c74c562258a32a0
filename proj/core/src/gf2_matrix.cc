#include "qec/gf2_matrix.h"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace qec {

std::uint64_t to_mask(const BitVector& bits) {
  if (bits.size() > static_cast<std::size_t>(kMaxMatrixColumns)) {
    throw std::invalid_argument("bit vector longer than 64 positions");
  }
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] > 1) throw std::invalid_argument("bit vector entries must be 0 or 1");
    if (bits[i]) m |= std::uint64_t{1} << i;
  }
  return m;
}

BitVector from_mask(std::uint64_t mask, int length) {
  BitVector bits(static_cast<std::size_t>(length), 0);
  for (int i = 0; i < length; ++i) bits[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((mask >> i) & 1U);
  return bits;
}

std::string bits_to_string(const BitVector& bits) {
  std::string s;
  s.reserve(bits.size());
  for (std::uint8_t b : bits) s += static_cast<char>('0' + b);
  return s;
}

BitVector bits_from_string(std::string_view text) {
  BitVector bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("bit string must contain only 0 and 1: '" + std::string(text) + "'");
    }
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return bits;
}

int lowest_bit(std::uint64_t v) { return std::countr_zero(v); }

Gf2Matrix::Gf2Matrix(int cols, std::vector<std::uint64_t> rows) : cols_(cols), rows_(std::move(rows)) {
  if (cols < 0 || cols > kMaxMatrixColumns) {
    throw std::invalid_argument("GF(2) matrix supports at most 64 columns");
  }
  const std::uint64_t valid = cols == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << cols) - 1);
  for (std::uint64_t r : rows_) {
    if (r & ~valid) throw std::invalid_argument("row has bits beyond the column count");
  }
}

Gf2Matrix Gf2Matrix::from_rows(int cols, const std::vector<BitVector>& rows) {
  std::vector<std::uint64_t> masks;
  for (const BitVector& r : rows) {
    if (static_cast<int>(r.size()) != cols) throw std::invalid_argument("row length mismatch");
    masks.push_back(to_mask(r));
  }
  return Gf2Matrix(cols, std::move(masks));
}

Gf2Matrix Gf2Matrix::rref() const {
  std::vector<std::uint64_t> work = rows_;
  std::vector<std::uint64_t> out;
  for (int col = 0; col < cols_; ++col) {
    const std::uint64_t bit = std::uint64_t{1} << col;
    auto it = std::find_if(work.begin(), work.end(), [bit](std::uint64_t r) { return r & bit; });
    if (it == work.end()) continue;
    const std::uint64_t pivot = *it;
    work.erase(it);
    for (std::uint64_t& r : work) {
      if (r & bit) r ^= pivot;
    }
    for (std::uint64_t& r : out) {
      if (r & bit) r ^= pivot;
    }
    out.push_back(pivot);
  }
  return Gf2Matrix(cols_, std::move(out));
}

int Gf2Matrix::rank() const { return rref().num_rows(); }

std::uint64_t Gf2Matrix::reduce(std::uint64_t v) const {
  for (std::uint64_t r : rows_) {
    if (r == 0) continue;
    if (v & (std::uint64_t{1} << lowest_bit(r))) v ^= r;
  }
  return v;
}

bool Gf2Matrix::in_row_space(std::uint64_t v) const { return rref().reduce(v) == 0; }

bool Gf2Matrix::contains_row_space(const Gf2Matrix& other) const {
  if (other.cols_ != cols_) return false;
  const Gf2Matrix reduced = rref();
  for (std::uint64_t r : other.rows_) {
    if (reduced.reduce(r) != 0) return false;
  }
  return true;
}

Gf2Matrix Gf2Matrix::null_space() const {
  const Gf2Matrix reduced = rref();
  std::vector<int> pivots;
  std::uint64_t pivot_mask = 0;
  for (std::uint64_t r : reduced.rows_) {
    pivots.push_back(lowest_bit(r));
    pivot_mask |= std::uint64_t{1} << lowest_bit(r);
  }
  std::vector<std::uint64_t> basis;
  for (int free = 0; free < cols_; ++free) {
    if (pivot_mask & (std::uint64_t{1} << free)) continue;
    std::uint64_t v = std::uint64_t{1} << free;
    for (std::size_t i = 0; i < reduced.rows_.size(); ++i) {
      if (reduced.rows_[i] & (std::uint64_t{1} << free)) v |= std::uint64_t{1} << pivots[i];
    }
    basis.push_back(v);
  }
  return Gf2Matrix(cols_, std::move(basis));
}

std::vector<std::vector<std::uint8_t>> Gf2Matrix::times_transpose(const Gf2Matrix& other) const {
  if (other.cols_ != cols_) throw std::invalid_argument("column count mismatch");
  std::vector<std::vector<std::uint8_t>> out(rows_.size(), std::vector<std::uint8_t>(other.rows_.size(), 0));
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (std::size_t j = 0; j < other.rows_.size(); ++j) {
      out[i][j] = static_cast<std::uint8_t>(std::popcount(rows_[i] & other.rows_[j]) & 1);
    }
  }
  return out;
}

}  // namespace qec
