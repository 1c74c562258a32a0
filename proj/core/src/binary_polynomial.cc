#include "qec/binary_polynomial.h"

#include <algorithm>
#include <stdexcept>

namespace qec {

BinaryPolynomial::BinaryPolynomial(std::vector<std::uint8_t> coefficients) : coefficients_(std::move(coefficients)) {
  for (std::uint8_t& c : coefficients_) {
    if (c > 1) throw std::invalid_argument("binary polynomial coefficients must be 0 or 1");
  }
  trim();
}

void BinaryPolynomial::trim() {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

BinaryPolynomial BinaryPolynomial::monomial(int degree) {
  if (degree < 0) throw std::invalid_argument("monomial degree must be non-negative");
  std::vector<std::uint8_t> c(static_cast<std::size_t>(degree) + 1, 0);
  c.back() = 1;
  return BinaryPolynomial(std::move(c));
}

BinaryPolynomial BinaryPolynomial::from_bit_string(std::string_view bits) {
  std::vector<std::uint8_t> c;
  for (char ch : bits) {
    if (ch != '0' && ch != '1') throw std::invalid_argument("polynomial bit string must contain only 0 and 1");
    c.push_back(static_cast<std::uint8_t>(ch - '0'));
  }
  return BinaryPolynomial(std::move(c));
}

std::uint8_t BinaryPolynomial::coefficient(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coefficients_[static_cast<std::size_t>(i)];
}

BinaryPolynomial BinaryPolynomial::operator+(const BinaryPolynomial& other) const {
  std::vector<std::uint8_t> c(std::max(coefficients_.size(), other.coefficients_.size()), 0);
  for (std::size_t i = 0; i < coefficients_.size(); ++i) c[i] ^= coefficients_[i];
  for (std::size_t i = 0; i < other.coefficients_.size(); ++i) c[i] ^= other.coefficients_[i];
  return BinaryPolynomial(std::move(c));
}

BinaryPolynomial BinaryPolynomial::operator*(const BinaryPolynomial& other) const {
  if (is_zero() || other.is_zero()) return {};
  std::vector<std::uint8_t> c(coefficients_.size() + other.coefficients_.size() - 1, 0);
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    if (!coefficients_[i]) continue;
    for (std::size_t j = 0; j < other.coefficients_.size(); ++j) c[i + j] ^= other.coefficients_[j];
  }
  return BinaryPolynomial(std::move(c));
}

std::pair<BinaryPolynomial, BinaryPolynomial> BinaryPolynomial::divmod(const BinaryPolynomial& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<std::uint8_t> rem = coefficients_;
  const int dd = divisor.degree();
  if (degree() < dd) return {BinaryPolynomial(), *this};
  std::vector<std::uint8_t> quot(static_cast<std::size_t>(degree() - dd) + 1, 0);
  for (int i = degree(); i >= dd; --i) {
    if (!rem[static_cast<std::size_t>(i)]) continue;
    quot[static_cast<std::size_t>(i - dd)] = 1;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(i - dd + j)] ^= divisor.coefficients_[static_cast<std::size_t>(j)];
  }
  return {BinaryPolynomial(std::move(quot)), BinaryPolynomial(std::move(rem))};
}

std::string BinaryPolynomial::to_bit_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (std::uint8_t c : coefficients_) s += static_cast<char>('0' + c);
  return s;
}

std::string BinaryPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    if (!coefficient(i)) continue;
    if (!s.empty()) s += '+';
    if (i == 0) {
      s += '1';
    } else if (i == 1) {
      s += 'x';
    } else {
      s += "x^" + std::to_string(i);
    }
  }
  return s;
}

BinaryPolynomial cyclic_modulus(int n) { return BinaryPolynomial::monomial(n) + BinaryPolynomial::one(); }

}  // namespace qec
