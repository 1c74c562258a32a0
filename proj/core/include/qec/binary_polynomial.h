#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qec {

// Polynomial over GF(2), coefficients lowest degree first, no trailing zeros.
class BinaryPolynomial {
 public:
  BinaryPolynomial() = default;
  explicit BinaryPolynomial(std::vector<std::uint8_t> coefficients);

  static BinaryPolynomial one() { return BinaryPolynomial({1}); }
  static BinaryPolynomial monomial(int degree);
  // Parses a low-to-high coefficient string such as "1101".
  static BinaryPolynomial from_bit_string(std::string_view bits);

  bool is_zero() const { return coefficients_.empty(); }
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  std::uint8_t coefficient(int i) const;
  const std::vector<std::uint8_t>& coefficients() const { return coefficients_; }

  BinaryPolynomial operator+(const BinaryPolynomial& other) const;
  BinaryPolynomial operator*(const BinaryPolynomial& other) const;
  // Quotient and remainder; throws on division by zero.
  std::pair<BinaryPolynomial, BinaryPolynomial> divmod(const BinaryPolynomial& divisor) const;
  BinaryPolynomial operator%(const BinaryPolynomial& divisor) const { return divmod(divisor).second; }
  bool divides(const BinaryPolynomial& other) const { return (other % *this).is_zero(); }

  bool operator==(const BinaryPolynomial& other) const = default;

  std::string to_bit_string() const;
  std::string to_string() const;

 private:
  void trim();

  std::vector<std::uint8_t> coefficients_;
};

// x^n - 1 over GF(2)
BinaryPolynomial cyclic_modulus(int n);

}  // namespace qec
