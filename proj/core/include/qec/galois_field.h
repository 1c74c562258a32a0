#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qec {

// GF(2^m) in polynomial basis; elements are bit masks, products go through
// log/antilog tables.
class GaloisField {
 public:
  using Element = std::uint32_t;

  // Uses the built-in primitive polynomial for m.
  explicit GaloisField(int m);
  // `primitive_polynomial` is a bit mask including the x^m term. Throws if it
  // is not primitive.
  GaloisField(int m, std::uint32_t primitive_polynomial);

  int m() const { return m_; }
  std::uint32_t size() const { return std::uint32_t{1} << m_; }
  // Order of the multiplicative group, 2^m - 1.
  std::uint32_t order() const { return size() - 1; }
  std::uint32_t primitive_polynomial() const { return primitive_polynomial_; }

  static Element add(Element a, Element b) { return a ^ b; }
  Element mul(Element a, Element b) const;
  Element div(Element a, Element b) const;
  Element inv(Element a) const;
  Element pow(Element a, std::int64_t e) const;
  // alpha^e for any integer e.
  Element exp(std::int64_t e) const;
  // Discrete log base alpha; a must be nonzero.
  std::uint32_t log(Element a) const;

 private:
  int m_;
  std::uint32_t primitive_polynomial_;
  std::vector<Element> antilog_;
  std::vector<std::uint32_t> log_;
};

// Standard primitive polynomials for 2 <= m <= 16.
std::uint32_t default_primitive_polynomial(int m);

// "x^4+x+1" <-> 0b10011
std::string polynomial_mask_to_string(std::uint64_t mask);
std::uint64_t parse_polynomial_mask(std::string_view text);

}  // namespace qec
