#include "qec/galois_field.h"

#include <array>
#include <cctype>
#include <stdexcept>

namespace qec {

std::uint32_t default_primitive_polynomial(int m) {
  static constexpr std::array<std::uint32_t, 17> kTable = {
      0,       0,
      0x7,      // x^2+x+1
      0xB,      // x^3+x+1
      0x13,     // x^4+x+1
      0x25,     // x^5+x^2+1
      0x43,     // x^6+x+1
      0x89,     // x^7+x^3+1
      0x11D,    // x^8+x^4+x^3+x^2+1
      0x211,    // x^9+x^4+1
      0x409,    // x^10+x^3+1
      0x805,    // x^11+x^2+1
      0x1053,   // x^12+x^6+x^4+x+1
      0x201B,   // x^13+x^4+x^3+x+1
      0x4443,   // x^14+x^10+x^6+x+1
      0x8003,   // x^15+x+1
      0x1100B,  // x^16+x^12+x^3+x+1
  };
  if (m < 2 || m > 16) {
    throw std::invalid_argument("no built-in primitive polynomial for m = " + std::to_string(m));
  }
  return kTable[static_cast<std::size_t>(m)];
}

GaloisField::GaloisField(int m) : GaloisField(m, default_primitive_polynomial(m)) {}

GaloisField::GaloisField(int m, std::uint32_t primitive_polynomial)
    : m_(m), primitive_polynomial_(primitive_polynomial) {
  if (m < 1 || m > 16) {
    throw std::invalid_argument("field degree m must be in [1, 16]");
  }
  if ((primitive_polynomial >> m) != 1U) {
    throw std::invalid_argument("primitive polynomial must have degree exactly m");
  }
  const std::uint32_t q = size();
  antilog_.assign(order(), 0);
  log_.assign(q, 0);
  std::vector<bool> seen(q, false);
  Element x = 1;
  for (std::uint32_t i = 0; i < order(); ++i) {
    if (seen[x]) {
      throw std::invalid_argument("polynomial " + polynomial_mask_to_string(primitive_polynomial) +
                                  " is not primitive");
    }
    seen[x] = true;
    antilog_[i] = x;
    log_[x] = i;
    x <<= 1;
    if (x & q) x ^= primitive_polynomial;
  }
  if (x != 1) {
    throw std::invalid_argument("polynomial " + polynomial_mask_to_string(primitive_polynomial) +
                                " is not primitive");
  }
}

GaloisField::Element GaloisField::mul(Element a, Element b) const {
  if (a == 0 || b == 0) return 0;
  return antilog_[(log_[a] + log_[b]) % order()];
}

GaloisField::Element GaloisField::div(Element a, Element b) const {
  if (b == 0) throw std::domain_error("division by zero in GF(2^m)");
  if (a == 0) return 0;
  return antilog_[(log_[a] + order() - log_[b]) % order()];
}

GaloisField::Element GaloisField::inv(Element a) const { return div(1, a); }

GaloisField::Element GaloisField::pow(Element a, std::int64_t e) const {
  if (a == 0) {
    if (e == 0) return 1;
    if (e < 0) throw std::domain_error("zero has no inverse in GF(2^m)");
    return 0;
  }
  const auto n = static_cast<std::int64_t>(order());
  std::int64_t k = (static_cast<std::int64_t>(log_[a]) * (e % n)) % n;
  if (k < 0) k += n;
  return antilog_[static_cast<std::size_t>(k)];
}

GaloisField::Element GaloisField::exp(std::int64_t e) const {
  const auto n = static_cast<std::int64_t>(order());
  std::int64_t k = e % n;
  if (k < 0) k += n;
  return antilog_[static_cast<std::size_t>(k)];
}

std::uint32_t GaloisField::log(Element a) const {
  if (a == 0 || a >= size()) throw std::domain_error("log of zero or out-of-field element");
  return log_[a];
}

std::string polynomial_mask_to_string(std::uint64_t mask) {
  if (mask == 0) return "0";
  std::string s;
  for (int i = 63; i >= 0; --i) {
    if (!((mask >> i) & 1U)) continue;
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

std::uint64_t parse_polynomial_mask(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  }
  if (compact.empty()) throw std::invalid_argument("empty polynomial");
  std::uint64_t mask = 0;
  std::size_t pos = 0;
  while (pos <= compact.size()) {
    const std::size_t end = std::min(compact.find('+', pos), compact.size());
    const std::string term = compact.substr(pos, end - pos);
    int degree;
    if (term == "1") {
      degree = 0;
    } else if (term == "x") {
      degree = 1;
    } else if (term.size() > 2 && term[0] == 'x' && term[1] == '^') {
      std::size_t used = 0;
      try {
        degree = std::stoi(term.substr(2), &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad polynomial term '" + term + "'");
      }
      if (used != term.size() - 2) throw std::invalid_argument("bad polynomial term '" + term + "'");
    } else {
      throw std::invalid_argument("bad polynomial term '" + term + "'");
    }
    if (degree < 0 || degree > 63) throw std::invalid_argument("polynomial degree out of range");
    mask ^= std::uint64_t{1} << degree;
    if (end == compact.size()) break;
    pos = end + 1;
  }
  return mask;
}

}  // namespace qec
