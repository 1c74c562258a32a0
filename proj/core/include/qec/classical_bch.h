#pragma once

#include <memory>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "qec/binary_polynomial.h"
#include "qec/galois_field.h"
#include "qec/gf2_matrix.h"

namespace qec {

using DefiningSet = std::set<int>;

// Orbit of i under doubling mod N. i is reduced mod N first (so negative
// exponents are accepted); N must be odd.
std::set<int> cyclotomic_coset(int i, int N);

// Union of the cosets of b, b+1, ..., b+d_bch-2.
DefiningSet bch_defining_set(int N, int b, int d_bch);

bool is_doubling_closed(const DefiningSet& set, int N);

// Union of C_{-i} over i in the complement of I_C.
DefiningSet dual_defining_set(const DefiningSet& defining_set, int N);

// True iff no i in I_C has -i mod N in I_C; then C-perp is contained in C
// and C can seed a quantum BCH code.
bool check_admissible(const DefiningSet& defining_set, int N);
// First (i, -i mod N) with both in I_C, scanning i upwards.
std::optional<std::pair<int, int>> find_admissibility_violation(const DefiningSet& defining_set, int N);

// Smallest m with N | 2^m - 1.
int field_degree_for_length(int N);

// Longest cyclic run {b, b+1, ..., b+len-1} inside the set; returns (b, len + 1),
// i.e. the start and the BCH bound it certifies.
std::pair<int, int> longest_consecutive_run(const DefiningSet& set, int N);

// Product of (x - beta^j) over j in the defining set, where beta is the
// primitive N-th root alpha^((2^m-1)/N) of `field`.
BinaryPolynomial generator_polynomial(const DefiningSet& defining_set, int N, const GaloisField& field);

struct CyclicCodeSpec {
  int N = 0;
  int K = 0;
  int b = 1;
  int d_bch = 1;
  DefiningSet defining_set;
  BinaryPolynomial generator;
  std::shared_ptr<const GaloisField> field;

  // beta^j with beta the primitive N-th root of unity used for the defining set.
  GaloisField::Element root_power(std::int64_t j) const;
};

// Narrow-sense when b = 1. `primitive_polynomial` overrides the built-in one.
CyclicCodeSpec make_bch_code(int N, int b, int d_bch, std::optional<std::uint32_t> primitive_polynomial = {});
// Cyclic code from an arbitrary doubling-closed defining set; (b, d_bch) is
// taken from the longest consecutive run.
CyclicCodeSpec make_cyclic_code(int N, const DefiningSet& defining_set,
                                std::optional<std::uint32_t> primitive_polynomial = {});
CyclicCodeSpec dual_code(const CyclicCodeSpec& code);

// Rows x^i g(x), i = 0..K-1. Requires N <= 64.
Gf2Matrix generator_matrix(const CyclicCodeSpec& code);

// Systematic: message bits occupy positions N-K..N-1, parity bits 0..N-K-1.
BitVector encode_classical(const CyclicCodeSpec& code, const BitVector& message);
BitVector message_from_codeword(const CyclicCodeSpec& code, const BitVector& codeword);

// r(beta^j)
GaloisField::Element syndrome(const CyclicCodeSpec& code, const BitVector& word, std::int64_t j);
bool is_codeword(const CyclicCodeSpec& code, const BitVector& word);

enum class DecodeStatus { kCorrected, kFailure };

struct DecodeOutcome {
  DecodeStatus status = DecodeStatus::kFailure;
  BitVector codeword;
  std::vector<int> error_positions;
  // Erasure positions in increasing order and the bit filled in at each.
  std::vector<int> erasure_positions;
  BitVector erasure_values;
};

// Errors-and-erasures decoding over the syndrome window b..b+d_bch-2:
// erasures are zero-filled and folded into an erasure locator, Berlekamp-Massey
// runs on the modified syndromes, Chien search finds error locations and
// Forney's formula gives the erasure values. Succeeds whenever
// nu + 2t < d_bch; failure is reported as a value.
DecodeOutcome decode_errors_and_erasures(const CyclicCodeSpec& code, const BitVector& received,
                                         const std::vector<int>& erasures);

// Erasure-only decoding by Gaussian elimination on the parity checks.
// Returns nullopt if the erased columns do not determine the word uniquely.
std::optional<BitVector> decode_erasures_gaussian(const CyclicCodeSpec& code, const BitVector& received,
                                                  const std::vector<int>& erasures);

// Exhaustive minimum weight; requires K <= 20 and N <= 64.
int min_distance_bruteforce(const CyclicCodeSpec& code);
int min_distance_bruteforce(const Gf2Matrix& generator);

}  // namespace qec
