#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "qec/classical_bch.h"
#include "qec/code_analysis.h"
#include "qec/gf2_matrix.h"

namespace qec {

// Coset enumeration is skipped above this many logical qubits.
inline constexpr int kMaxEnumeratedLogicalQubits = 16;
// Dense conversion limit.
inline constexpr int kMaxDenseLength = kMaxQubits;

class InadmissibleCodeError : public std::invalid_argument {
 public:
  InadmissibleCodeError(int i, int neg_i);

  int coset() const { return coset_; }
  int negated_coset() const { return negated_coset_; }

 private:
  int coset_;
  int negated_coset_;
};

// CSS code from a cyclic code C with C-perp <= C (C1 = C2 = C).
struct CssCode {
  int N = 0;
  int K = 0;
  int d = 0;
  // True when d is the exhaustive minimum distance of C, false when it is the
  // designed distance (classical K > 20).
  bool distance_is_true = false;
  int designed_distance = 0;
  CyclicCodeSpec classical;
  Gf2Matrix dual_generator{0, {}};
  // K words of C, independent modulo C-perp.
  std::vector<BitVector> coset_generators;
  // Lexicographically minimal member of each coset of C-perp in C, sorted;
  // element 0 is the zero word. Empty when K > kMaxEnumeratedLogicalQubits.
  std::vector<BitVector> coset_reps;
};

// Throws InadmissibleCodeError when some i and -i mod N are both in the defining set.
CssCode build_qbch(const CyclicCodeSpec& classical);

// One canonical representative per coset of `code_dual` in `code`, sorted,
// starting with the zero word. Throws if code_dual is not contained in code
// or the quotient has more than 2^20 cosets.
std::vector<BitVector> coset_representatives(const Gf2Matrix& code, const Gf2Matrix& code_dual);

// Uniform superposition over v + C-perp; support kept sorted.
struct SparseCodeState {
  int N = 0;
  std::vector<BitVector> support;
};

std::vector<SparseCodeState> qbch_states(const CssCode& code);

// Codeword bit i is qubit i + 1. Requires N <= kMaxDenseLength.
StateVector densify(const SparseCodeState& state);
QuantumCode to_quantum_code(const CssCode& code);

struct QuantumParameters {
  int N = 0;
  int K = 0;
  int d = 0;
  bool distance_is_true = false;
};

QuantumParameters qbch_parameters(const CyclicCodeSpec& classical);

// General CSS pair [[N, K1 - (N - K2), min(d1, d2)]] from generator matrices,
// requiring C2-perp <= C1. Distance is computed when both K1, K2 <= 20.
struct CssPairParameters {
  int N = 0;
  int K = 0;
  std::optional<int> d;
};

CssPairParameters css_pair_parameters(const Gf2Matrix& code1, const Gf2Matrix& code2);

}  // namespace qec
