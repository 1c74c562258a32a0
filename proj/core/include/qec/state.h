#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

// Dense n-qubit states and operators.
//
// Qubit positions are 1-based. Qubit 1 is the leftmost ket factor and the
// most significant bit of a basis index, so |1001> is index 9 for n = 4.

namespace qec {

using Complex = std::complex<double>;
using Amplitudes = Eigen::VectorXcd;
using Operator = Eigen::MatrixXcd;
using Matrix2 = Eigen::Matrix2cd;

inline constexpr int kMaxQubits = 12;
inline constexpr double kStateTolerance = 1e-10;

// Throws std::invalid_argument unless 1 <= n <= kMaxQubits.
void check_num_qubits(int n);

inline std::size_t dimension_of(int n) { return std::size_t{1} << n; }

// Value (0 or 1) of qubit `position` in basis index `index`.
inline int qubit_bit(std::uint64_t index, int position, int n) {
  return static_cast<int>((index >> (n - position)) & 1U);
}

std::uint64_t bits_to_index(std::string_view bits);
std::string index_to_bits(std::uint64_t index, int n);

class StateVector {
 public:
  // Requires a vector of length 2^n with unit norm (within kStateTolerance).
  StateVector(int num_qubits, Amplitudes amplitudes);

  // Normalizes `raw`; throws std::invalid_argument("null state") on a zero vector.
  static StateVector normalized(int num_qubits, Amplitudes raw);
  static StateVector basis(int num_qubits, std::uint64_t index);

  int num_qubits() const { return num_qubits_; }
  std::size_t dimension() const { return static_cast<std::size_t>(amplitudes_.size()); }
  const Amplitudes& amplitudes() const { return amplitudes_; }
  Complex operator[](std::size_t index) const { return amplitudes_[static_cast<Eigen::Index>(index)]; }
  Complex amplitude(std::string_view bits) const;

  Complex inner(const StateVector& other) const { return amplitudes_.dot(other.amplitudes_); }

 private:
  int num_qubits_;
  Amplitudes amplitudes_;
};

struct Term {
  std::string bits;
  Complex coefficient;
};

// Normalized superposition of the given kets; duplicate bitstrings are summed.
StateVector make_state(int n, std::span<const Term> terms);
StateVector make_state(int n, std::initializer_list<Term> terms);

class DensityMatrix {
 public:
  // Validates shape, hermiticity and unit trace (within kStateTolerance).
  DensityMatrix(int num_qubits, Operator entries);

  static DensityMatrix pure(const StateVector& state);

  int num_qubits() const { return num_qubits_; }
  std::size_t dimension() const { return static_cast<std::size_t>(entries_.rows()); }
  const Operator& matrix() const { return entries_; }

  double trace() const { return entries_.trace().real(); }
  double purity() const;
  double min_eigenvalue() const;

 private:
  int num_qubits_;
  Operator entries_;
};

// A 2x2 operator acting on one qubit.
struct LocalOperator {
  LocalOperator(int position, const Matrix2& matrix);

  int position;
  Matrix2 matrix;
};

// |i><j| on a single qubit.
Matrix2 ket_bra(int i, int j);
Matrix2 pauli_matrix(char letter);
Matrix2 hadamard_matrix();

Amplitudes apply_local(const LocalOperator& op, const Amplitudes& amplitudes, int n);
Amplitudes apply_local(std::span<const LocalOperator> ops, const Amplitudes& amplitudes, int n);
Operator embed_local(const LocalOperator& op, int n);

class PauliString {
 public:
  explicit PauliString(std::string letters);

  int num_qubits() const { return static_cast<int>(letters_.size()); }
  const std::string& letters() const { return letters_; }
  char operator[](int position) const { return letters_[static_cast<std::size_t>(position - 1)]; }
  bool is_identity() const;

  Amplitudes apply(const Amplitudes& amplitudes) const;
  Operator matrix() const;

 private:
  std::string letters_;
};

StateVector hadamard_all(const StateVector& state);

struct ParityProbabilities {
  double even;
  double odd;
};

ParityProbabilities parity_probabilities(const StateVector& state);

// Partial trace onto `keep` (1-based positions). The reduced system orders
// qubits by ascending position.
DensityMatrix reduced_density(const StateVector& state, std::span<const int> keep);
DensityMatrix reduced_density(const DensityMatrix& rho, std::span<const int> keep);

// <psi|rho|psi>, clamped to [0, 1].
double fidelity(const DensityMatrix& rho, const StateVector& psi);

}  // namespace qec
