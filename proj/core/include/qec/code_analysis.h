#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qec/random.h"
#include "qec/state.h"

namespace qec {

inline constexpr double kConditionTolerance = 1e-9;

// An orthonormal list of 2^k codeword states on n qubits.
class QuantumCode {
 public:
  explicit QuantumCode(std::vector<StateVector> basis);

  int n() const { return basis_.front().num_qubits(); }
  int k() const { return k_; }
  std::size_t dimension() const { return basis_.size(); }
  const std::vector<StateVector>& basis() const { return basis_; }
  const StateVector& operator[](std::size_t i) const { return basis_[i]; }

 private:
  std::vector<StateVector> basis_;
  int k_ = 0;
};

// Tensor product of |i><j| factors at distinct positions, identity elsewhere.
struct ErrorOperator {
  struct Factor {
    int position;
    int row;
    int col;
  };
  std::vector<Factor> factors;

  std::vector<LocalOperator> local_operators() const;
  ErrorOperator adjoint() const;
  // "P_01" for one factor, "P_01*P_10" for two; "I" when empty.
  std::string label() const;
  std::vector<int> positions() const;
};

// All 4^t operators |i><j| (x) ... on the given positions.
std::vector<ErrorOperator> one_error_operator_basis(int n, std::span<const int> positions);

// All size-k subsets of {1..n}, in lexicographic order.
std::vector<std::vector<int>> position_subsets(int n, int k);

struct ConditionWitness {
  std::vector<int> positions;
  std::string op;
  std::pair<int, int> pair;
};

struct ConditionReport {
  bool passed = true;
  double worst_expectation_gap = 0.0;
  double worst_off_diagonal = 0.0;
  std::optional<ConditionWitness> witness;
};

// Erasure form of the Knill-Laflamme conditions: for every position subset of
// size t and every basis operator A on it, <c_k|A|c_k> is independent of k and
// <c_k|A|c_l> = 0 for k != l.
ConditionReport check_erasure_kl(const QuantumCode& code, int t, double tol = kConditionTolerance);

enum class GeneralKlMode {
  // Erasure conditions at min(2t, n) positions; same verdict, much cheaper.
  kErasureEquivalent,
  // Enumerate A_i^dagger A_j over t-error operator bases directly.
  kDirectPairs,
};

ConditionReport check_general_kl(const QuantumCode& code, int t,
                                 GeneralKlMode mode = GeneralKlMode::kErasureEquivalent,
                                 double tol = kConditionTolerance);

// Truth of: corrects t unknown errors  =>  corrects 2t erasures.
bool erasure_implies_general(const QuantumCode& code, int t, double tol = kConditionTolerance);

struct ProductStateResult {
  bool found = false;
  std::array<Complex, 2> eta{};
  StateVector state;
  Complex c1;
  Complex c12;
  Complex c2;
};

// |<00|pi><11|pi> - <01|pi><10|pi>|; zero exactly for product states.
double product_state_residual(const StateVector& two_qubit_state);

// Finds a product state in span{b1, b2} of the 2-qubit space.
ProductStateResult find_product_state(const StateVector& b1, const StateVector& b2);

struct CodeFactor {
  int position;
  StateVector state;
};

// Single-qubit state that every codeword carries as a tensor factor at `position`.
std::optional<StateVector> factor_at(const QuantumCode& code, int position, double tol = kConditionTolerance);
std::optional<CodeFactor> detect_factor(const QuantumCode& code, double tol = kConditionTolerance);

// Removes a common tensor factor; throws std::invalid_argument if there is none at `position`.
QuantumCode shorten_code(const QuantumCode& code, int position);

// Haar-random `dimension`-dimensional subspace of the n-qubit space.
QuantumCode random_code(int n, std::size_t dimension, Rng& rng);

struct FalsificationResult {
  int n = 0;
  std::int64_t trials = 0;
  std::int64_t passes = 0;
};

// Samples Haar-random 2-dimensional codes on n qubits (trial i uses stream
// (seed, i)) followed by the injected codes, and counts how many pass
// check_erasure_kl with t = 1.
FalsificationResult sample_erasure_codes(int n, std::int64_t trials, std::uint64_t seed,
                                         std::span<const QuantumCode> injected = {});

// n must be 2 or 3.
std::int64_t falsify_short_codes(int n, std::int64_t trials, std::uint64_t seed);

}  // namespace qec
