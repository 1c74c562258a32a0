#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qec/code_analysis.h"
#include "qec/state.h"

namespace qec {

enum class ErasureModel {
  // Erased qubit is reset to |0>: Kraus operators |0><0| and |0><1|.
  kResetToZero,
  kRandomPauli,
  kRandomUnitary,
};

std::string to_string(ErasureModel model);
// Accepts "ResetToZero"/"reset", "RandomPauli"/"pauli", "RandomUnitary"/"unitary" (any case).
ErasureModel parse_erasure_model(std::string_view name);

// Announced erasure locations (1-based qubit positions).
class ErasureEvent {
 public:
  explicit ErasureEvent(std::vector<int> positions);

  const std::vector<int>& positions() const { return positions_; }
  std::size_t size() const { return positions_.size(); }
  // Throws std::invalid_argument if any position exceeds n.
  void check_fits(int n) const;

 private:
  std::vector<int> positions_;
};

inline constexpr double kFidelityFailureGap = 1e-8;

struct TrialStatistics {
  std::int64_t trials = 0;
  double mean_fidelity = 1.0;
  double min_fidelity = 1.0;
  std::int64_t failures = 0;
};

enum class BuiltinCode { kFourQubitK1, kFourQubitK2, kSteane7 };

std::string to_string(BuiltinCode code);
// Case-insensitive: "FourQubit_K1", "FourQubit_K2", "Steane7".
BuiltinCode parse_builtin_code(std::string_view name);
QuantumCode builtin_code(BuiltinCode code);

// Linear extension of |j> -> basis[j].
StateVector encode(const QuantumCode& code, const StateVector& logical);

// ResetToZero is applied exactly as a channel. The random models draw one
// operator per erased qubit from `seed`.
DensityMatrix apply_erasure(const StateVector& state, const ErasureEvent& event, ErasureModel model,
                            std::uint64_t seed);

// Projects onto the error subspaces P * codespace for all Pauli strings P
// supported on the erased positions (duplicates dropped, later subspaces
// orthogonalized against earlier ones) and maps each back onto the
// codespace. Weight outside every subspace is replaced by basis[0], so the
// map is always trace preserving.
DensityMatrix recover(const DensityMatrix& rho, const QuantumCode& code, const ErasureEvent& event);

// Per trial i, stream (master_seed, i) draws the logical state, the erased
// positions and the model randomness. Deterministic for a fixed seed.
TrialStatistics run_trials(const QuantumCode& code, ErasureModel model, int erasure_size, std::int64_t trials,
                           std::uint64_t master_seed);

// Parity of the computational-basis and Hadamard-basis measurement outcomes.
struct ParityDiagnosis {
  ParityProbabilities computational;
  ParityProbabilities hadamard;
};

ParityDiagnosis parity_diagnose(const StateVector& state);

}  // namespace qec
