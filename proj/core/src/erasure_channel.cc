#include "qec/erasure_channel.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "qec/classical_bch.h"
#include "qec/qbch.h"
#include "qec/random.h"

namespace qec {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

std::string to_string(ErasureModel model) {
  switch (model) {
    case ErasureModel::kResetToZero:
      return "ResetToZero";
    case ErasureModel::kRandomPauli:
      return "RandomPauli";
    case ErasureModel::kRandomUnitary:
      return "RandomUnitary";
  }
  throw std::invalid_argument("unknown erasure model");
}

ErasureModel parse_erasure_model(std::string_view name) {
  const std::string s = lower(name);
  if (s == "resettozero" || s == "reset") return ErasureModel::kResetToZero;
  if (s == "randompauli" || s == "pauli") return ErasureModel::kRandomPauli;
  if (s == "randomunitary" || s == "unitary") return ErasureModel::kRandomUnitary;
  throw std::invalid_argument("unknown erasure model '" + std::string(name) + "'");
}

ErasureEvent::ErasureEvent(std::vector<int> positions) : positions_(std::move(positions)) {
  if (positions_.empty()) throw std::invalid_argument("erasure event needs at least one position");
  std::sort(positions_.begin(), positions_.end());
  if (std::adjacent_find(positions_.begin(), positions_.end()) != positions_.end()) {
    throw std::invalid_argument("duplicate erasure position");
  }
  if (positions_.front() < 1) throw std::invalid_argument("erasure positions are 1-based");
}

void ErasureEvent::check_fits(int n) const {
  if (positions_.back() > n) {
    throw std::invalid_argument("erasure position " + std::to_string(positions_.back()) + " out of range for " +
                                std::to_string(n) + " qubits");
  }
}

std::string to_string(BuiltinCode code) {
  switch (code) {
    case BuiltinCode::kFourQubitK1:
      return "FourQubit_K1";
    case BuiltinCode::kFourQubitK2:
      return "FourQubit_K2";
    case BuiltinCode::kSteane7:
      return "Steane7";
  }
  throw std::invalid_argument("unknown built-in code");
}

BuiltinCode parse_builtin_code(std::string_view name) {
  const std::string s = lower(name);
  if (s == "fourqubit_k1") return BuiltinCode::kFourQubitK1;
  if (s == "fourqubit_k2") return BuiltinCode::kFourQubitK2;
  if (s == "steane7") return BuiltinCode::kSteane7;
  throw std::invalid_argument("unknown built-in code '" + std::string(name) + "'");
}

QuantumCode builtin_code(BuiltinCode code) {
  switch (code) {
    case BuiltinCode::kFourQubitK1:
    case BuiltinCode::kFourQubitK2: {
      std::vector<StateVector> basis = {
          make_state(4, {{"0000", 1}, {"1111", 1}}),
          make_state(4, {{"1001", 1}, {"0110", 1}}),
      };
      if (code == BuiltinCode::kFourQubitK2) {
        basis.push_back(make_state(4, {{"1100", 1}, {"0011", 1}}));
        basis.push_back(make_state(4, {{"1010", 1}, {"0101", 1}}));
      }
      return QuantumCode(std::move(basis));
    }
    case BuiltinCode::kSteane7:
      return to_quantum_code(build_qbch(make_bch_code(7, 1, 3)));
  }
  throw std::invalid_argument("unknown built-in code");
}

StateVector encode(const QuantumCode& code, const StateVector& logical) {
  if (logical.dimension() != code.dimension()) {
    throw std::invalid_argument("logical state has " + std::to_string(logical.num_qubits()) +
                                " qubits, code encodes " + std::to_string(code.k()));
  }
  Amplitudes a = Amplitudes::Zero(static_cast<Eigen::Index>(code[0].dimension()));
  for (std::size_t j = 0; j < code.dimension(); ++j) a += logical[j] * code[j].amplitudes();
  return StateVector::normalized(code.n(), std::move(a));
}

namespace {

Operator hermitize(const Operator& m) { return (m + m.adjoint()) / 2.0; }

}  // namespace

DensityMatrix apply_erasure(const StateVector& state, const ErasureEvent& event, ErasureModel model,
                            std::uint64_t seed) {
  const int n = state.num_qubits();
  event.check_fits(n);
  const std::vector<int>& positions = event.positions();

  if (model == ErasureModel::kResetToZero) {
    const auto dim = static_cast<Eigen::Index>(state.dimension());
    Operator rho = Operator::Zero(dim, dim);
    const std::size_t branches = std::size_t{1} << positions.size();
    for (std::size_t branch = 0; branch < branches; ++branch) {
      std::vector<LocalOperator> kraus;
      for (std::size_t i = 0; i < positions.size(); ++i) {
        kraus.emplace_back(positions[i], ket_bra(0, static_cast<int>((branch >> i) & 1U)));
      }
      const Amplitudes v = apply_local(kraus, state.amplitudes(), n);
      rho += v * v.adjoint();
    }
    return DensityMatrix(n, hermitize(rho));
  }

  Rng rng(seed);
  std::vector<LocalOperator> ops;
  for (int p : positions) {
    if (model == ErasureModel::kRandomPauli) {
      std::uniform_int_distribution<int> pick(0, 3);
      ops.emplace_back(p, pauli_matrix("IXYZ"[pick(rng)]));
    } else {
      ops.emplace_back(p, random_unitary(rng));
    }
  }
  const Amplitudes v = apply_local(ops, state.amplitudes(), n);
  return DensityMatrix(n, hermitize(v * v.adjoint()));
}

DensityMatrix recover(const DensityMatrix& rho, const QuantumCode& code, const ErasureEvent& event) {
  const int n = code.n();
  if (rho.num_qubits() != n) throw std::invalid_argument("recover: state and code sizes differ");
  event.check_fits(n);
  constexpr double kOverlap = 1e-9;

  const std::size_t num_paulis = std::size_t{1} << (2 * event.size());
  const auto full_dim = static_cast<Eigen::Index>(dimension_of(n));
  const auto code_dim = static_cast<Eigen::Index>(code.dimension());

  Operator codewords(full_dim, code_dim);
  for (Eigen::Index k = 0; k < code_dim; ++k) codewords.col(k) = code[static_cast<std::size_t>(k)].amplitudes();

  std::vector<Amplitudes> accepted;
  Operator out = Operator::Zero(full_dim, full_dim);
  double captured = 0.0;

  // Pauli index 0 is the identity, so the codespace itself is the first branch.
  for (std::size_t pauli = 0; pauli < num_paulis; ++pauli) {
    std::vector<LocalOperator> ops;
    for (std::size_t i = 0; i < event.size(); ++i) {
      const char letter = "IXYZ"[(pauli >> (2 * i)) & 3U];
      if (letter != 'I') ops.emplace_back(event.positions()[i], pauli_matrix(letter));
    }
    std::vector<Eigen::Index> targets;
    std::vector<Amplitudes> columns;
    for (Eigen::Index k = 0; k < code_dim; ++k) {
      Amplitudes v = apply_local(ops, codewords.col(k), n);
      for (int pass = 0; pass < 2; ++pass) {
        for (const Amplitudes& w : accepted) v -= w.dot(v) * w;
      }
      const double norm = v.norm();
      if (norm < kOverlap) continue;
      v /= norm;
      accepted.push_back(v);
      columns.push_back(std::move(v));
      targets.push_back(k);
    }
    if (columns.empty()) continue;
    // Kraus operator sum_k |c_k><w_k| on this syndrome subspace.
    Operator syndrome_basis(full_dim, static_cast<Eigen::Index>(columns.size()));
    Operator images(full_dim, static_cast<Eigen::Index>(columns.size()));
    for (std::size_t c = 0; c < columns.size(); ++c) {
      syndrome_basis.col(static_cast<Eigen::Index>(c)) = columns[c];
      images.col(static_cast<Eigen::Index>(c)) = codewords.col(targets[c]);
    }
    const Operator block = syndrome_basis.adjoint() * rho.matrix() * syndrome_basis;
    captured += block.trace().real();
    out += images * block * images.adjoint();
  }
  const double leftover = std::max(0.0, 1.0 - captured);
  out += leftover * codewords.col(0) * codewords.col(0).adjoint();
  out /= out.trace().real();
  return DensityMatrix(n, hermitize(out));
}

namespace {

double run_one_trial(const QuantumCode& code, ErasureModel model, int erasure_size, std::uint64_t master_seed,
                     std::int64_t trial) {
  Rng rng = make_stream(master_seed, static_cast<std::uint64_t>(trial));
  const StateVector logical = random_state(code.k() == 0 ? 1 : code.k(), rng);
  const StateVector encoded = code.k() == 0 ? code[0] : encode(code, logical);
  if (erasure_size == 0) return 1.0;

  std::vector<int> qubits(static_cast<std::size_t>(code.n()));
  for (int q = 0; q < code.n(); ++q) qubits[static_cast<std::size_t>(q)] = q + 1;
  for (int i = 0; i < erasure_size; ++i) {
    std::uniform_int_distribution<int> pick(i, code.n() - 1);
    std::swap(qubits[static_cast<std::size_t>(i)], qubits[static_cast<std::size_t>(pick(rng))]);
  }
  const ErasureEvent event(std::vector<int>(qubits.begin(), qubits.begin() + erasure_size));
  const std::uint64_t model_seed = rng();

  const DensityMatrix erased = apply_erasure(encoded, event, model, model_seed);
  return fidelity(recover(erased, code, event), encoded);
}

}  // namespace

TrialStatistics run_trials(const QuantumCode& code, ErasureModel model, int erasure_size, std::int64_t trials,
                           std::uint64_t master_seed) {
  if (erasure_size < 0 || erasure_size > code.n()) throw std::invalid_argument("erasure size must be in [0, n]");
  if (trials < 0) throw std::invalid_argument("trial count must be non-negative");

  std::vector<double> fidelities(static_cast<std::size_t>(trials));
  const unsigned hw = std::max(1U, std::thread::hardware_concurrency());
  const std::int64_t workers = std::min<std::int64_t>(hw, std::max<std::int64_t>(trials / 64, 1));
  auto work = [&](std::int64_t begin, std::int64_t end) {
    for (std::int64_t i = begin; i < end; ++i) {
      fidelities[static_cast<std::size_t>(i)] = run_one_trial(code, model, erasure_size, master_seed, i);
    }
  };
  if (workers <= 1) {
    work(0, trials);
  } else {
    std::vector<std::jthread> pool;
    const std::int64_t chunk = (trials + workers - 1) / workers;
    for (std::int64_t w = 0; w < workers; ++w) {
      const std::int64_t begin = w * chunk;
      const std::int64_t end = std::min(trials, begin + chunk);
      if (begin < end) pool.emplace_back(work, begin, end);
    }
  }

  TrialStatistics stats;
  stats.trials = trials;
  if (trials == 0) return stats;
  double sum = 0.0;
  stats.min_fidelity = 1.0;
  for (double f : fidelities) {
    sum += f;
    stats.min_fidelity = std::min(stats.min_fidelity, f);
    if (f < 1.0 - kFidelityFailureGap) ++stats.failures;
  }
  stats.mean_fidelity = std::min(1.0, sum / static_cast<double>(trials));
  stats.mean_fidelity = std::max(stats.mean_fidelity, stats.min_fidelity);
  return stats;
}

ParityDiagnosis parity_diagnose(const StateVector& state) {
  return {parity_probabilities(state), parity_probabilities(hadamard_all(state))};
}

}  // namespace qec
