#include "qec/code_analysis.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace qec {

QuantumCode::QuantumCode(std::vector<StateVector> basis) : basis_(std::move(basis)) {
  if (basis_.empty()) {
    throw std::invalid_argument("quantum code needs at least one codeword");
  }
  if (!std::has_single_bit(basis_.size())) {
    throw std::invalid_argument("number of codewords must be a power of two");
  }
  k_ = std::countr_zero(basis_.size());
  const int n = basis_.front().num_qubits();
  for (const StateVector& c : basis_) {
    if (c.num_qubits() != n) {
      throw std::invalid_argument("all codewords must have the same number of qubits");
    }
  }
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    for (std::size_t j = i; j < basis_.size(); ++j) {
      const Complex g = basis_[i].inner(basis_[j]);
      const double expected = (i == j) ? 1.0 : 0.0;
      if (std::abs(g - expected) >= kStateTolerance) {
        throw std::invalid_argument("codewords are not orthonormal (pair " + std::to_string(i) + ", " +
                                    std::to_string(j) + ")");
      }
    }
  }
}

std::vector<LocalOperator> ErrorOperator::local_operators() const {
  std::vector<LocalOperator> ops;
  ops.reserve(factors.size());
  for (const Factor& f : factors) ops.emplace_back(f.position, ket_bra(f.row, f.col));
  return ops;
}

ErrorOperator ErrorOperator::adjoint() const {
  ErrorOperator out;
  for (const Factor& f : factors) out.factors.push_back({f.position, f.col, f.row});
  return out;
}

std::string ErrorOperator::label() const {
  if (factors.empty()) return "I";
  std::string s;
  for (const Factor& f : factors) {
    if (!s.empty()) s += '*';
    s += "P_" + std::to_string(f.row) + std::to_string(f.col);
  }
  return s;
}

std::vector<int> ErrorOperator::positions() const {
  std::vector<int> p;
  for (const Factor& f : factors) p.push_back(f.position);
  return p;
}

std::vector<ErrorOperator> one_error_operator_basis(int n, std::span<const int> positions) {
  if (positions.empty()) {
    throw std::invalid_argument("one_error_operator_basis: position set must not be empty");
  }
  std::vector<int> sorted(positions.begin(), positions.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("one_error_operator_basis: duplicate positions");
  }
  for (int p : sorted) {
    if (p < 1 || p > n) throw std::invalid_argument("one_error_operator_basis: position out of range");
  }
  const std::size_t t = sorted.size();
  const std::size_t count = std::size_t{1} << (2 * t);
  std::vector<ErrorOperator> basis(count);
  for (std::size_t code = 0; code < count; ++code) {
    // two bits (row, col) per position, first position most significant
    for (std::size_t s = 0; s < t; ++s) {
      const std::size_t shift = 2 * (t - 1 - s);
      const int row = static_cast<int>((code >> (shift + 1)) & 1U);
      const int col = static_cast<int>((code >> shift) & 1U);
      basis[code].factors.push_back({sorted[s], row, col});
    }
  }
  return basis;
}

std::vector<std::vector<int>> position_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> current(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) current[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    out.push_back(current);
    int i = k - 1;
    while (i >= 0 && current[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
    if (i < 0) break;
    ++current[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) current[static_cast<std::size_t>(j)] = current[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

namespace {

// Folds the conditions for one operator (given as a sequence of local factors
// applied right to left) into the running report.
void accumulate(const QuantumCode& code, std::span<const LocalOperator> ops, const std::vector<int>& positions,
                const std::string& label, double tol, ConditionReport& report, double& worst) {
  const int n = code.n();
  const std::size_t dim = code.dimension();
  std::vector<Amplitudes> images;
  images.reserve(dim);
  for (const StateVector& c : code.basis()) images.push_back(apply_local(ops, c.amplitudes(), n));

  const Complex reference = code[0].amplitudes().dot(images[0]);
  for (std::size_t kk = 0; kk < dim; ++kk) {
    for (std::size_t l = 0; l < dim; ++l) {
      const Complex value = code[kk].amplitudes().dot(images[l]);
      double violation;
      if (kk == l) {
        violation = std::abs(value - reference);
        report.worst_expectation_gap = std::max(report.worst_expectation_gap, violation);
      } else {
        violation = std::abs(value);
        report.worst_off_diagonal = std::max(report.worst_off_diagonal, violation);
      }
      if (violation >= tol) {
        report.passed = false;
        if (violation > worst) {
          worst = violation;
          report.witness = ConditionWitness{positions, label,
                                            {kk == l ? 0 : static_cast<int>(kk), static_cast<int>(l)}};
        }
      }
    }
  }
}

ConditionReport check_on_subsets(const QuantumCode& code, int subset_size, double tol) {
  ConditionReport report;
  double worst = 0.0;
  if (subset_size == 0) {
    accumulate(code, {}, {}, "I", tol, report, worst);
    return report;
  }
  for (const std::vector<int>& subset : position_subsets(code.n(), subset_size)) {
    for (const ErrorOperator& op : one_error_operator_basis(code.n(), subset)) {
      const std::vector<LocalOperator> ops = op.local_operators();
      accumulate(code, ops, subset, op.label(), tol, report, worst);
    }
  }
  return report;
}

}  // namespace

ConditionReport check_erasure_kl(const QuantumCode& code, int t, double tol) {
  if (t < 0 || t > code.n()) {
    throw std::invalid_argument("check_erasure_kl: t must be in [0, n]");
  }
  return check_on_subsets(code, t, tol);
}

ConditionReport check_general_kl(const QuantumCode& code, int t, GeneralKlMode mode, double tol) {
  if (t < 0 || t > code.n()) {
    throw std::invalid_argument("check_general_kl: t must be in [0, n]");
  }
  if (mode == GeneralKlMode::kErasureEquivalent) {
    return check_on_subsets(code, std::min(2 * t, code.n()), tol);
  }
  ConditionReport report;
  double worst = 0.0;
  if (t == 0) {
    accumulate(code, {}, {}, "I", tol, report, worst);
    return report;
  }
  std::vector<ErrorOperator> errors;
  for (const std::vector<int>& subset : position_subsets(code.n(), t)) {
    for (ErrorOperator& op : one_error_operator_basis(code.n(), subset)) errors.push_back(std::move(op));
  }
  for (const ErrorOperator& left : errors) {
    const ErrorOperator left_dagger = left.adjoint();
    for (const ErrorOperator& right : errors) {
      // A_i^dagger A_j: apply A_j first.
      std::vector<LocalOperator> ops = right.local_operators();
      for (LocalOperator& op : left_dagger.local_operators()) ops.push_back(op);
      std::vector<int> positions = left.positions();
      for (int p : right.positions()) positions.push_back(p);
      std::sort(positions.begin(), positions.end());
      positions.erase(std::unique(positions.begin(), positions.end()), positions.end());
      accumulate(code, ops, positions, "(" + left.label() + ")^dag(" + right.label() + ")", tol, report,
                 worst);
    }
  }
  return report;
}

bool erasure_implies_general(const QuantumCode& code, int t, double tol) {
  if (t < 0 || 2 * t > code.n()) {
    throw std::invalid_argument("erasure_implies_general: requires 0 <= 2t <= n");
  }
  if (!check_general_kl(code, t, GeneralKlMode::kDirectPairs, tol).passed) return true;
  return check_erasure_kl(code, 2 * t, tol).passed;
}

double product_state_residual(const StateVector& s) {
  if (s.num_qubits() != 2) {
    throw std::invalid_argument("product_state_residual: expects a 2-qubit state");
  }
  return std::abs(s[0] * s[3] - s[1] * s[2]);
}

ProductStateResult find_product_state(const StateVector& b1_in, const StateVector& b2_in) {
  if (b1_in.num_qubits() != 2 || b2_in.num_qubits() != 2) {
    throw std::invalid_argument("find_product_state: expects 2-qubit states");
  }
  // Orthonormalize; the result only depends on the spanned subspace.
  const Amplitudes& b1 = b1_in.amplitudes();
  Amplitudes b2 = b2_in.amplitudes() - b1.dot(b2_in.amplitudes()) * b1;
  if (b2.norm() < 1e-10) {
    throw std::invalid_argument("find_product_state: inputs are linearly dependent");
  }
  b2.normalize();

  // <00|, <01|, <10|, <11| are indices 0..3
  const Complex c1 = b1[0] * b1[3] - b1[1] * b1[2];
  const Complex c12 = b1[0] * b2[3] + b1[3] * b2[0] - b1[1] * b2[2] - b1[2] * b2[1];
  const Complex c2 = b2[0] * b2[3] - b2[1] * b2[2];

  constexpr double kZero = 1e-14;
  std::array<Complex, 2> eta;
  if (std::abs(c1) < kZero) {
    eta = {1.0, 0.0};
  } else if (std::abs(c2) < kZero) {
    eta = {0.0, 1.0};
  } else {
    // eta1/eta2 = z/c1 where z^2 + c12 z + c1 c2 = 0. Pick the root that
    // avoids cancellation and keep the coefficients division-free.
    Complex root = std::sqrt(c12 * c12 - 4.0 * c1 * c2);
    if ((std::conj(c12) * root).real() < 0) root = -root;
    const Complex z = -(c12 + root) / 2.0;
    eta = {z, c1};
    const double norm = std::sqrt(std::norm(eta[0]) + std::norm(eta[1]));
    eta[0] /= norm;
    eta[1] /= norm;
  }
  StateVector state = StateVector::normalized(2, eta[0] * b1 + eta[1] * b2);
  return ProductStateResult{true, eta, std::move(state), c1, c12, c2};
}

namespace {

std::optional<StateVector> pure_single_qubit(const StateVector& c, int position, double tol) {
  const int keep[] = {position};
  const DensityMatrix rho = reduced_density(c, keep);
  if (rho.purity() < 1.0 - tol) return std::nullopt;
  Eigen::SelfAdjointEigenSolver<Operator> solver(rho.matrix());
  Amplitudes v = solver.eigenvectors().col(1);
  // fix the global phase: first non-negligible component real and positive
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) > 1e-12) {
      v *= std::abs(v[i]) / v[i];
      break;
    }
  }
  return StateVector::normalized(1, std::move(v));
}

}  // namespace

std::optional<StateVector> factor_at(const QuantumCode& code, int position, double tol) {
  if (position < 1 || position > code.n()) {
    throw std::invalid_argument("factor_at: position out of range");
  }
  std::optional<StateVector> common;
  for (const StateVector& c : code.basis()) {
    std::optional<StateVector> theta = pure_single_qubit(c, position, tol);
    if (!theta) return std::nullopt;
    if (!common) {
      common = std::move(theta);
    } else if (std::norm(common->inner(*theta)) < 1.0 - tol) {
      return std::nullopt;
    }
  }
  return common;
}

std::optional<CodeFactor> detect_factor(const QuantumCode& code, double tol) {
  for (int p = 1; p <= code.n(); ++p) {
    if (std::optional<StateVector> theta = factor_at(code, p, tol)) {
      return CodeFactor{p, std::move(*theta)};
    }
  }
  return std::nullopt;
}

QuantumCode shorten_code(const QuantumCode& code, int position) {
  const int n = code.n();
  if (n < 2) {
    throw std::invalid_argument("shorten_code: cannot shorten a single-qubit code");
  }
  const std::optional<StateVector> theta = factor_at(code, position);
  if (!theta) {
    throw std::invalid_argument("shorten_code: position " + std::to_string(position) +
                                " is not a common factor of the code");
  }
  const int low_bits = n - position;
  const std::uint64_t low_mask = (std::uint64_t{1} << low_bits) - 1;
  std::vector<StateVector> shortened;
  for (const StateVector& c : code.basis()) {
    Amplitudes a(static_cast<Eigen::Index>(dimension_of(n - 1)));
    for (std::uint64_t y = 0; y < dimension_of(n - 1); ++y) {
      const std::uint64_t high = (y & ~low_mask) << 1;
      const std::uint64_t low = y & low_mask;
      const std::uint64_t with0 = high | low;
      const std::uint64_t with1 = with0 | (std::uint64_t{1} << low_bits);
      a[static_cast<Eigen::Index>(y)] = std::conj((*theta)[0]) * c[with0] + std::conj((*theta)[1]) * c[with1];
    }
    shortened.push_back(StateVector::normalized(n - 1, std::move(a)));
  }
  return QuantumCode(std::move(shortened));
}

QuantumCode random_code(int n, std::size_t dimension, Rng& rng) {
  check_num_qubits(n);
  const std::size_t full = dimension_of(n);
  if (dimension == 0 || dimension > full) {
    throw std::invalid_argument("random_code: dimension out of range");
  }
  Operator g(static_cast<Eigen::Index>(full), static_cast<Eigen::Index>(dimension));
  for (std::size_t j = 0; j < dimension; ++j) g.col(static_cast<Eigen::Index>(j)) = random_gaussian_vector(full, rng);
  // Modified Gram-Schmidt keeps the column order and sampling unbiased.
  std::vector<StateVector> basis;
  for (Eigen::Index j = 0; j < g.cols(); ++j) {
    Amplitudes v = g.col(j);
    for (const StateVector& b : basis) v -= b.amplitudes().dot(v) * b.amplitudes();
    basis.push_back(StateVector::normalized(n, std::move(v)));
  }
  return QuantumCode(std::move(basis));
}

FalsificationResult sample_erasure_codes(int n, std::int64_t trials, std::uint64_t seed,
                                         std::span<const QuantumCode> injected) {
  if (trials < 0) throw std::invalid_argument("trial count must be non-negative");
  FalsificationResult result{n, 0, 0};
  for (std::int64_t i = 0; i < trials; ++i) {
    Rng rng = make_stream(seed, static_cast<std::uint64_t>(i));
    if (check_erasure_kl(random_code(n, 2, rng), 1).passed) ++result.passes;
    ++result.trials;
  }
  for (const QuantumCode& code : injected) {
    if (code.n() != n) throw std::invalid_argument("injected code has the wrong length");
    if (check_erasure_kl(code, 1).passed) ++result.passes;
    ++result.trials;
  }
  return result;
}

std::int64_t falsify_short_codes(int n, std::int64_t trials, std::uint64_t seed) {
  if (n != 2 && n != 3) {
    throw std::invalid_argument("falsify_short_codes: n must be 2 or 3");
  }
  return sample_erasure_codes(n, trials, seed).passes;
}

}  // namespace qec
