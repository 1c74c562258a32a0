#include "qec/state.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <stdexcept>

namespace qec {

void check_num_qubits(int n) {
  if (n < 1 || n > kMaxQubits) {
    throw std::invalid_argument("number of qubits must be in [1, " + std::to_string(kMaxQubits) +
                                "], got " + std::to_string(n));
  }
}

std::uint64_t bits_to_index(std::string_view bits) {
  if (bits.size() > 63) {
    throw std::invalid_argument("bitstring too long");
  }
  std::uint64_t index = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("bitstring must contain only 0 and 1: '" + std::string(bits) + "'");
    }
    index = (index << 1) | static_cast<std::uint64_t>(c - '0');
  }
  return index;
}

std::string index_to_bits(std::uint64_t index, int n) {
  std::string bits(static_cast<std::size_t>(n), '0');
  for (int q = 1; q <= n; ++q) {
    if (qubit_bit(index, q, n)) bits[static_cast<std::size_t>(q - 1)] = '1';
  }
  return bits;
}

StateVector::StateVector(int num_qubits, Amplitudes amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
  check_num_qubits(num_qubits_);
  if (static_cast<std::size_t>(amplitudes_.size()) != dimension_of(num_qubits_)) {
    throw std::invalid_argument("amplitude vector length must be 2^n");
  }
  if (!amplitudes_.allFinite()) {
    throw std::invalid_argument("amplitudes must be finite");
  }
  if (std::abs(amplitudes_.norm() - 1.0) > kStateTolerance) {
    throw std::invalid_argument("state vector is not normalized");
  }
}

StateVector StateVector::normalized(int num_qubits, Amplitudes raw) {
  const double norm = raw.norm();
  if (!(norm > 1e-300) || !std::isfinite(norm)) {
    throw std::invalid_argument("null state");
  }
  raw /= norm;
  return StateVector(num_qubits, std::move(raw));
}

StateVector StateVector::basis(int num_qubits, std::uint64_t index) {
  check_num_qubits(num_qubits);
  if (index >= dimension_of(num_qubits)) {
    throw std::invalid_argument("basis index out of range");
  }
  Amplitudes a = Amplitudes::Zero(static_cast<Eigen::Index>(dimension_of(num_qubits)));
  a[static_cast<Eigen::Index>(index)] = 1.0;
  return StateVector(num_qubits, std::move(a));
}

Complex StateVector::amplitude(std::string_view bits) const {
  if (static_cast<int>(bits.size()) != num_qubits_) {
    throw std::invalid_argument("bitstring length does not match the number of qubits");
  }
  return (*this)[bits_to_index(bits)];
}

StateVector make_state(int n, std::span<const Term> terms) {
  check_num_qubits(n);
  Amplitudes a = Amplitudes::Zero(static_cast<Eigen::Index>(dimension_of(n)));
  for (const Term& term : terms) {
    if (static_cast<int>(term.bits.size()) != n) {
      throw std::invalid_argument("bitstring '" + term.bits + "' does not have length " + std::to_string(n));
    }
    a[static_cast<Eigen::Index>(bits_to_index(term.bits))] += term.coefficient;
  }
  return StateVector::normalized(n, std::move(a));
}

StateVector make_state(int n, std::initializer_list<Term> terms) {
  return make_state(n, std::span<const Term>(terms.begin(), terms.size()));
}

DensityMatrix::DensityMatrix(int num_qubits, Operator entries)
    : num_qubits_(num_qubits), entries_(std::move(entries)) {
  check_num_qubits(num_qubits_);
  const auto dim = static_cast<Eigen::Index>(dimension_of(num_qubits_));
  if (entries_.rows() != dim || entries_.cols() != dim) {
    throw std::invalid_argument("density matrix must be 2^n x 2^n");
  }
  if (!entries_.allFinite()) {
    throw std::invalid_argument("density matrix entries must be finite");
  }
  if ((entries_ - entries_.adjoint()).cwiseAbs().maxCoeff() > kStateTolerance) {
    throw std::invalid_argument("density matrix is not Hermitian");
  }
  if (std::abs(entries_.trace() - Complex(1.0)) > kStateTolerance) {
    throw std::invalid_argument("density matrix does not have unit trace");
  }
}

DensityMatrix DensityMatrix::pure(const StateVector& state) {
  const Amplitudes& a = state.amplitudes();
  return DensityMatrix(state.num_qubits(), a * a.adjoint());
}

double DensityMatrix::purity() const {
  // tr(rho^2) = sum |rho_ij|^2 for Hermitian rho
  return entries_.squaredNorm();
}

double DensityMatrix::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Operator> solver(entries_, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

LocalOperator::LocalOperator(int position_, const Matrix2& matrix_) : position(position_), matrix(matrix_) {
  if (position < 1) {
    throw std::invalid_argument("qubit position must be >= 1");
  }
  if (!matrix.allFinite()) {
    throw std::invalid_argument("local operator entries must be finite");
  }
}

Matrix2 ket_bra(int i, int j) {
  if ((i != 0 && i != 1) || (j != 0 && j != 1)) {
    throw std::invalid_argument("ket_bra indices must be 0 or 1");
  }
  Matrix2 m = Matrix2::Zero();
  m(i, j) = 1.0;
  return m;
}

Matrix2 pauli_matrix(char letter) {
  Matrix2 m;
  switch (letter) {
    case 'I':
      m << 1, 0, 0, 1;
      break;
    case 'X':
      m << 0, 1, 1, 0;
      break;
    case 'Y':
      m << 0, Complex(0, -1), Complex(0, 1), 0;
      break;
    case 'Z':
      m << 1, 0, 0, -1;
      break;
    default:
      throw std::invalid_argument(std::string("unknown Pauli letter '") + letter + "'");
  }
  return m;
}

Matrix2 hadamard_matrix() {
  Matrix2 m;
  m << 1, 1, 1, -1;
  return m / std::sqrt(2.0);
}

namespace {

void check_position(int position, int n) {
  if (position < 1 || position > n) {
    throw std::invalid_argument("qubit position " + std::to_string(position) + " out of range [1, " +
                                std::to_string(n) + "]");
  }
}

void apply_local_in_place(const LocalOperator& op, Amplitudes& a, int n) {
  check_position(op.position, n);
  const std::size_t stride = std::size_t{1} << (n - op.position);
  const std::size_t dim = dimension_of(n);
  const Matrix2& m = op.matrix;
  for (std::size_t base = 0; base < dim; base += 2 * stride) {
    for (std::size_t off = 0; off < stride; ++off) {
      const auto i0 = static_cast<Eigen::Index>(base + off);
      const auto i1 = static_cast<Eigen::Index>(base + off + stride);
      const Complex v0 = a[i0];
      const Complex v1 = a[i1];
      a[i0] = m(0, 0) * v0 + m(0, 1) * v1;
      a[i1] = m(1, 0) * v0 + m(1, 1) * v1;
    }
  }
}

}  // namespace

Amplitudes apply_local(const LocalOperator& op, const Amplitudes& amplitudes, int n) {
  check_num_qubits(n);
  if (static_cast<std::size_t>(amplitudes.size()) != dimension_of(n)) {
    throw std::invalid_argument("vector length does not match 2^n");
  }
  Amplitudes out = amplitudes;
  apply_local_in_place(op, out, n);
  return out;
}

Amplitudes apply_local(std::span<const LocalOperator> ops, const Amplitudes& amplitudes, int n) {
  check_num_qubits(n);
  if (static_cast<std::size_t>(amplitudes.size()) != dimension_of(n)) {
    throw std::invalid_argument("vector length does not match 2^n");
  }
  Amplitudes out = amplitudes;
  for (const LocalOperator& op : ops) apply_local_in_place(op, out, n);
  return out;
}

Operator embed_local(const LocalOperator& op, int n) {
  check_num_qubits(n);
  check_position(op.position, n);
  const auto left = static_cast<Eigen::Index>(dimension_of(op.position - 1));
  const auto right = static_cast<Eigen::Index>(dimension_of(n - op.position));
  const auto dim = static_cast<Eigen::Index>(dimension_of(n));
  Operator out = Operator::Zero(dim, dim);
  // I_left (x) M (x) I_right
  for (Eigen::Index l = 0; l < left; ++l) {
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) {
        if (op.matrix(r, c) == Complex(0.0)) continue;
        for (Eigen::Index k = 0; k < right; ++k) {
          out((l * 2 + r) * right + k, (l * 2 + c) * right + k) = op.matrix(r, c);
        }
      }
    }
  }
  return out;
}

PauliString::PauliString(std::string letters) : letters_(std::move(letters)) {
  if (letters_.empty()) {
    throw std::invalid_argument("Pauli string must not be empty");
  }
  for (char c : letters_) {
    if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
      throw std::invalid_argument("Pauli string may only contain I, X, Y, Z");
    }
  }
}

bool PauliString::is_identity() const {
  return std::all_of(letters_.begin(), letters_.end(), [](char c) { return c == 'I'; });
}

Amplitudes PauliString::apply(const Amplitudes& amplitudes) const {
  const int n = num_qubits();
  std::vector<LocalOperator> ops;
  for (int q = 1; q <= n; ++q) {
    if ((*this)[q] != 'I') ops.emplace_back(q, pauli_matrix((*this)[q]));
  }
  return apply_local(ops, amplitudes, n);
}

Operator PauliString::matrix() const {
  Operator m = Operator::Ones(1, 1);
  for (char c : letters_) {
    const Matrix2 p = pauli_matrix(c);
    Operator next(m.rows() * 2, m.cols() * 2);
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      for (Eigen::Index s = 0; s < m.cols(); ++s) {
        next.block<2, 2>(2 * r, 2 * s) = m(r, s) * p;
      }
    }
    m = std::move(next);
  }
  return m;
}

StateVector hadamard_all(const StateVector& state) {
  // Fast Walsh-Hadamard transform, one butterfly layer per qubit.
  Amplitudes a = state.amplitudes();
  const std::size_t dim = state.dimension();
  const double scale = 1.0 / std::sqrt(2.0);
  for (std::size_t stride = 1; stride < dim; stride <<= 1) {
    for (std::size_t base = 0; base < dim; base += 2 * stride) {
      for (std::size_t off = 0; off < stride; ++off) {
        const auto i0 = static_cast<Eigen::Index>(base + off);
        const auto i1 = static_cast<Eigen::Index>(base + off + stride);
        const Complex v0 = a[i0];
        const Complex v1 = a[i1];
        a[i0] = (v0 + v1) * scale;
        a[i1] = (v0 - v1) * scale;
      }
    }
  }
  return StateVector(state.num_qubits(), std::move(a));
}

ParityProbabilities parity_probabilities(const StateVector& state) {
  double odd = 0.0;
  double total = 0.0;
  for (std::size_t i = 0; i < state.dimension(); ++i) {
    const double p = std::norm(state[i]);
    total += p;
    if (std::popcount(i) % 2 == 1) odd += p;
  }
  return {1.0 - odd / total, odd / total};
}

namespace {

struct Split {
  std::vector<int> kept;
  std::vector<int> traced;
};

Split split_positions(std::span<const int> keep, int n) {
  if (keep.empty()) {
    throw std::invalid_argument("reduced_density: subset to keep must not be empty");
  }
  std::vector<int> kept(keep.begin(), keep.end());
  std::sort(kept.begin(), kept.end());
  if (std::adjacent_find(kept.begin(), kept.end()) != kept.end()) {
    throw std::invalid_argument("reduced_density: duplicate positions");
  }
  for (int p : kept) check_position(p, n);
  std::vector<int> traced;
  for (int q = 1; q <= n; ++q) {
    if (!std::binary_search(kept.begin(), kept.end(), q)) traced.push_back(q);
  }
  return {std::move(kept), std::move(traced)};
}

// Full basis index from a pattern on `kept` and a pattern on `traced`.
std::uint64_t compose(std::uint64_t kept_bits, const std::vector<int>& kept, std::uint64_t traced_bits,
                      const std::vector<int>& traced, int n) {
  std::uint64_t index = 0;
  const int nk = static_cast<int>(kept.size());
  for (int i = 0; i < nk; ++i) {
    if ((kept_bits >> (nk - 1 - i)) & 1U) index |= std::uint64_t{1} << (n - kept[static_cast<std::size_t>(i)]);
  }
  const int nt = static_cast<int>(traced.size());
  for (int i = 0; i < nt; ++i) {
    if ((traced_bits >> (nt - 1 - i)) & 1U) index |= std::uint64_t{1} << (n - traced[static_cast<std::size_t>(i)]);
  }
  return index;
}

}  // namespace

DensityMatrix reduced_density(const StateVector& state, std::span<const int> keep) {
  const int n = state.num_qubits();
  const Split split = split_positions(keep, n);
  const auto nk = static_cast<int>(split.kept.size());
  const auto dk = static_cast<Eigen::Index>(dimension_of(nk));
  const std::size_t dt = std::size_t{1} << split.traced.size();
  // Reshape into a dk x dt matrix M so that rho = M M^dagger.
  Operator m(dk, static_cast<Eigen::Index>(dt));
  for (Eigen::Index a = 0; a < dk; ++a) {
    for (std::size_t e = 0; e < dt; ++e) {
      m(a, static_cast<Eigen::Index>(e)) =
          state[compose(static_cast<std::uint64_t>(a), split.kept, e, split.traced, n)];
    }
  }
  Operator rho = m * m.adjoint();
  rho = (rho + rho.adjoint()) / 2.0;
  return DensityMatrix(nk, std::move(rho));
}

DensityMatrix reduced_density(const DensityMatrix& rho, std::span<const int> keep) {
  const int n = rho.num_qubits();
  const Split split = split_positions(keep, n);
  const auto nk = static_cast<int>(split.kept.size());
  const auto dk = static_cast<Eigen::Index>(dimension_of(nk));
  const std::size_t dt = std::size_t{1} << split.traced.size();
  Operator out = Operator::Zero(dk, dk);
  for (std::size_t e = 0; e < dt; ++e) {
    for (Eigen::Index a = 0; a < dk; ++a) {
      const auto x = static_cast<Eigen::Index>(compose(static_cast<std::uint64_t>(a), split.kept, e, split.traced, n));
      for (Eigen::Index b = 0; b < dk; ++b) {
        const auto y =
            static_cast<Eigen::Index>(compose(static_cast<std::uint64_t>(b), split.kept, e, split.traced, n));
        out(a, b) += rho.matrix()(x, y);
      }
    }
  }
  return DensityMatrix(nk, std::move(out));
}

double fidelity(const DensityMatrix& rho, const StateVector& psi) {
  if (rho.num_qubits() != psi.num_qubits()) {
    throw std::invalid_argument("fidelity: dimension mismatch");
  }
  const Amplitudes& a = psi.amplitudes();
  const double f = a.dot(rho.matrix() * a).real();
  return std::clamp(f, 0.0, 1.0);
}

}  // namespace qec
