#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "oracles.h"
#include "qec/random.h"
#include "qec/state.h"

using namespace qec;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

StateVector zero_bar() { return make_state(4, {{"0000", 1.0}, {"1111", 1.0}}); }

double dist(const Amplitudes& a, const Amplitudes& b) { return (a - b).norm(); }

}  // namespace

TEST(MakeState, NormalizesFourQubitCodeword) {
  const StateVector s = zero_bar();
  EXPECT_EQ(s.num_qubits(), 4);
  EXPECT_NEAR(std::abs(s.amplitude("0000") - kInvSqrt2), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(s.amplitude("1111") - kInvSqrt2), 0.0, 1e-15);
  EXPECT_NEAR(s.amplitudes().norm(), 1.0, 1e-15);
  EXPECT_EQ(s[15], s.amplitude("1111"));
}

TEST(MakeState, SingleKetIsExact) {
  const StateVector s = make_state(1, {{"0", 1.0}});
  EXPECT_EQ(s[0], Complex(1.0, 0.0));
  EXPECT_EQ(s[1], Complex(0.0, 0.0));
}

TEST(MakeState, CancellationIsNullState) {
  try {
    make_state(2, {{"00", 1.0}, {"00", -1.0}});
    FAIL() << "expected null state";
  } catch (const std::invalid_argument& e) {
    EXPECT_STREQ(e.what(), "null state");
  }
}

TEST(MakeState, DuplicatesAreSummed) {
  const StateVector s = make_state(2, {{"01", 1.0}, {"01", 1.0}, {"10", 2.0}});
  EXPECT_NEAR(std::abs(s.amplitude("01") - s.amplitude("10")), 0.0, 1e-15);
}

TEST(MakeState, RejectsBadBitstrings) {
  EXPECT_THROW(make_state(2, {{"010", 1.0}}), std::invalid_argument);
  EXPECT_THROW(make_state(2, {{"0a", 1.0}}), std::invalid_argument);
}

TEST(BitOrdering, QubitOneIsMostSignificant) {
  EXPECT_EQ(bits_to_index("1001"), 9U);
  EXPECT_EQ(index_to_bits(9, 4), "1001");
  EXPECT_EQ(qubit_bit(9, 1, 4), 1);
  EXPECT_EQ(qubit_bit(9, 2, 4), 0);
  EXPECT_EQ(qubit_bit(9, 4, 4), 1);
  const StateVector s = make_state(4, {{"1001", 1.0}});
  EXPECT_EQ(s[9], Complex(1.0));
}

TEST(BitOrdering, RoundTripRecoversCoefficients) {
  Rng rng(11);
  std::normal_distribution<double> g;
  for (int n = 1; n <= 5; ++n) {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < dimension_of(n); ++i) terms.push_back({index_to_bits(i, n), Complex(g(rng), g(rng))});
    const StateVector s = make_state(n, terms);
    double norm = 0.0;
    for (const auto& t : terms) norm += std::norm(t.coefficient);
    for (const auto& t : terms) EXPECT_NEAR(std::abs(s.amplitude(t.bits) * std::sqrt(norm) - t.coefficient), 0.0, 1e-12);
  }
}

TEST(StateVector, ValidatesInvariants) {
  EXPECT_THROW(StateVector(2, Amplitudes::Zero(3)), std::invalid_argument);
  Amplitudes a = Amplitudes::Zero(4);
  a[0] = 2.0;
  EXPECT_THROW(StateVector(2, a), std::invalid_argument);
  EXPECT_THROW(StateVector::normalized(2, Amplitudes::Zero(4)), std::invalid_argument);
  EXPECT_THROW(check_num_qubits(kMaxQubits + 1), std::invalid_argument);
  EXPECT_THROW(check_num_qubits(0), std::invalid_argument);
  EXPECT_NO_THROW(check_num_qubits(kMaxQubits));
}

TEST(DensityMatrix, ValidatesInvariants) {
  Operator m = Operator::Zero(2, 2);
  m(0, 0) = 1.0;
  EXPECT_NO_THROW(DensityMatrix(1, m));
  m(0, 1) = 0.5;
  EXPECT_THROW(DensityMatrix(1, m), std::invalid_argument);  // not Hermitian
  Operator t = Operator::Identity(2, 2);
  EXPECT_THROW(DensityMatrix(1, t), std::invalid_argument);  // trace 2
}

TEST(EmbedLocal, BasisAction) {
  const LocalOperator op(2, ket_bra(0, 1));
  const Amplitudes out = apply_local(op, make_state(2, {{"01", 1.0}}).amplitudes(), 2);
  EXPECT_NEAR(dist(out, make_state(2, {{"00", 1.0}}).amplitudes()), 0.0, 1e-15);
  EXPECT_NEAR(dist(embed_local(op, 2) * make_state(2, {{"01", 1.0}}).amplitudes(), out), 0.0, 1e-15);
}

TEST(EmbedLocal, BitFlipOnFirstQubit) {
  const LocalOperator op(1, pauli_matrix('X'));
  const Amplitudes out = apply_local(op, StateVector::basis(4, 0).amplitudes(), 4);
  EXPECT_NEAR(dist(out, make_state(4, {{"1000", 1.0}}).amplitudes()), 0.0, 1e-15);
}

TEST(EmbedLocal, ProjectorOnFourQubitCodeword) {
  const LocalOperator op(3, ket_bra(1, 1));
  const Amplitudes out = apply_local(op, zero_bar().amplitudes(), 4);
  Amplitudes expected = Amplitudes::Zero(16);
  expected[15] = kInvSqrt2;
  EXPECT_NEAR(dist(out, expected), 0.0, 1e-15);
}

TEST(EmbedLocal, MatchesKroneckerOracle) {
  Rng rng(3);
  for (int n = 1; n <= 5; ++n) {
    for (int pos = 1; pos <= n; ++pos) {
      Matrix2 m;
      m << Complex(0.3, 0.1), Complex(-1.2, 0.4), Complex(0.0, 2.0), Complex(0.7, -0.5);
      EXPECT_NEAR((embed_local(LocalOperator(pos, m), n) - oracle::local_full(pos, m, n)).norm(), 0.0, 1e-14);
    }
  }
}

TEST(EmbedLocal, RejectsOutOfRangePosition) {
  EXPECT_THROW(embed_local(LocalOperator(3, pauli_matrix('X')), 2), std::invalid_argument);
  EXPECT_THROW(LocalOperator(0, pauli_matrix('X')), std::invalid_argument);
  Matrix2 bad = Matrix2::Identity();
  bad(0, 0) = std::nan("");
  EXPECT_THROW(LocalOperator(1, bad), std::invalid_argument);
}

TEST(EmbedLocal, IsLinearAndUnitaryPreservesNorm) {
  Rng rng(5);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + trial % 5;
    const int pos = 1 + trial % n;
    const StateVector a = random_state(n, rng), b = random_state(n, rng);
    const Complex alpha(g(rng), g(rng)), beta(g(rng), g(rng));
    const LocalOperator u(pos, random_unitary(rng));
    const Amplitudes lhs = apply_local(u, alpha * a.amplitudes() + beta * b.amplitudes(), n);
    const Amplitudes rhs = alpha * apply_local(u, a.amplitudes(), n) + beta * apply_local(u, b.amplitudes(), n);
    EXPECT_NEAR(dist(lhs, rhs), 0.0, 1e-12);
    EXPECT_NEAR(apply_local(u, a.amplitudes(), n).norm(), 1.0, 1e-12);
  }
}

TEST(Pauli, StringMatchesKronecker) {
  const PauliString p("XYZI");
  std::vector<Operator> f = {pauli_matrix('X'), pauli_matrix('Y'), pauli_matrix('Z'), pauli_matrix('I')};
  EXPECT_NEAR((p.matrix() - oracle::kron_all(f)).norm(), 0.0, 1e-15);
  Rng rng(2);
  const StateVector s = random_state(4, rng);
  EXPECT_NEAR(dist(p.apply(s.amplitudes()), oracle::kron_all(f) * s.amplitudes()), 0.0, 1e-13);
  EXPECT_FALSE(p.is_identity());
  EXPECT_TRUE(PauliString("II").is_identity());
  EXPECT_THROW(PauliString("XQ"), std::invalid_argument);
}

TEST(Hadamard, FourQubitDualStates) {
  const StateVector z = hadamard_all(zero_bar());
  const StateVector o = hadamard_all(make_state(4, {{"1001", 1.0}, {"0110", 1.0}}));
  const std::vector<std::string> even = {"0000", "0011", "0101", "0110", "1001", "1010", "1100", "1111"};
  const std::vector<int> sign1 = {+1, -1, -1, +1, +1, -1, -1, +1};
  const double a = 1.0 / std::sqrt(8.0);
  for (std::size_t i = 0; i < even.size(); ++i) {
    EXPECT_NEAR(std::abs(z.amplitude(even[i]) - a), 0.0, 1e-12) << even[i];
    EXPECT_NEAR(std::abs(o.amplitude(even[i]) - sign1[i] * a), 0.0, 1e-12) << even[i];
  }
  EXPECT_NEAR(parity_probabilities(z).odd, 0.0, 1e-15);
}

TEST(Hadamard, MatchesKroneckerOracleAndIsInvolutive) {
  Rng rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 7;
    const StateVector s = random_state(n, rng);
    const StateVector h = hadamard_all(s);
    if (n <= 5) EXPECT_NEAR(dist(h.amplitudes(), oracle::hadamard_full(n) * s.amplitudes()), 0.0, 1e-12);
    EXPECT_NEAR(h.amplitudes().norm(), 1.0, 1e-12);
    EXPECT_NEAR(dist(hadamard_all(h).amplitudes(), s.amplitudes()), 0.0, 1e-12);
  }
}

TEST(Parity, Examples) {
  const auto p0 = parity_probabilities(zero_bar());
  EXPECT_NEAR(p0.even, 1.0, 1e-15);
  EXPECT_NEAR(p0.odd, 0.0, 1e-15);

  const StateVector flipped(4, apply_local(LocalOperator(2, pauli_matrix('X')), zero_bar().amplitudes(), 4));
  const auto p1 = parity_probabilities(flipped);
  EXPECT_NEAR(p1.even, 0.0, 1e-15);
  EXPECT_NEAR(p1.odd, 1.0, 1e-15);

  const auto p2 = parity_probabilities(make_state(1, {{"0", 1.0}, {"1", 1.0}}));
  EXPECT_NEAR(p2.even, 0.5, 1e-15);
  EXPECT_NEAR(p2.odd, 0.5, 1e-15);
}

TEST(ReducedDensity, ProductState) {
  const StateVector s = make_state(2, {{"00", 1.0}, {"01", 1.0}});
  const std::vector<int> keep = {1};
  const DensityMatrix r = reduced_density(s, keep);
  Operator expected = Operator::Zero(2, 2);
  expected(0, 0) = 1.0;
  EXPECT_NEAR((r.matrix() - expected).norm(), 0.0, 1e-15);
  EXPECT_NEAR(r.purity(), 1.0, 1e-10);
}

TEST(ReducedDensity, BellStateIsMaximallyMixed) {
  const StateVector s = make_state(2, {{"00", 1.0}, {"11", 1.0}});
  const std::vector<int> keep = {1};
  EXPECT_NEAR((reduced_density(s, keep).matrix() - 0.5 * Operator::Identity(2, 2)).norm(), 0.0, 1e-15);
}

TEST(ReducedDensity, FourQubitCodewordOnThreeQubits) {
  const std::vector<int> keep = {2, 3, 4};
  const DensityMatrix r = reduced_density(zero_bar(), keep);
  Operator expected = Operator::Zero(8, 8);
  expected(0, 0) = 0.5;
  expected(7, 7) = 0.5;
  EXPECT_NEAR((r.matrix() - expected).norm(), 0.0, 1e-15);
}

TEST(ReducedDensity, RejectsEmptyOrBadSubset) {
  const std::vector<int> none;
  EXPECT_THROW(reduced_density(zero_bar(), none), std::invalid_argument);
  const std::vector<int> bad = {5};
  EXPECT_THROW(reduced_density(zero_bar(), bad), std::invalid_argument);
}

TEST(ReducedDensity, MatchesPartialTraceOracle) {
  Rng rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + trial % 4;
    // Mixed input: average of two random pure states.
    const StateVector a = random_state(n, rng), b = random_state(n, rng);
    const Operator rho = 0.5 * (a.amplitudes() * a.amplitudes().adjoint() + b.amplitudes() * b.amplitudes().adjoint());
    const DensityMatrix dm(n, rho);
    for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
      std::vector<int> keep;
      for (int q = 1; q <= n; ++q)
        if (mask >> (q - 1) & 1U) keep.push_back(q);
      const DensityMatrix r = reduced_density(dm, keep);
      EXPECT_NEAR((r.matrix() - oracle::partial_trace(rho, n, keep)).norm(), 0.0, 1e-12);
      EXPECT_NEAR(r.trace(), 1.0, 1e-12);
      const DensityMatrix rp = reduced_density(a, keep);
      EXPECT_NEAR(rp.trace(), 1.0, 1e-12);
    }
  }
}

TEST(ReducedDensity, ProductStatesStayPure) {
  Rng rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const StateVector a = random_state(2, rng), b = random_state(1, rng);
    const StateVector ab(3, oracle::kron(a.amplitudes(), b.amplitudes()));
    const std::vector<int> k12 = {1, 2}, k3 = {3};
    EXPECT_NEAR(reduced_density(ab, k12).purity(), 1.0, 1e-10);
    EXPECT_NEAR(reduced_density(ab, k3).purity(), 1.0, 1e-10);
  }
}

TEST(Fidelity, Examples) {
  const DensityMatrix zero = DensityMatrix::pure(StateVector::basis(1, 0));
  EXPECT_NEAR(fidelity(zero, StateVector::basis(1, 0)), 1.0, 1e-15);
  EXPECT_NEAR(fidelity(zero, StateVector::basis(1, 1)), 0.0, 1e-15);
  const DensityMatrix mixed(1, 0.5 * Operator::Identity(2, 2));
  EXPECT_NEAR(fidelity(mixed, make_state(1, {{"0", 1.0}, {"1", 1.0}})), 0.5, 1e-15);
  EXPECT_THROW(fidelity(mixed, StateVector::basis(2, 0)), std::invalid_argument);
}
