#include <gtest/gtest.h>

#include <vector>

#include "oracles.h"
#include "qec/code_analysis.h"
#include "qec/erasure_channel.h"
#include "qec/random.h"

using namespace qec;

namespace {

QuantumCode four_k1() { return builtin_code(BuiltinCode::kFourQubitK1); }
QuantumCode four_k2() { return builtin_code(BuiltinCode::kFourQubitK2); }
QuantumCode steane() { return builtin_code(BuiltinCode::kSteane7); }

QuantumCode code_of(int n, std::vector<std::vector<Term>> states) {
  std::vector<StateVector> basis;
  for (const auto& terms : states) basis.push_back(make_state(n, terms));
  return QuantumCode(std::move(basis));
}

// Apply the same local unitary at `pos` to every codeword.
QuantumCode rotate(const QuantumCode& code, int pos, const Matrix2& u) {
  std::vector<StateVector> out;
  for (const auto& s : code.basis())
    out.emplace_back(code.n(), apply_local(LocalOperator(pos, u), s.amplitudes(), code.n()));
  return QuantumCode(std::move(out));
}

// |theta> inserted at `pos` into every codeword.
QuantumCode with_factor(const QuantumCode& code, int pos, const StateVector& theta) {
  const int n = code.n() + 1;
  std::vector<StateVector> out;
  for (const auto& s : code.basis()) {
    Amplitudes a = Amplitudes::Zero(static_cast<Eigen::Index>(dimension_of(n)));
    for (std::size_t i = 0; i < s.dimension(); ++i) {
      const std::string bits = index_to_bits(i, code.n());
      for (int b = 0; b < 2; ++b) {
        std::string full = bits;
        full.insert(static_cast<std::size_t>(pos - 1), 1, static_cast<char>('0' + b));
        a[static_cast<Eigen::Index>(bits_to_index(full))] += s[i] * theta[static_cast<std::size_t>(b)];
      }
    }
    out.emplace_back(n, a);
  }
  return QuantumCode(std::move(out));
}

}  // namespace

TEST(QuantumCode, ValidatesOrthonormalityAndShape) {
  EXPECT_EQ(four_k1().n(), 4);
  EXPECT_EQ(four_k1().k(), 1);
  EXPECT_EQ(four_k2().k(), 2);
  EXPECT_THROW(code_of(2, {{{"00", 1.0}}, {{"00", 1.0}, {"01", 1.0}}}), std::invalid_argument);
  EXPECT_THROW(code_of(2, {{{"00", 1.0}}, {{"01", 1.0}}, {{"10", 1.0}}}), std::invalid_argument);
  EXPECT_THROW(QuantumCode({StateVector::basis(2, 0), StateVector::basis(3, 1)}), std::invalid_argument);
  EXPECT_THROW(QuantumCode(std::vector<StateVector>{}), std::invalid_argument);
}

TEST(OperatorBasis, SinglePositionHasFourOperators) {
  const std::vector<int> pos = {2};
  const auto ops = one_error_operator_basis(4, pos);
  ASSERT_EQ(ops.size(), 4U);
  std::set<std::string> labels;
  for (const auto& op : ops) labels.insert(op.label());
  EXPECT_EQ(labels, (std::set<std::string>{"P_00", "P_01", "P_10", "P_11"}));
  for (const auto& op : ops) EXPECT_EQ(op.positions(), pos);
}

TEST(OperatorBasis, TwoPositionsGiveSixteen) {
  const std::vector<int> pos = {1, 3};
  EXPECT_EQ(one_error_operator_basis(3, pos).size(), 16U);
  const std::vector<int> none;
  EXPECT_THROW(one_error_operator_basis(3, none), std::invalid_argument);
  const std::vector<int> bad = {4};
  EXPECT_THROW(one_error_operator_basis(3, bad), std::invalid_argument);
}

TEST(OperatorBasis, SpansAllTwoQubitOperators) {
  const std::vector<int> pos = {1, 2};
  const auto ops = one_error_operator_basis(2, pos);
  Rng rng(4);
  std::normal_distribution<double> g;
  Operator m(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = Complex(g(rng), g(rng));
  Operator rebuilt = Operator::Zero(4, 4);
  for (const auto& op : ops) {
    Operator full = Operator::Identity(4, 4);
    for (const auto& l : op.local_operators()) full = embed_local(l, 2) * full;
    // Coefficient: Hilbert-Schmidt projection (basis is orthonormal).
    rebuilt += (full.adjoint() * m).trace() * full;
  }
  EXPECT_NEAR((rebuilt - m).norm(), 0.0, 1e-12);
}

TEST(OperatorBasis, AdjointAndLabels) {
  ErrorOperator op{{{1, 0, 1}, {3, 1, 0}}};
  EXPECT_EQ(op.label(), "P_01*P_10");
  EXPECT_EQ(op.adjoint().label(), "P_10*P_01");
  EXPECT_EQ(ErrorOperator{}.label(), "I");
}

TEST(PositionSubsets, Lexicographic) {
  const auto s = position_subsets(4, 2);
  ASSERT_EQ(s.size(), 6U);
  EXPECT_EQ(s.front(), (std::vector<int>{1, 2}));
  EXPECT_EQ(s.back(), (std::vector<int>{3, 4}));
  EXPECT_EQ(position_subsets(7, 2).size(), 21U);
  EXPECT_EQ(position_subsets(3, 0).size(), 1U);
}

TEST(ErasureKl, BuiltinCodesPass) {
  EXPECT_TRUE(check_erasure_kl(four_k1(), 1).passed);
  EXPECT_TRUE(check_erasure_kl(four_k2(), 1).passed);
}

TEST(ErasureKl, RepetitionPairFailsWithWitness) {
  const QuantumCode c = code_of(2, {{{"00", 1.0}}, {{"11", 1.0}}});
  const ConditionReport r = check_erasure_kl(c, 1);
  EXPECT_FALSE(r.passed);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->positions.size(), 1U);
  EXPECT_LE(r.witness->pair.first, 1);
  EXPECT_LE(r.witness->pair.second, 1);
  EXPECT_NEAR(r.worst_expectation_gap, 1.0, 1e-12);
}

TEST(ErasureKl, PassedIffBothWorstValuesBelowTolerance) {
  Rng rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const QuantumCode c = random_code(3, 2, rng);
    const ConditionReport r = check_erasure_kl(c, 1);
    EXPECT_EQ(r.passed, r.worst_expectation_gap < kConditionTolerance && r.worst_off_diagonal < kConditionTolerance);
    EXPECT_EQ(r.passed, !r.witness.has_value());
  }
}

TEST(ErasureKl, AgreesWithMaterializedOracle) {
  Rng rng(29);
  std::vector<QuantumCode> codes = {four_k1(), four_k2(), code_of(2, {{{"00", 1.0}}, {{"11", 1.0}}})};
  for (int i = 0; i < 6; ++i) codes.push_back(random_code(3 + i % 2, 2, rng));
  for (const auto& c : codes) {
    for (int t = 1; t <= std::min(c.n(), 2); ++t) {
      const ConditionReport r = check_erasure_kl(c, t);
      const auto o = oracle::erasure_kl(c, t);
      EXPECT_EQ(r.passed, o.passed);
      EXPECT_NEAR(r.worst_expectation_gap, o.gap, 1e-12);
      EXPECT_NEAR(r.worst_off_diagonal, o.off, 1e-12);
    }
  }
}

TEST(ErasureKl, MonotoneInT) {
  std::vector<QuantumCode> codes = {four_k1(), four_k2(), steane()};
  for (const auto& c : codes) {
    for (int t = c.n(); t >= 1; --t) {
      if (!check_erasure_kl(c, t).passed) continue;
      for (int s = 0; s < t; ++s) EXPECT_TRUE(check_erasure_kl(c, s).passed) << "t=" << t << " s=" << s;
    }
  }
}

TEST(GeneralKl, FourQubitCodeFails) {
  EXPECT_FALSE(check_general_kl(four_k1(), 1).passed);
  EXPECT_FALSE(check_general_kl(four_k1(), 1, GeneralKlMode::kDirectPairs).passed);
}

TEST(GeneralKl, SteanePasses) {
  EXPECT_TRUE(check_general_kl(steane(), 1).passed);
  EXPECT_TRUE(check_general_kl(steane(), 1, GeneralKlMode::kDirectPairs).passed);
}

TEST(GeneralKl, TZeroAlwaysPasses) {
  Rng rng(3);
  EXPECT_TRUE(check_general_kl(random_code(3, 2, rng), 0).passed);
  EXPECT_TRUE(check_general_kl(four_k1(), 0, GeneralKlMode::kDirectPairs).passed);
}

TEST(GeneralKl, ModesAgreeAndMatchErasureAtTwiceT) {
  Rng rng(41);
  std::vector<QuantumCode> codes = {four_k1(), four_k2(), steane()};
  for (int i = 0; i < 6; ++i) codes.push_back(random_code(3 + i % 3, 2, rng));
  for (const auto& c : codes) {
    const bool fast = check_general_kl(c, 1).passed;
    const bool direct = check_general_kl(c, 1, GeneralKlMode::kDirectPairs).passed;
    EXPECT_EQ(fast, direct);
    EXPECT_EQ(fast, check_erasure_kl(c, std::min(2, c.n())).passed);
  }
}

TEST(ErasureImpliesGeneral, Examples) {
  EXPECT_TRUE(check_erasure_kl(steane(), 2).passed);
  EXPECT_TRUE(erasure_implies_general(steane(), 1));
  EXPECT_TRUE(erasure_implies_general(four_k1(), 1));
  Rng rng(55);
  for (int i = 0; i < 100; ++i) EXPECT_TRUE(erasure_implies_general(random_code(5, 2, rng), 1));
}

TEST(LocalUnitaryInvariance, VerdictsUnchanged) {
  Rng rng(13);
  std::vector<QuantumCode> codes = {four_k1(), four_k2(), code_of(2, {{{"00", 1.0}}, {{"11", 1.0}}})};
  for (const auto& c : codes) {
    for (int pos = 1; pos <= c.n(); ++pos) {
      const QuantumCode r = rotate(c, pos, random_unitary(rng));
      for (int t = 0; t <= 2; ++t) {
        EXPECT_EQ(check_erasure_kl(c, t).passed, check_erasure_kl(r, t).passed);
        EXPECT_EQ(check_general_kl(c, t).passed, check_general_kl(r, t).passed);
      }
    }
  }
}

TEST(ProductState, FirstVectorAlreadyProduct) {
  const auto r = find_product_state(make_state(2, {{"00", 1.0}}), make_state(2, {{"01", 1.0}}));
  EXPECT_TRUE(r.found);
  EXPECT_NEAR(std::abs(r.c1), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(r.state.amplitude("00")), 1.0, 1e-12);
}

TEST(ProductState, BellPair) {
  const auto r = find_product_state(make_state(2, {{"00", 1.0}, {"11", 1.0}}), make_state(2, {{"00", 1.0}, {"11", -1.0}}));
  EXPECT_TRUE(r.found);
  EXPECT_NEAR(std::abs(r.c1 - 0.5), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(r.c12), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(r.c2 + 0.5), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(r.eta[0]), std::abs(r.eta[1]), 1e-12);
  const double p00 = std::norm(r.state.amplitude("00")), p11 = std::norm(r.state.amplitude("11"));
  EXPECT_NEAR(std::max(p00, p11), 1.0, 1e-12);
  EXPECT_LT(product_state_residual(r.state), 1e-12);
}

TEST(ProductState, RandomSubspacesAlwaysContainOne) {
  Rng rng(77);
  for (int trial = 0; trial < 1000; ++trial) {
    const StateVector b1 = random_state(2, rng), b2 = random_state(2, rng);
    const auto r = find_product_state(b1, b2);
    ASSERT_TRUE(r.found);
    EXPECT_LT(product_state_residual(r.state), 1e-9);
    // In span{b1, b2}: least-squares residual of the projection.
    Eigen::MatrixXcd B(4, 2);
    B.col(0) = b1.amplitudes();
    B.col(1) = b2.amplitudes();
    const Eigen::VectorXcd coeff = B.colPivHouseholderQr().solve(r.state.amplitudes());
    EXPECT_LT((B * coeff - r.state.amplitudes()).norm(), 1e-10);
  }
}

TEST(ProductState, NonOrthogonalInputsAndDependentInputs) {
  const StateVector a = make_state(2, {{"00", 1.0}, {"11", 1.0}});
  const StateVector b = make_state(2, {{"00", 1.0}, {"11", 0.5}});
  const auto r = find_product_state(a, b);
  EXPECT_LT(product_state_residual(r.state), 1e-9);
  EXPECT_THROW(find_product_state(a, a), std::invalid_argument);
  EXPECT_THROW(find_product_state(a, StateVector::basis(3, 0)), std::invalid_argument);
}

TEST(Factor, ExplicitFactorAtFirstPosition) {
  const QuantumCode c = code_of(3, {{{"000", 1.0}}, {{"011", 1.0}}});
  const auto f = detect_factor(c);
  ASSERT_TRUE(f.has_value());
  EXPECT_EQ(f->position, 1);
  EXPECT_NEAR(std::abs(f->state[0]), 1.0, 1e-12);
}

TEST(Factor, FourQubitCodeHasNone) {
  EXPECT_FALSE(detect_factor(four_k1()).has_value());
  EXPECT_FALSE(detect_factor(four_k2()).has_value());
}

TEST(Factor, FactorAtLastPosition) {
  const QuantumCode c = code_of(3, {{{"000", 1.0}, {"110", 1.0}}, {{"010", 1.0}, {"100", 1.0}}});
  const auto f = detect_factor(c);
  ASSERT_TRUE(f.has_value());
  EXPECT_EQ(f->position, 3);
  EXPECT_NEAR(std::abs(f->state[0]), 1.0, 1e-12);
}

TEST(Shorten, RemovesFactor) {
  const QuantumCode a = shorten_code(code_of(3, {{{"000", 1.0}}, {{"011", 1.0}}}), 1);
  EXPECT_EQ(a.n(), 2);
  EXPECT_NEAR(std::abs(a[0].amplitude("00")), 1.0, 1e-12);
  EXPECT_NEAR(std::abs(a[1].amplitude("11")), 1.0, 1e-12);

  const QuantumCode b = shorten_code(code_of(3, {{{"000", 1.0}, {"110", 1.0}}, {{"010", 1.0}, {"100", 1.0}}}), 3);
  const QuantumCode expected = code_of(2, {{{"00", 1.0}, {"11", 1.0}}, {{"01", 1.0}, {"10", 1.0}}});
  for (std::size_t i = 0; i < 2; ++i) EXPECT_NEAR(std::abs(b[i].inner(expected[i])), 1.0, 1e-12);
}

TEST(Shorten, NoFactorIsAnError) {
  for (int pos = 1; pos <= 4; ++pos) EXPECT_THROW(shorten_code(four_k1(), pos), std::invalid_argument);
}

TEST(Shorten, PreservesErasureVerdicts) {
  Rng rng(61);
  std::vector<QuantumCode> bases = {four_k1(), four_k2(), code_of(2, {{{"00", 1.0}}, {{"11", 1.0}}})};
  for (int i = 0; i < 3; ++i) bases.push_back(random_code(3, 2, rng));
  for (const auto& base : bases) {
    const int pos = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(base.n() + 1));
    const QuantumCode big = with_factor(base, pos, random_state(1, rng));
    const auto f = detect_factor(big);
    ASSERT_TRUE(f.has_value());
    const QuantumCode small = shorten_code(big, f->position);
    EXPECT_EQ(small.n(), base.n());
    EXPECT_EQ(small.dimension(), base.dimension());
    for (int t = 0; t <= base.n(); ++t) EXPECT_EQ(check_erasure_kl(small, t).passed, check_erasure_kl(base, t).passed);
  }
}

TEST(Falsify, ShortCodesNeverPass) {
  EXPECT_EQ(falsify_short_codes(2, 2000, 7), 0);
  EXPECT_EQ(falsify_short_codes(3, 2000, 7), 0);
  EXPECT_EQ(falsify_short_codes(3, 1, 7), 0);
  EXPECT_THROW(falsify_short_codes(4, 10, 7), std::invalid_argument);
}

TEST(Falsify, InjectedFourQubitCodePasses) {
  const std::vector<QuantumCode> injected = {four_k1()};
  const auto r = sample_erasure_codes(4, 100, 7, injected);
  EXPECT_EQ(r.trials, 101);
  EXPECT_GE(r.passes, 1);
}

TEST(Falsify, ReproducibleForSeed) {
  const auto a = sample_erasure_codes(3, 50, 19);
  const auto b = sample_erasure_codes(3, 50, 19);
  EXPECT_EQ(a.passes, b.passes);
  EXPECT_EQ(a.trials, b.trials);
}
