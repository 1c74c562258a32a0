#include "qec/qbch.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

namespace qec {

InadmissibleCodeError::InadmissibleCodeError(int i, int neg_i)
    : std::invalid_argument("defining set is inadmissible: contains both " + std::to_string(i) + " and " +
                            std::to_string(neg_i) + " (cosets (" + std::to_string(i) + "," + std::to_string(neg_i) +
                            "))"),
      coset_(i),
      negated_coset_(neg_i) {}

namespace {

// Words of `code` that extend a basis of `code_dual` to a basis of `code`.
std::vector<std::uint64_t> quotient_generators(const Gf2Matrix& code, const Gf2Matrix& code_dual) {
  if (!code.contains_row_space(code_dual)) {
    throw std::invalid_argument("dual code is not contained in the code");
  }
  std::vector<std::uint64_t> echelon = code_dual.rref().rows();
  std::vector<std::uint64_t> generators;
  for (std::uint64_t row : code.rows()) {
    std::uint64_t v = row;
    // reduce against the growing echelon basis (pivot = lowest set bit)
    bool changed = true;
    while (changed && v != 0) {
      changed = false;
      for (std::uint64_t e : echelon) {
        if (e != 0 && (v & (std::uint64_t{1} << lowest_bit(e)))) {
          v ^= e;
          changed = true;
        }
      }
    }
    if (v == 0) continue;
    // keep echelon fully reduced at the new pivot
    const std::uint64_t bit = std::uint64_t{1} << lowest_bit(v);
    for (std::uint64_t& e : echelon) {
      if (e & bit) e ^= v;
    }
    echelon.push_back(v);
    generators.push_back(row);
  }
  return generators;
}

bool lex_less(const BitVector& a, const BitVector& b) { return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end()); }

std::vector<BitVector> enumerate_cosets(const std::vector<std::uint64_t>& generators, const Gf2Matrix& dual_rref,
                                        int cols) {
  const std::size_t count = std::size_t{1} << generators.size();
  std::vector<BitVector> reps;
  reps.reserve(count);
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < count; ++i) {
    if (i > 0) v ^= generators[static_cast<std::size_t>(std::countr_zero(i))];
    reps.push_back(from_mask(dual_rref.reduce(v), cols));
  }
  std::sort(reps.begin(), reps.end(), lex_less);
  return reps;
}

}  // namespace

std::vector<BitVector> coset_representatives(const Gf2Matrix& code, const Gf2Matrix& code_dual) {
  const std::vector<std::uint64_t> generators = quotient_generators(code, code_dual);
  if (generators.size() > 20) {
    throw std::invalid_argument("too many cosets to enumerate (K = " + std::to_string(generators.size()) + ")");
  }
  return enumerate_cosets(generators, code_dual.rref(), code.cols());
}

CssCode build_qbch(const CyclicCodeSpec& classical) {
  if (const auto violation = find_admissibility_violation(classical.defining_set, classical.N)) {
    throw InadmissibleCodeError(violation->first, violation->second);
  }
  if (classical.N > kMaxMatrixColumns) {
    throw std::invalid_argument("QBCH construction supports N <= 64");
  }
  const Gf2Matrix code_matrix = generator_matrix(classical);
  const Gf2Matrix dual_matrix = generator_matrix(dual_code(classical));

  CssCode out;
  out.N = classical.N;
  out.K = 2 * classical.K - classical.N;
  out.designed_distance = classical.d_bch;
  if (classical.K <= 20) {
    out.d = min_distance_bruteforce(code_matrix);
    out.distance_is_true = true;
  } else {
    out.d = classical.d_bch;
  }
  out.classical = classical;
  out.dual_generator = dual_matrix;

  const std::vector<std::uint64_t> generators = quotient_generators(code_matrix, dual_matrix);
  if (static_cast<int>(generators.size()) != out.K) {
    throw std::logic_error("coset count does not match 2 dim C - N");
  }
  for (std::uint64_t g : generators) out.coset_generators.push_back(from_mask(g, out.N));
  if (out.K <= kMaxEnumeratedLogicalQubits) {
    out.coset_reps = enumerate_cosets(generators, dual_matrix.rref(), out.N);
  }
  return out;
}

std::vector<SparseCodeState> qbch_states(const CssCode& code) {
  if (code.coset_reps.empty()) {
    throw std::invalid_argument("coset representatives were not enumerated for this code");
  }
  // all words of C-perp
  const std::vector<std::uint64_t>& rows = code.dual_generator.rows();
  std::vector<std::uint64_t> dual_words;
  const std::size_t count = std::size_t{1} << rows.size();
  dual_words.reserve(count);
  std::uint64_t w = 0;
  for (std::size_t i = 0; i < count; ++i) {
    if (i > 0) w ^= rows[static_cast<std::size_t>(std::countr_zero(i))];
    dual_words.push_back(w);
  }
  std::vector<SparseCodeState> states;
  for (const BitVector& rep : code.coset_reps) {
    const std::uint64_t v = to_mask(rep);
    SparseCodeState s{code.N, {}};
    s.support.reserve(dual_words.size());
    for (std::uint64_t c : dual_words) s.support.push_back(from_mask(c ^ v, code.N));
    std::sort(s.support.begin(), s.support.end(), lex_less);
    states.push_back(std::move(s));
  }
  return states;
}

StateVector densify(const SparseCodeState& state) {
  if (state.N > kMaxDenseLength) {
    throw std::invalid_argument("code length " + std::to_string(state.N) + " too large for dense simulation (max " +
                                std::to_string(kMaxDenseLength) + ")");
  }
  if (state.support.empty()) throw std::invalid_argument("empty support");
  Amplitudes a = Amplitudes::Zero(static_cast<Eigen::Index>(dimension_of(state.N)));
  const double amp = 1.0 / std::sqrt(static_cast<double>(state.support.size()));
  for (const BitVector& word : state.support) {
    if (static_cast<int>(word.size()) != state.N) throw std::invalid_argument("support word has wrong length");
    std::uint64_t index = 0;
    for (std::uint8_t bit : word) index = (index << 1) | bit;
    a[static_cast<Eigen::Index>(index)] = amp;
  }
  return StateVector(state.N, std::move(a));
}

QuantumCode to_quantum_code(const CssCode& code) {
  std::vector<StateVector> basis;
  for (const SparseCodeState& s : qbch_states(code)) basis.push_back(densify(s));
  return QuantumCode(std::move(basis));
}

QuantumParameters qbch_parameters(const CyclicCodeSpec& classical) {
  if (const auto violation = find_admissibility_violation(classical.defining_set, classical.N)) {
    throw InadmissibleCodeError(violation->first, violation->second);
  }
  QuantumParameters p;
  p.N = classical.N;
  p.K = 2 * classical.K - classical.N;
  if (classical.K <= 20 && classical.N <= kMaxMatrixColumns) {
    p.d = min_distance_bruteforce(classical);
    p.distance_is_true = true;
  } else {
    p.d = classical.d_bch;
  }
  return p;
}

CssPairParameters css_pair_parameters(const Gf2Matrix& code1, const Gf2Matrix& code2) {
  if (code1.cols() != code2.cols()) throw std::invalid_argument("codes must have the same length");
  const Gf2Matrix c1 = code1.rref();
  const Gf2Matrix c2 = code2.rref();
  if (!c1.contains_row_space(c2.null_space())) {
    throw std::invalid_argument("C2-perp is not contained in C1");
  }
  CssPairParameters p;
  p.N = code1.cols();
  p.K = c1.num_rows() - (p.N - c2.num_rows());
  if (c1.num_rows() <= 20 && c2.num_rows() <= 20 && c1.num_rows() > 0 && c2.num_rows() > 0) {
    p.d = std::min(min_distance_bruteforce(c1), min_distance_bruteforce(c2));
  }
  return p;
}

}  // namespace qec
