#include "qec/classical_bch.h"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace qec {

namespace {

void check_length(int N) {
  if (N < 3) throw std::invalid_argument("code length N must be at least 3");
  if (N % 2 == 0) {
    throw std::invalid_argument("code length N must be odd (gcd(N, 2) = 1), got " + std::to_string(N));
  }
}

int mod(std::int64_t a, int N) {
  std::int64_t r = a % N;
  if (r < 0) r += N;
  return static_cast<int>(r);
}

using Element = GaloisField::Element;
using FieldPoly = std::vector<Element>;  // lowest degree first

FieldPoly poly_mul(const GaloisField& f, const FieldPoly& a, const FieldPoly& b) {
  if (a.empty() || b.empty()) return {};
  FieldPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] ^= f.mul(a[i], b[j]);
  }
  return c;
}

Element poly_eval(const GaloisField& f, const FieldPoly& p, Element x) {
  Element acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = f.mul(acc, x) ^ *it;
  return acc;
}

// Formal derivative in characteristic 2: only odd-degree terms survive.
FieldPoly poly_derivative(const FieldPoly& p) {
  FieldPoly d(p.size() > 1 ? p.size() - 1 : 0, 0);
  for (std::size_t i = 1; i < p.size(); i += 2) d[i - 1] = p[i];
  return d;
}

int poly_degree(const FieldPoly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) {
    if (p[static_cast<std::size_t>(i)] != 0) return i;
  }
  return -1;
}

// Shortest LFSR (connection polynomial with C_0 = 1, and its length L)
// generating the sequence s.
std::pair<FieldPoly, int> berlekamp_massey(const GaloisField& f, const std::vector<Element>& s) {
  FieldPoly c{1};
  FieldPoly prev{1};
  int length = 0;
  int shift = 1;
  Element prev_discrepancy = 1;
  for (std::size_t n = 0; n < s.size(); ++n) {
    Element d = s[n];
    for (int i = 1; i <= length && i < static_cast<int>(c.size()); ++i) {
      d ^= f.mul(c[static_cast<std::size_t>(i)], s[n - static_cast<std::size_t>(i)]);
    }
    if (d == 0) {
      ++shift;
      continue;
    }
    const Element scale = f.div(d, prev_discrepancy);
    FieldPoly next = c;
    if (next.size() < prev.size() + static_cast<std::size_t>(shift)) next.resize(prev.size() + static_cast<std::size_t>(shift), 0);
    for (std::size_t i = 0; i < prev.size(); ++i) next[i + static_cast<std::size_t>(shift)] ^= f.mul(scale, prev[i]);
    if (2 * length <= static_cast<int>(n)) {
      prev = c;
      length = static_cast<int>(n) + 1 - length;
      prev_discrepancy = d;
      shift = 1;
    } else {
      ++shift;
    }
    c = std::move(next);
  }
  c.resize(static_cast<std::size_t>(std::max(poly_degree(c), 0)) + 1);
  return {c, length};
}

void check_word(const CyclicCodeSpec& code, const BitVector& word) {
  if (static_cast<int>(word.size()) != code.N) {
    throw std::invalid_argument("word length " + std::to_string(word.size()) + " does not match code length " +
                                std::to_string(code.N));
  }
  for (std::uint8_t b : word) {
    if (b > 1) throw std::invalid_argument("word entries must be 0 or 1");
  }
}

std::vector<int> checked_erasures(const CyclicCodeSpec& code, const std::vector<int>& erasures) {
  std::vector<int> sorted = erasures;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("duplicate erasure positions");
  }
  for (int p : sorted) {
    if (p < 0 || p >= code.N) {
      throw std::invalid_argument("erasure position " + std::to_string(p) + " out of range [0, " +
                                  std::to_string(code.N - 1) + "]");
    }
  }
  return sorted;
}

}  // namespace

std::set<int> cyclotomic_coset(int i, int N) {
  if (N < 1 || N % 2 == 0) {
    throw std::invalid_argument("cyclotomic cosets need odd N (gcd(N, 2) = 1), got " + std::to_string(N));
  }
  std::set<int> coset;
  int x = mod(i, N);
  while (coset.insert(x).second) x = static_cast<int>((2LL * x) % N);
  return coset;
}

DefiningSet bch_defining_set(int N, int b, int d_bch) {
  check_length(N);
  if (d_bch < 2) throw std::invalid_argument("designed distance must be at least 2");
  DefiningSet set;
  for (int j = b; j <= b + d_bch - 2; ++j) {
    const std::set<int> coset = cyclotomic_coset(j, N);
    set.insert(coset.begin(), coset.end());
  }
  return set;
}

bool is_doubling_closed(const DefiningSet& set, int N) {
  return std::all_of(set.begin(), set.end(), [&](int i) {
    return i >= 0 && i < N && set.count(static_cast<int>((2LL * i) % N)) > 0;
  });
}

DefiningSet dual_defining_set(const DefiningSet& defining_set, int N) {
  if (!is_doubling_closed(defining_set, N)) {
    throw std::invalid_argument("defining set is not a union of cyclotomic cosets");
  }
  DefiningSet dual;
  for (int i = 0; i < N; ++i) {
    if (defining_set.count(i)) continue;
    const std::set<int> coset = cyclotomic_coset(-i, N);
    dual.insert(coset.begin(), coset.end());
  }
  return dual;
}

std::optional<std::pair<int, int>> find_admissibility_violation(const DefiningSet& defining_set, int N) {
  for (int i : defining_set) {
    const int neg = mod(-static_cast<std::int64_t>(i), N);
    if (defining_set.count(neg)) return std::make_pair(i, neg);
  }
  return std::nullopt;
}

bool check_admissible(const DefiningSet& defining_set, int N) {
  if (!is_doubling_closed(defining_set, N)) {
    throw std::invalid_argument("defining set is not a union of cyclotomic cosets");
  }
  return !find_admissibility_violation(defining_set, N).has_value();
}

int field_degree_for_length(int N) {
  check_length(N);
  std::int64_t x = 2 % N;
  int m = 1;
  while (x != 1) {
    x = (x * 2) % N;
    ++m;
  }
  return m;
}

std::pair<int, int> longest_consecutive_run(const DefiningSet& set, int N) {
  if (static_cast<int>(set.size()) >= N) return {0, N + 1};
  int best_start = 0;
  int best_len = 0;
  for (int s : set) {
    if (set.count(mod(s - 1, N))) continue;
    int len = 0;
    while (set.count(mod(static_cast<std::int64_t>(s) + len, N))) ++len;
    if (len > best_len) {
      best_len = len;
      best_start = s;
    }
  }
  return {best_start, best_len + 1};
}

BinaryPolynomial generator_polynomial(const DefiningSet& defining_set, int N, const GaloisField& field) {
  if (!is_doubling_closed(defining_set, N)) {
    throw std::invalid_argument("defining set is not closed under doubling mod N");
  }
  if (field.order() % static_cast<std::uint32_t>(N) != 0) {
    throw std::invalid_argument("GF(2^" + std::to_string(field.m()) + ") has no primitive " + std::to_string(N) +
                                "-th root of unity");
  }
  const std::int64_t step = field.order() / static_cast<std::uint32_t>(N);
  FieldPoly g{1};
  for (int j : defining_set) g = poly_mul(field, g, FieldPoly{field.exp(step * j), 1});
  std::vector<std::uint8_t> bits;
  for (Element c : g) {
    if (c > 1) throw std::logic_error("generator polynomial has a non-binary coefficient");
    bits.push_back(static_cast<std::uint8_t>(c));
  }
  return BinaryPolynomial(std::move(bits));
}

GaloisField::Element CyclicCodeSpec::root_power(std::int64_t j) const {
  return field->exp(static_cast<std::int64_t>(field->order() / static_cast<std::uint32_t>(N)) * mod(j, N));
}

namespace {

CyclicCodeSpec assemble(int N, int b, int d_bch, DefiningSet set, std::optional<std::uint32_t> primitive_polynomial) {
  const int m = field_degree_for_length(N);
  auto field = std::make_shared<const GaloisField>(
      m, primitive_polynomial ? *primitive_polynomial : default_primitive_polynomial(m));
  CyclicCodeSpec code;
  code.N = N;
  code.b = b;
  code.d_bch = d_bch;
  code.generator = generator_polynomial(set, N, *field);
  code.K = N - static_cast<int>(set.size());
  code.defining_set = std::move(set);
  code.field = std::move(field);
  return code;
}

}  // namespace

CyclicCodeSpec make_bch_code(int N, int b, int d_bch, std::optional<std::uint32_t> primitive_polynomial) {
  check_length(N);
  if (d_bch < 2 || d_bch > N) {
    throw std::invalid_argument("designed distance must satisfy 2 <= d_bch <= N");
  }
  return assemble(N, b, d_bch, bch_defining_set(N, b, d_bch), primitive_polynomial);
}

CyclicCodeSpec make_cyclic_code(int N, const DefiningSet& defining_set,
                                std::optional<std::uint32_t> primitive_polynomial) {
  check_length(N);
  const auto [b, d] = longest_consecutive_run(defining_set, N);
  return assemble(N, b, d, defining_set, primitive_polynomial);
}

CyclicCodeSpec dual_code(const CyclicCodeSpec& code) {
  return make_cyclic_code(code.N, dual_defining_set(code.defining_set, code.N), code.field->primitive_polynomial());
}

Gf2Matrix generator_matrix(const CyclicCodeSpec& code) {
  if (code.N > kMaxMatrixColumns) throw std::invalid_argument("generator matrix needs N <= 64");
  const std::uint64_t g = to_mask(code.generator.coefficients());
  std::vector<std::uint64_t> rows;
  for (int i = 0; i < code.K; ++i) rows.push_back(g << i);
  return Gf2Matrix(code.N, std::move(rows));
}

BitVector encode_classical(const CyclicCodeSpec& code, const BitVector& message) {
  if (static_cast<int>(message.size()) != code.K) {
    throw std::invalid_argument("message length " + std::to_string(message.size()) + " does not match K = " +
                                std::to_string(code.K));
  }
  std::vector<std::uint8_t> shifted(static_cast<std::size_t>(code.N), 0);
  for (int i = 0; i < code.K; ++i) {
    if (message[static_cast<std::size_t>(i)] > 1) throw std::invalid_argument("message bits must be 0 or 1");
    shifted[static_cast<std::size_t>(code.N - code.K + i)] = message[static_cast<std::size_t>(i)];
  }
  const BinaryPolynomial parity = BinaryPolynomial(shifted) % code.generator;
  for (int i = 0; i <= parity.degree(); ++i) shifted[static_cast<std::size_t>(i)] ^= parity.coefficient(i);
  return shifted;
}

BitVector message_from_codeword(const CyclicCodeSpec& code, const BitVector& codeword) {
  check_word(code, codeword);
  return BitVector(codeword.begin() + (code.N - code.K), codeword.end());
}

GaloisField::Element syndrome(const CyclicCodeSpec& code, const BitVector& word, std::int64_t j) {
  check_word(code, word);
  Element s = 0;
  for (int i = 0; i < code.N; ++i) {
    if (word[static_cast<std::size_t>(i)]) s ^= code.root_power(static_cast<std::int64_t>(i) * mod(j, code.N));
  }
  return s;
}

bool is_codeword(const CyclicCodeSpec& code, const BitVector& word) {
  check_word(code, word);
  return (BinaryPolynomial(word) % code.generator).is_zero();
}

DecodeOutcome decode_errors_and_erasures(const CyclicCodeSpec& code, const BitVector& received,
                                         const std::vector<int>& erasures_in) {
  check_word(code, received);
  const std::vector<int> erasures = checked_erasures(code, erasures_in);
  const GaloisField& f = *code.field;
  const int nu = static_cast<int>(erasures.size());
  const int window = code.d_bch - 1;

  DecodeOutcome failure;
  failure.status = DecodeStatus::kFailure;
  failure.codeword = received;
  failure.erasure_positions = erasures;

  if (nu > window) return failure;

  BitVector word = received;
  for (int p : erasures) word[static_cast<std::size_t>(p)] = 0;

  // S(x) = sum_i S_{b+i} x^i over the consecutive root window
  FieldPoly syndromes(static_cast<std::size_t>(window), 0);
  for (int i = 0; i < window; ++i) syndromes[static_cast<std::size_t>(i)] = syndrome(code, word, code.b + i);

  FieldPoly erasure_locator{1};
  for (int p : erasures) erasure_locator = poly_mul(f, erasure_locator, FieldPoly{1, code.root_power(p)});

  // Forney's modified syndromes: coefficients nu..window-1 of Gamma(x) S(x).
  const FieldPoly modified = poly_mul(f, erasure_locator, syndromes);
  std::vector<Element> sequence;
  for (int i = nu; i < window; ++i) sequence.push_back(modified[static_cast<std::size_t>(i)]);

  const auto [error_locator, num_errors] = berlekamp_massey(f, sequence);
  if (nu + 2 * num_errors >= code.d_bch || poly_degree(error_locator) != num_errors) return failure;

  // Chien search over all positions.
  std::vector<int> error_positions;
  for (int p = 0; p < code.N; ++p) {
    if (poly_eval(f, error_locator, f.inv(code.root_power(p))) == 0) error_positions.push_back(p);
  }
  if (static_cast<int>(error_positions.size()) != num_errors) return failure;
  for (int p : error_positions) {
    if (std::binary_search(erasures.begin(), erasures.end(), p)) return failure;
  }

  const FieldPoly locator = poly_mul(f, error_locator, erasure_locator);
  FieldPoly evaluator = poly_mul(f, locator, syndromes);
  evaluator.resize(static_cast<std::size_t>(window));
  const FieldPoly locator_derivative = poly_derivative(locator);

  auto magnitude = [&](int p) -> std::optional<Element> {
    const Element x = code.root_power(p);
    const Element x_inv = f.inv(x);
    const Element denom = poly_eval(f, locator_derivative, x_inv);
    if (denom == 0) return std::nullopt;
    return f.mul(f.pow(x, 1 - static_cast<std::int64_t>(code.b)), f.div(poly_eval(f, evaluator, x_inv), denom));
  };

  DecodeOutcome out;
  out.erasure_positions = erasures;
  for (int p : error_positions) {
    const std::optional<Element> y = magnitude(p);
    if (!y || *y != 1) return failure;
    word[static_cast<std::size_t>(p)] ^= 1;
  }
  for (int p : erasures) {
    const std::optional<Element> y = magnitude(p);
    if (!y || *y > 1) return failure;
    word[static_cast<std::size_t>(p)] = static_cast<std::uint8_t>(*y);
    out.erasure_values.push_back(static_cast<std::uint8_t>(*y));
  }
  if (!is_codeword(code, word)) return failure;

  out.status = DecodeStatus::kCorrected;
  out.codeword = std::move(word);
  out.error_positions = std::move(error_positions);
  return out;
}

std::optional<BitVector> decode_erasures_gaussian(const CyclicCodeSpec& code, const BitVector& received,
                                                  const std::vector<int>& erasures_in) {
  check_word(code, received);
  const std::vector<int> erasures = checked_erasures(code, erasures_in);
  const Gf2Matrix checks = generator_matrix(code).null_space();
  const std::size_t nu = erasures.size();
  if (nu > 63) throw std::invalid_argument("too many erasures for the Gaussian decoder");

  std::uint64_t erased_mask = 0;
  for (int p : erasures) erased_mask |= std::uint64_t{1} << p;
  const std::uint64_t known = to_mask(received) & ~erased_mask;

  // Augmented system over the erased unknowns; bit nu holds the right-hand side.
  std::vector<std::uint64_t> equations;
  for (std::uint64_t h : checks.rows()) {
    std::uint64_t eq = 0;
    for (std::size_t u = 0; u < nu; ++u) {
      if (h & (std::uint64_t{1} << erasures[u])) eq |= std::uint64_t{1} << u;
    }
    if (std::popcount(h & known) & 1) eq |= std::uint64_t{1} << nu;
    equations.push_back(eq);
  }
  std::vector<std::uint64_t> pivots;
  std::vector<std::size_t> pivot_cols;
  for (std::size_t u = 0; u < nu; ++u) {
    const std::uint64_t bit = std::uint64_t{1} << u;
    auto it = std::find_if(equations.begin(), equations.end(), [bit](std::uint64_t e) { return e & bit; });
    if (it == equations.end()) return std::nullopt;
    const std::uint64_t pivot = *it;
    equations.erase(it);
    for (std::uint64_t& e : equations) {
      if (e & bit) e ^= pivot;
    }
    for (std::uint64_t& e : pivots) {
      if (e & bit) e ^= pivot;
    }
    pivots.push_back(pivot);
    pivot_cols.push_back(u);
  }
  for (std::uint64_t e : equations) {
    if (e != 0) return std::nullopt;  // inconsistent
  }
  BitVector word = received;
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    word[static_cast<std::size_t>(erasures[pivot_cols[i]])] = static_cast<std::uint8_t>((pivots[i] >> nu) & 1U);
  }
  return word;
}

int min_distance_bruteforce(const Gf2Matrix& generator) {
  const int k = generator.num_rows();
  if (k == 0) throw std::invalid_argument("minimum distance of the zero code is undefined");
  if (k > 20) throw std::invalid_argument("min_distance_bruteforce supports K <= 20, got " + std::to_string(k));
  // Gray-code walk over all nonzero messages.
  std::uint64_t word = 0;
  int best = generator.cols() + 1;
  const std::uint64_t count = std::uint64_t{1} << k;
  for (std::uint64_t i = 1; i < count; ++i) {
    word ^= generator.rows()[static_cast<std::size_t>(std::countr_zero(i))];
    const int w = std::popcount(word);
    if (w > 0) best = std::min(best, w);
  }
  return best;
}

int min_distance_bruteforce(const CyclicCodeSpec& code) {
  if (code.K > 20) throw std::invalid_argument("min_distance_bruteforce supports K <= 20, got " + std::to_string(code.K));
  return min_distance_bruteforce(generator_matrix(code));
}

}  // namespace qec
