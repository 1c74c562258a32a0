#include "qec/json_io.h"

#include <stdexcept>

namespace qec {

namespace {

constexpr double kEmitThreshold = 1e-15;

std::string status_name(DecodeStatus s) { return s == DecodeStatus::kCorrected ? "Corrected" : "Failure"; }

}  // namespace

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("complex number must be [re, im]");
  return {j.at(0).get<double>(), j.at(1).get<double>()};
}

Json state_to_json(const StateVector& state) {
  Json terms = Json::array();
  for (std::size_t i = 0; i < state.dimension(); ++i) {
    if (std::abs(state[i]) <= kEmitThreshold) continue;
    terms.push_back(Json::array({index_to_bits(i, state.num_qubits()), complex_to_json(state[i])}));
  }
  return Json{{"n", state.num_qubits()}, {"terms", std::move(terms)}};
}

StateVector state_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("terms")) {
    throw std::invalid_argument("state object needs \"n\" and \"terms\"");
  }
  const int n = j.at("n").get<int>();
  std::vector<Term> terms;
  for (const Json& t : j.at("terms")) {
    if (!t.is_array() || t.size() != 2) throw std::invalid_argument("state term must be [bitstring, [re, im]]");
    terms.push_back({t.at(0).get<std::string>(), complex_from_json(t.at(1))});
  }
  return make_state(n, terms);
}

Json code_to_json(const QuantumCode& code) {
  Json basis = Json::array();
  for (const StateVector& c : code.basis()) basis.push_back(state_to_json(c));
  return Json{{"n", code.n()}, {"k", code.k()}, {"basis", std::move(basis)}};
}

QuantumCode code_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("basis")) throw std::invalid_argument("code object needs \"basis\"");
  std::vector<StateVector> basis;
  for (const Json& s : j.at("basis")) basis.push_back(state_from_json(s));
  QuantumCode code(std::move(basis));
  if (j.contains("n") && j.at("n").get<int>() != code.n()) throw std::invalid_argument("code \"n\" mismatch");
  if (j.contains("k") && j.at("k").get<int>() != code.k()) throw std::invalid_argument("code \"k\" mismatch");
  return code;
}

Json condition_report_to_json(const ConditionReport& report) {
  Json j{{"passed", report.passed},
         {"worst_expectation_gap", report.worst_expectation_gap},
         {"worst_off_diagonal", report.worst_off_diagonal}};
  if (report.witness) {
    j["witness"] = Json{{"positions", report.witness->positions},
                        {"operator", report.witness->op},
                        {"pair", Json::array({report.witness->pair.first, report.witness->pair.second})}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

ConditionReport condition_report_from_json(const Json& j) {
  ConditionReport r;
  r.passed = j.at("passed").get<bool>();
  r.worst_expectation_gap = j.at("worst_expectation_gap").get<double>();
  r.worst_off_diagonal = j.at("worst_off_diagonal").get<double>();
  if (j.contains("witness") && !j.at("witness").is_null()) {
    const Json& w = j.at("witness");
    r.witness = ConditionWitness{w.at("positions").get<std::vector<int>>(), w.at("operator").get<std::string>(),
                                 {w.at("pair").at(0).get<int>(), w.at("pair").at(1).get<int>()}};
  }
  return r;
}

Json experiment_report_to_json(const ExperimentReport& report) {
  return Json{{"code", report.code},
              {"model", to_string(report.model)},
              {"erasure_size", report.erasure_size},
              {"trials", report.stats.trials},
              {"mean_fidelity", report.stats.mean_fidelity},
              {"min_fidelity", report.stats.min_fidelity},
              {"failures", report.stats.failures},
              {"seed", report.seed}};
}

ExperimentReport experiment_report_from_json(const Json& j) {
  ExperimentReport r;
  r.code = j.at("code").get<std::string>();
  r.model = parse_erasure_model(j.at("model").get<std::string>());
  r.erasure_size = j.at("erasure_size").get<int>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.stats.trials = j.at("trials").get<std::int64_t>();
  r.stats.mean_fidelity = j.at("mean_fidelity").get<double>();
  r.stats.min_fidelity = j.at("min_fidelity").get<double>();
  r.stats.failures = j.at("failures").get<std::int64_t>();
  return r;
}

Json cyclic_code_to_json(const CyclicCodeSpec& code) {
  return Json{{"N", code.N},
              {"b", code.b},
              {"d_bch", code.d_bch},
              {"m", code.field->m()},
              {"primitive_poly", polynomial_mask_to_string(code.field->primitive_polynomial())},
              {"defining_set", std::vector<int>(code.defining_set.begin(), code.defining_set.end())},
              {"generator", code.generator.to_bit_string()},
              {"generator_poly", code.generator.to_string()},
              {"K", code.K}};
}

CyclicCodeSpec cyclic_code_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("code description must be a JSON object");
  std::optional<std::uint32_t> poly;
  if (j.contains("primitive_poly")) {
    poly = static_cast<std::uint32_t>(parse_polynomial_mask(j.at("primitive_poly").get<std::string>()));
  }
  CyclicCodeSpec code = make_bch_code(j.at("N").get<int>(), j.value("b", 1), j.at("d_bch").get<int>(), poly);
  if (j.contains("m") && j.at("m").get<int>() != code.field->m()) {
    throw std::invalid_argument("code description: field degree m does not match N");
  }
  if (j.contains("defining_set")) {
    const auto stored = j.at("defining_set").get<std::vector<int>>();
    if (DefiningSet(stored.begin(), stored.end()) != code.defining_set) {
      throw std::invalid_argument("code description: defining_set does not match N, b, d_bch");
    }
  }
  if (j.contains("generator") && BinaryPolynomial::from_bit_string(j.at("generator").get<std::string>()) != code.generator) {
    throw std::invalid_argument("code description: generator does not match the defining set");
  }
  return code;
}

Json css_code_to_json(const CssCode& code) {
  Json j = cyclic_code_to_json(code.classical);
  Json reps = Json::array();
  for (const BitVector& v : code.coset_reps) reps.push_back(bits_to_string(v));
  Json generators = Json::array();
  for (const BitVector& v : code.coset_generators) generators.push_back(bits_to_string(v));
  Json dual = Json::array();
  for (int i = 0; i < code.dual_generator.num_rows(); ++i) dual.push_back(bits_to_string(code.dual_generator.row(i)));
  j["quantum"] = Json{{"N", code.N},
                      {"K", code.K},
                      {"d", code.d},
                      {"distance", code.distance_is_true ? "true" : "designed"},
                      {"designed_distance", code.designed_distance},
                      {"dual_generator", std::move(dual)},
                      {"coset_generators", std::move(generators)},
                      {"coset_reps", std::move(reps)}};
  return j;
}

CssCode css_code_from_json(const Json& j) {
  CssCode code = build_qbch(cyclic_code_from_json(j));
  if (j.contains("quantum")) {
    const Json& q = j.at("quantum");
    if (q.value("N", code.N) != code.N || q.value("K", code.K) != code.K || q.value("d", code.d) != code.d) {
      throw std::invalid_argument("code description: quantum parameters do not match the classical code");
    }
    if (q.contains("coset_reps")) {
      std::vector<BitVector> reps;
      for (const Json& r : q.at("coset_reps")) reps.push_back(bits_from_string(r.get<std::string>()));
      if (reps != code.coset_reps) throw std::invalid_argument("code description: coset_reps do not match");
    }
  }
  return code;
}

Json decode_outcome_to_json(const DecodeOutcome& outcome) {
  Json erasures = Json::array();
  for (std::size_t i = 0; i < outcome.erasure_values.size(); ++i) {
    erasures.push_back(Json::array({outcome.erasure_positions[i], outcome.erasure_values[i]}));
  }
  return Json{{"status", status_name(outcome.status)},
              {"codeword", bits_to_string(outcome.codeword)},
              {"error_positions", outcome.error_positions},
              {"erasure_positions", outcome.erasure_positions},
              {"erasure_values", std::move(erasures)}};
}

DecodeOutcome decode_outcome_from_json(const Json& j) {
  DecodeOutcome out;
  const auto status = j.at("status").get<std::string>();
  if (status == "Corrected") {
    out.status = DecodeStatus::kCorrected;
  } else if (status == "Failure") {
    out.status = DecodeStatus::kFailure;
  } else {
    throw std::invalid_argument("unknown decode status '" + status + "'");
  }
  out.codeword = bits_from_string(j.at("codeword").get<std::string>());
  out.error_positions = j.at("error_positions").get<std::vector<int>>();
  out.erasure_positions = j.at("erasure_positions").get<std::vector<int>>();
  for (const Json& e : j.at("erasure_values")) out.erasure_values.push_back(e.at(1).get<std::uint8_t>());
  return out;
}

Json product_state_to_json(const ProductStateResult& result) {
  return Json{{"found", result.found},
              {"eta", Json::array({complex_to_json(result.eta[0]), complex_to_json(result.eta[1])})},
              {"coefficients",
               Json{{"c1", complex_to_json(result.c1)},
                    {"c12", complex_to_json(result.c12)},
                    {"c2", complex_to_json(result.c2)}}},
              {"residual", product_state_residual(result.state)},
              {"state", state_to_json(result.state)}};
}

}  // namespace qec
