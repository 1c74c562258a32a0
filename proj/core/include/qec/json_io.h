#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "qec/classical_bch.h"
#include "qec/code_analysis.h"
#include "qec/erasure_channel.h"
#include "qec/qbch.h"
#include "qec/state.h"

// JSON encodings of the toolkit's file formats. Readers throw
// std::invalid_argument (or nlohmann::json::exception) on malformed input.

namespace qec {

using Json = nlohmann::ordered_json;

// { "n": 4, "terms": [["0000", [re, im]], ...] }, normalized amplitudes sorted by bitstring.
Json state_to_json(const StateVector& state);
StateVector state_from_json(const Json& j);

// { "n": 4, "k": 1, "basis": [<state>, ...] }
Json code_to_json(const QuantumCode& code);
QuantumCode code_from_json(const Json& j);

Json condition_report_to_json(const ConditionReport& report);
ConditionReport condition_report_from_json(const Json& j);

struct ExperimentReport {
  std::string code;
  ErasureModel model = ErasureModel::kResetToZero;
  int erasure_size = 0;
  std::uint64_t seed = 0;
  TrialStatistics stats;
};

Json experiment_report_to_json(const ExperimentReport& report);
ExperimentReport experiment_report_from_json(const Json& j);

// { "N", "b", "d_bch", "m", "primitive_poly", "defining_set", "generator", "K" }
Json cyclic_code_to_json(const CyclicCodeSpec& code);
// Rebuilds from N, b, d_bch (and primitive_poly when given); a stored
// defining_set or generator must match the rebuilt code.
CyclicCodeSpec cyclic_code_from_json(const Json& j);

// classical description plus { "quantum": { "N", "K", "d", ... "coset_reps" } }
Json css_code_to_json(const CssCode& code);
// Rebuilds the code and checks the stored quantum parameters against it.
CssCode css_code_from_json(const Json& j);

Json decode_outcome_to_json(const DecodeOutcome& outcome);
DecodeOutcome decode_outcome_from_json(const Json& j);

Json product_state_to_json(const ProductStateResult& result);

Json complex_to_json(Complex z);
Complex complex_from_json(const Json& j);

}  // namespace qec
