#include "cli.h"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qec/classical_bch.h"
#include "qec/code_analysis.h"
#include "qec/erasure_channel.h"
#include "qec/json_io.h"
#include "qec/qbch.h"

namespace qec::cli {

namespace {

// Input problems that map to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string out_file;
  bool table = false;
  bool json = false;
  double tol = kConditionTolerance;
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw UsageError("malformed JSON in '" + path + "': " + e.what());
  }
}

QuantumCode load_code(const std::string& name_or_path) {
  try {
    return builtin_code(parse_builtin_code(name_or_path));
  } catch (const std::invalid_argument&) {
  }
  const Json j = read_json_file(name_or_path);
  try {
    return code_from_json(j);
  } catch (const std::exception& e) {
    throw UsageError("invalid code file '" + name_or_path + "': " + e.what());
  }
}

StateVector load_state(const std::string& path) {
  const Json j = read_json_file(path);
  try {
    return state_from_json(j);
  } catch (const std::exception& e) {
    throw UsageError("invalid state file '" + path + "': " + e.what());
  }
}

void emit(const Common& common, const std::string& text, std::ostream& out) {
  if (common.out_file.empty()) {
    out << text;
    return;
  }
  std::ofstream file(common.out_file);
  if (!file) throw UsageError("cannot write '" + common.out_file + "'");
  file << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string fmt(double x) {
  std::ostringstream s;
  s << std::setprecision(6) << x;
  return s.str();
}

std::vector<int> parse_positions(const std::string& text) {
  std::vector<int> positions;
  if (text.empty()) return positions;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      positions.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("bad position '" + item + "' in list '" + text + "'");
    }
  }
  return positions;
}

std::string set_to_string(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

// --- kl-check ---------------------------------------------------------------

struct KlArgs {
  std::string code;
  int t = 1;
  std::string mode = "erasure";
  bool direct = false;
};

int cmd_kl_check(const KlArgs& args, const Common& common, std::ostream& out) {
  const QuantumCode code = load_code(args.code);
  if (args.t < 0 || args.t > code.n()) throw UsageError("t must be in [0, n]");
  ConditionReport report;
  if (args.mode == "erasure") {
    report = check_erasure_kl(code, args.t, common.tol);
  } else {
    report = check_general_kl(code, args.t,
                              args.direct ? GeneralKlMode::kDirectPairs : GeneralKlMode::kErasureEquivalent,
                              common.tol);
  }
  if (common.table) {
    std::string text = "code: " + args.code + "  n=" + std::to_string(code.n()) + " k=" + std::to_string(code.k()) +
                       "\nmode: " + args.mode + "  t=" + std::to_string(args.t) +
                       "\nverdict: " + (report.passed ? "PASS" : "FAIL") +
                       "\nworst expectation gap: " + fmt(report.worst_expectation_gap) +
                       "\nworst off-diagonal:    " + fmt(report.worst_off_diagonal) + "\n";
    if (report.witness) {
      text += "witness: positions " + set_to_string(report.witness->positions) + " operator " + report.witness->op +
              " pair (" + std::to_string(report.witness->pair.first) + "," +
              std::to_string(report.witness->pair.second) + ")\n";
    }
    emit(common, text, out);
  } else {
    emit(common,
         dump(Json{{"code", args.code},
                   {"n", code.n()},
                   {"k", code.k()},
                   {"t", args.t},
                   {"mode", args.mode},
                   {"tol", common.tol},
                   {"report", condition_report_to_json(report)}}),
         out);
  }
  return report.passed ? kExitPass : kExitFail;
}

// --- bch / qbch -------------------------------------------------------------

struct BchArgs {
  int N = 0;
  int b = 1;
  int d = 0;
  std::string primitive_poly;
  bool check_admissible = false;
  bool qbch = false;
};

CyclicCodeSpec build_classical(int N, int b, int d, const std::string& poly) {
  try {
    std::optional<std::uint32_t> mask;
    if (!poly.empty()) mask = static_cast<std::uint32_t>(parse_polynomial_mask(poly));
    return make_bch_code(N, b, d, mask);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

int cmd_bch(const BchArgs& args, const Common& common, std::ostream& out) {
  const CyclicCodeSpec code = build_classical(args.N, args.b, args.d, args.primitive_poly);
  Json j = cyclic_code_to_json(code);
  std::string table = "[" + std::to_string(code.N) + "," + std::to_string(code.K) + "] BCH code, b=" +
                      std::to_string(code.b) + " d_bch=" + std::to_string(code.d_bch) + "\n" +
                      "defining set: " + set_to_string({code.defining_set.begin(), code.defining_set.end()}) + "\n" +
                      "generator: " + code.generator.to_string() + "  (" + code.generator.to_bit_string() + ")\n";
  int status = kExitPass;
  const auto violation = find_admissibility_violation(code.defining_set, code.N);

  if (args.check_admissible || args.qbch) {
    Json a{{"admissible", !violation.has_value()}};
    std::string message = "admissible";
    if (violation) {
      message = "fails: cosets (" + std::to_string(violation->first) + "," + std::to_string(violation->second) + ")";
      a["violation"] = Json::array({violation->first, violation->second});
    }
    a["message"] = message;
    j["admissibility"] = std::move(a);
    table += "admissibility: " + message + "\n";
    if (violation) status = kExitFail;
  }
  if (args.qbch && !violation) {
    const CssCode css = build_qbch(code);
    j = css_code_to_json(css);
    j["admissibility"] = Json{{"admissible", true}, {"message", "admissible"}};
    table += "quantum code: [[" + std::to_string(css.N) + "," + std::to_string(css.K) + "," + std::to_string(css.d) +
             "]] (" + (css.distance_is_true ? "true" : "designed") + " distance; designed " +
             std::to_string(css.designed_distance) + ")\n";
    if (!css.coset_reps.empty()) {
      table += "coset representatives: " + std::to_string(css.coset_reps.size()) + "\n";
    }
  }
  emit(common, common.table ? table : dump(j), out);
  return status;
}

// --- decode -----------------------------------------------------------------

struct DecodeArgs {
  std::string code_file;
  int N = 0;
  int b = 1;
  int d = 0;
  std::string primitive_poly;
  std::string received;
  std::string erasures;
};

int cmd_decode(const DecodeArgs& args, const Common& common, std::ostream& out) {
  CyclicCodeSpec code;
  if (!args.code_file.empty()) {
    const Json j = read_json_file(args.code_file);
    try {
      code = cyclic_code_from_json(j);
    } catch (const std::exception& e) {
      throw UsageError("invalid code description: " + std::string(e.what()));
    }
  } else if (args.N > 0 && args.d > 0) {
    code = build_classical(args.N, args.b, args.d, args.primitive_poly);
  } else {
    throw UsageError("decode needs --code FILE or --N and --d");
  }
  BitVector received;
  try {
    received = bits_from_string(args.received);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (static_cast<int>(received.size()) != code.N) {
    throw UsageError("received word has length " + std::to_string(received.size()) + ", code length is " +
                     std::to_string(code.N));
  }
  DecodeOutcome outcome;
  try {
    outcome = decode_errors_and_erasures(code, received, parse_positions(args.erasures));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (common.table) {
    std::string text = std::string("status: ") + (outcome.status == DecodeStatus::kCorrected ? "Corrected" : "Failure") +
                       "\ncodeword: " + bits_to_string(outcome.codeword) +
                       "\nerrors: " + set_to_string(outcome.error_positions) +
                       "\nerasures: " + set_to_string(outcome.erasure_positions) + "\n";
    emit(common, text, out);
  } else {
    emit(common, dump(decode_outcome_to_json(outcome)), out);
  }
  return outcome.status == DecodeStatus::kCorrected ? kExitPass : kExitFail;
}

// --- simulate ---------------------------------------------------------------

struct SimulateArgs {
  std::string code;
  std::string model = "reset";
  int erasure_size = 1;
  std::int64_t trials = 1000;
  std::uint64_t seed = 0;
  bool expect_perfect = false;
};

int cmd_simulate(const SimulateArgs& args, const Common& common, std::ostream& out) {
  const QuantumCode code = load_code(args.code);
  ErasureModel model;
  try {
    model = parse_erasure_model(args.model);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (args.erasure_size < 0 || args.erasure_size > code.n()) throw UsageError("erasure size must be in [0, n]");
  if (args.trials < 0) throw UsageError("trials must be non-negative");

  ExperimentReport report;
  report.code = args.code;
  report.model = model;
  report.erasure_size = args.erasure_size;
  report.seed = args.seed;
  report.stats = run_trials(code, model, args.erasure_size, args.trials, args.seed);

  if (common.table) {
    emit(common,
         "code: " + args.code + "\nmodel: " + to_string(model) + "\nerasure size: " +
             std::to_string(args.erasure_size) + "\ntrials: " + std::to_string(report.stats.trials) +
             "\nmean fidelity: " + fmt(report.stats.mean_fidelity) + "\nmin fidelity: " +
             fmt(report.stats.min_fidelity) + "\nfailures: " + std::to_string(report.stats.failures) + "\n",
         out);
  } else {
    emit(common, dump(experiment_report_to_json(report)), out);
  }
  return (args.expect_perfect && report.stats.failures > 0) ? kExitFail : kExitPass;
}

// --- falsify ----------------------------------------------------------------

struct FalsifyArgs {
  int n = 0;
  std::int64_t trials = 10000;
  std::uint64_t seed = 0;
};

int cmd_falsify(const FalsifyArgs& args, const Common& common, std::ostream& out) {
  if (args.n != 2 && args.n != 3) throw UsageError("falsify supports n = 2 or n = 3 only");
  if (args.trials < 0) throw UsageError("trials must be non-negative");
  const std::int64_t passes = falsify_short_codes(args.n, args.trials, args.seed);
  if (common.table) {
    emit(common,
         "n=" + std::to_string(args.n) + " trials=" + std::to_string(args.trials) +
             " passes=" + std::to_string(passes) + "\n",
         out);
  } else {
    emit(common,
         dump(Json{{"n", args.n}, {"trials", args.trials}, {"seed", args.seed}, {"passes", passes}}), out);
  }
  return passes == 0 ? kExitPass : kExitFail;
}

// --- product-state ----------------------------------------------------------

struct ProductArgs {
  std::string first;
  std::string second;
};

int cmd_product_state(const ProductArgs& args, const Common& common, std::ostream& out) {
  const StateVector b1 = load_state(args.first);
  const StateVector b2 = load_state(args.second);
  if (b1.num_qubits() != 2 || b2.num_qubits() != 2) throw UsageError("product-state expects two 2-qubit states");
  ProductStateResult result = [&] {
    try {
      return find_product_state(b1, b2);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  if (common.table) {
    std::string text = "product state:";
    for (std::size_t i = 0; i < 4; ++i) {
      text += " " + index_to_bits(i, 2) + ":(" + fmt(result.state[i].real()) + "," + fmt(result.state[i].imag()) + ")";
    }
    text += "\nresidual: " + fmt(product_state_residual(result.state)) + "\n";
    emit(common, text, out);
  } else {
    emit(common, dump(product_state_to_json(result)), out);
  }
  return kExitPass;
}

void add_common(CLI::App* sub, Common& common) {
  sub->add_option("--out", common.out_file, "Write the report to FILE instead of stdout");
  auto* json = sub->add_flag("--json", common.json, "Machine-readable JSON output (default)");
  auto* table = sub->add_flag("--table", common.table, "Human-readable table output");
  json->excludes(table);
  sub->add_option("--tol", common.tol, "Condition tolerance")->check(CLI::PositiveNumber);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact simulation toolkit for quantum erasure-correcting codes", "qec"};
  app.require_subcommand(1);
  Common common;

  KlArgs kl;
  auto* kl_cmd = app.add_subcommand("kl-check", "Check Knill-Laflamme conditions for a code");
  kl_cmd->add_option("code", kl.code, "Built-in code name or code JSON file")->required();
  kl_cmd->add_option("-t,--t", kl.t, "Number of erasures (erasure mode) or errors (general mode)")->required();
  kl_cmd->add_option("--mode", kl.mode, "erasure | general")->check(CLI::IsMember({"erasure", "general"}));
  kl_cmd->add_flag("--direct", kl.direct, "General mode: enumerate A_i^dag A_j pairs directly");
  add_common(kl_cmd, common);

  BchArgs bch;
  auto add_bch_options = [&](CLI::App* sub) {
    sub->add_option("-N,--N", bch.N, "Code length (odd)")->required();
    sub->add_option("-b,--b", bch.b, "First consecutive root exponent");
    sub->add_option("-d,--d,--d-bch", bch.d, "Designed distance")->required();
    sub->add_option("--primitive-poly", bch.primitive_poly, "Primitive polynomial, e.g. x^4+x+1");
    add_common(sub, common);
  };
  auto* bch_cmd = app.add_subcommand("bch", "Construct a binary BCH code");
  add_bch_options(bch_cmd);
  bch_cmd->add_flag("--check-lemma7,--check-admissible", bch.check_admissible,
                    "Report whether the code admits the quantum BCH construction");
  bch_cmd->add_flag("--qbch", bch.qbch, "Build the quantum BCH code");
  auto* qbch_cmd = app.add_subcommand("qbch", "Alias for bch --qbch");
  add_bch_options(qbch_cmd);

  DecodeArgs dec;
  auto* dec_cmd = app.add_subcommand("decode", "Errors-and-erasures decoding of a binary BCH code");
  dec_cmd->add_option("--code", dec.code_file, "Code description JSON (as printed by `bch`)");
  dec_cmd->add_option("-N,--N", dec.N, "Code length, when --code is not given");
  dec_cmd->add_option("-b,--b", dec.b, "First consecutive root exponent");
  dec_cmd->add_option("-d,--d,--d-bch", dec.d, "Designed distance");
  dec_cmd->add_option("--primitive-poly", dec.primitive_poly, "Primitive polynomial");
  dec_cmd->add_option("--received", dec.received, "Received word as a 0/1 string")->required();
  dec_cmd->add_option("--erasures", dec.erasures, "Comma-separated 0-based erased positions");
  add_common(dec_cmd, common);

  SimulateArgs sim;
  auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo erase-and-recover experiment");
  sim_cmd->add_option("code", sim.code, "Built-in code name or code JSON file")->required();
  sim_cmd->add_option("--model", sim.model, "reset | pauli | unitary");
  sim_cmd->add_option("--erasure-size", sim.erasure_size, "Number of erased qubits per trial");
  sim_cmd->add_option("--trials", sim.trials, "Number of trials");
  sim_cmd->add_option("--seed", sim.seed, "Master seed")->required();
  sim_cmd->add_flag("--expect-perfect", sim.expect_perfect, "Exit 1 if any trial fails");
  add_common(sim_cmd, common);

  FalsifyArgs fal;
  auto* fal_cmd = app.add_subcommand("falsify", "Search random short codes for one-erasure codes");
  fal_cmd->add_option("-n,--n", fal.n, "Code length (2 or 3)")->required();
  fal_cmd->add_option("--trials", fal.trials, "Number of random codes");
  fal_cmd->add_option("--seed", fal.seed, "Master seed")->required();
  add_common(fal_cmd, common);

  ProductArgs prod;
  auto* prod_cmd = app.add_subcommand("product-state", "Find a product state in the span of two 2-qubit states");
  prod_cmd->add_option("first", prod.first, "State JSON file")->required();
  prod_cmd->add_option("second", prod.second, "State JSON file")->required();
  add_common(prod_cmd, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitPass;
    }
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (kl_cmd->parsed()) return cmd_kl_check(kl, common, out);
    if (bch_cmd->parsed()) return cmd_bch(bch, common, out);
    if (qbch_cmd->parsed()) {
      bch.qbch = true;
      return cmd_bch(bch, common, out);
    }
    if (dec_cmd->parsed()) return cmd_decode(dec, common, out);
    if (sim_cmd->parsed()) return cmd_simulate(sim, common, out);
    if (fal_cmd->parsed()) return cmd_falsify(fal, common, out);
    if (prod_cmd->parsed()) return cmd_product_state(prod, common, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace qec::cli
