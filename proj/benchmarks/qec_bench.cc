#include <benchmark/benchmark.h>

#include <random>

#include "qec/classical_bch.h"
#include "qec/code_analysis.h"
#include "qec/erasure_channel.h"
#include "qec/qbch.h"
#include "qec/random.h"

using namespace qec;

static void BM_ErasureKlSteane(benchmark::State& state) {
  const QuantumCode c = builtin_code(BuiltinCode::kSteane7);
  const int t = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(check_erasure_kl(c, t).passed);
}
BENCHMARK(BM_ErasureKlSteane)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_GeneralKlSteane(benchmark::State& state) {
  const QuantumCode c = builtin_code(BuiltinCode::kSteane7);
  for (auto _ : state) benchmark::DoNotOptimize(check_general_kl(c, 1).passed);
}
BENCHMARK(BM_GeneralKlSteane)->Unit(benchmark::kMillisecond);

static void BM_DecodeBch15_7_5(benchmark::State& state) {
  const CyclicCodeSpec code = make_bch_code(15, 1, 5);
  std::mt19937_64 rng(5);
  std::vector<BitVector> received;
  for (int i = 0; i < 256; ++i) {
    BitVector msg(static_cast<std::size_t>(code.K));
    for (auto& b : msg) b = static_cast<std::uint8_t>(rng() & 1U);
    BitVector w = encode_classical(code, msg);
    w[rng() % 15] ^= 1U;
    received.push_back(std::move(w));
  }
  const std::vector<int> erasures = {3, 9};
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(decode_errors_and_erasures(code, received[i++ % received.size()], erasures));
  }
}
BENCHMARK(BM_DecodeBch15_7_5);

static void BM_RecoverSteane(benchmark::State& state) {
  const QuantumCode c = builtin_code(BuiltinCode::kSteane7);
  Rng rng(9);
  const StateVector enc = encode(c, random_state(1, rng));
  const ErasureEvent e({2, 6});
  const DensityMatrix rho = apply_erasure(enc, e, ErasureModel::kRandomUnitary, 17);
  for (auto _ : state) benchmark::DoNotOptimize(recover(rho, c, e));
}
BENCHMARK(BM_RecoverSteane)->Unit(benchmark::kMicrosecond);

static void BM_FalsifyShortCodes(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(falsify_short_codes(n, 1000, 11));
}
BENCHMARK(BM_FalsifyShortCodes)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_BuildQbch(benchmark::State& state) {
  const CyclicCodeSpec code = make_bch_code(15, 1, 2);
  for (auto _ : state) benchmark::DoNotOptimize(build_qbch(code));
}
BENCHMARK(BM_BuildQbch)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
