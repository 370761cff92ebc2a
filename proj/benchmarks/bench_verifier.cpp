#include <benchmark/benchmark.h>

#include <string>

#include "mrbound/spec_io.hpp"
#include "mrbound/verifier.hpp"

using namespace mrbound;

namespace {

MultiRecurrence load(const std::string& name) {
  return parse_spec(read_text_file(std::string(MRBOUND_DATA_DIR) + "/" + name));
}

void BM_ScanFibonacci(benchmark::State& state) {
  const auto g = load("fibonacci.json");
  VerifierConfig c;
  c.i0 = 1;
  c.max_norm = static_cast<std::uint64_t>(state.range(0));
  c.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(scan_shells(g, c));
}
BENCHMARK(BM_ScanFibonacci)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_ScanCubic(benchmark::State& state) {
  const auto g = load("cubic.json");
  VerifierConfig c;
  c.i0 = 2;
  c.epsilon = Rational(1, 20);
  c.max_norm = static_cast<std::uint64_t>(state.range(0));
  c.threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(scan_shells(g, c));
}
BENCHMARK(BM_ScanCubic)->Args({20, 1})->Args({20, 4})->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_NormBound(benchmark::State& state) {
  const auto g = load("diagonal.json");
  const LatticePoint n{static_cast<std::uint64_t>(state.range(0)), 7};
  for (auto _ : state) benchmark::DoNotOptimize(norm_bound_check(g, n));
}
BENCHMARK(BM_NormBound)->Arg(10)->Arg(100);

void BM_Probe(benchmark::State& state) {
  const auto g = load("fibonacci.json");
  VerifierConfig c;
  c.i0 = 1;
  c.max_norm = 60;
  c.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(evertse_probe(g, c));
}
BENCHMARK(BM_Probe)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
