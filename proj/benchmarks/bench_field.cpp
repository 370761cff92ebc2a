#include <benchmark/benchmark.h>

#include "mrbound/heights.hpp"
#include "mrbound/number_field.hpp"
#include "mrbound/roots.hpp"

using namespace mrbound;

namespace {

std::shared_ptr<const NumberField> trinomial_field(int degree) {
  // X^d - X - 1 is irreducible for every d >= 2.
  std::vector<Integer> c(static_cast<std::size_t>(degree) + 1, 0);
  c[0] = -1;
  c[1] = -1;
  c.back() = 1;
  return NumberField::create(IntPolynomial(std::move(c)));
}

FieldElement sample(const std::shared_ptr<const NumberField>& k, long seed) {
  std::vector<Rational> coords(static_cast<std::size_t>(k->degree()));
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] = Rational(seed * 7 + 3 * static_cast<long>(i) - 5, 2 + i);
  for (auto& c : coords) c.canonicalize();
  return k->element(std::move(coords));
}

void BM_Multiply(benchmark::State& state) {
  const auto k = trinomial_field(static_cast<int>(state.range(0)));
  const FieldElement a = sample(k, 1), b = sample(k, 2);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_Multiply)->Arg(2)->Arg(4)->Arg(8);

void BM_Inverse(benchmark::State& state) {
  const auto k = trinomial_field(static_cast<int>(state.range(0)));
  const FieldElement a = sample(k, 3);
  for (auto _ : state) benchmark::DoNotOptimize(inverse(a));
}
BENCHMARK(BM_Inverse)->Arg(2)->Arg(4)->Arg(8);

void BM_IsolateRoots(benchmark::State& state) {
  std::vector<Integer> c(static_cast<std::size_t>(state.range(0)) + 1, 0);
  c[0] = -1;
  c[1] = -1;
  c.back() = 1;
  const IntPolynomial p(std::move(c));
  for (auto _ : state) benchmark::DoNotOptimize(isolate_roots(p, 128));
}
BENCHMARK(BM_IsolateRoots)->Arg(3)->Arg(8)->Arg(16);

void BM_CreateField(benchmark::State& state) {
  std::vector<Integer> c(static_cast<std::size_t>(state.range(0)) + 1, 0);
  c[0] = -1;
  c[1] = -1;
  c.back() = 1;
  const IntPolynomial p(std::move(c));
  for (auto _ : state) benchmark::DoNotOptimize(NumberField::create(p));
}
BENCHMARK(BM_CreateField)->Arg(3)->Arg(8);

void BM_FieldHeight(benchmark::State& state) {
  const auto k = trinomial_field(static_cast<int>(state.range(0)));
  const FieldElement a = sample(k, 4);
  for (auto _ : state) benchmark::DoNotOptimize(field_height(a, 128));
}
BENCHMARK(BM_FieldHeight)->Arg(2)->Arg(4)->Arg(8);

}  // namespace
