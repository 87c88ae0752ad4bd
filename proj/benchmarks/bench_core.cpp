#include <benchmark/benchmark.h>

#include "lietriple/catalog.hpp"
#include "lietriple/constructions.hpp"

using namespace lietriple;

namespace {

QuasitriangularBialgebra fixture(const char* name) {
  return catalog_quasitriangular(*catalog_find(name));
}

void BM_CybeSl3(benchmark::State& state) {
  auto q = fixture("sl3");
  for (auto _ : state) {
    Tensor3 t = cybe(q.r(), q.alg());
    benchmark::DoNotOptimize(t.is_zero());
  }
}
BENCHMARK(BM_CybeSl3);

void BM_VerifySl3(benchmark::State& state) {
  auto q = fixture("sl3");
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_quasitriangular(q.alg(), q.r()).ok());
  }
}
BENCHMARK(BM_VerifySl3);

void BM_DoubleSl3(benchmark::State& state) {
  auto q = fixture("sl3");
  for (auto _ : state) {
    DrinfeldDouble d = drinfeld_double(q.bialg());
    benchmark::DoNotOptimize(d.result.dim());
  }
}
BENCHMARK(BM_DoubleSl3);

void BM_TripleSl2(benchmark::State& state) {
  auto q = fixture("sl2");
  for (auto _ : state) {
    DoubleBosonisation t = triple(q);
    benchmark::DoNotOptimize(t.result.dim());
  }
}
BENCHMARK(BM_TripleSl2);

void BM_TripleSl3(benchmark::State& state) {
  auto q = fixture("sl3");
  for (auto _ : state) {
    DoubleBosonisation t = triple(q);
    benchmark::DoNotOptimize(t.result.dim());
  }
}
BENCHMARK(BM_TripleSl3);

void BM_TwistIdentitySl3(benchmark::State& state) {
  auto q = fixture("sl3");
  DoubleBosonisation t = triple(q);
  for (auto _ : state) {
    benchmark::DoNotOptimize(twist_identity(t).ok());
  }
}
BENCHMARK(BM_TwistIdentitySl3);

void BM_ForcedZeroCobracketAxb(benchmark::State& state) {
  auto q = fixture("axb");
  for (auto _ : state) {
    benchmark::DoNotOptimize(forced_zero_cobracket(q));
  }
}
BENCHMARK(BM_ForcedZeroCobracketAxb);

} // namespace

BENCHMARK_MAIN();
