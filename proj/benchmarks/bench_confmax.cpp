#include <benchmark/benchmark.h>

#include "confmax/branching.hpp"
#include "confmax/conformal.hpp"
#include "confmax/fields.hpp"
#include "confmax/geometry.hpp"
#include "confmax/pairing.hpp"

using namespace confmax;

static void BM_SymPowerMatrix(benchmark::State& state) {
  HaarSampler sampler(1);
  const Matrix2c u = sampler.u2().matrix();
  const int k = int(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sym_power_matrix(k, u));
}
BENCHMARK(BM_SymPowerMatrix)->Arg(2)->Arg(8)->Arg(16);

static void BM_GridAverage(benchmark::State& state) {
  const Su2Grid grid(int(state.range(0)));
  const ScalarField f{psi(2, 2)};
  for (auto _ : state)
    benchmark::DoNotOptimize(grid.average(
        [&](const U2Point& u) { return f.eval(u) * std::conj(f.eval(u)); }));
}
BENCHMARK(BM_GridAverage)->Arg(8)->Arg(16)->Arg(32);

static void BM_HermitianPair(benchmark::State& state) {
  const int k = int(state.range(0));
  const MaxwellBasisLabel lab{k, MaxwellBasisLabel::Side::L, +1};
  const FormField w = maxwell_basis(lab);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        hermitian_pair(w, w, lab.eigen_sign(), 2 * k + 8));
}
BENCHMARK(BM_HermitianPair)->Arg(0)->Arg(2)->Arg(4);

static void BM_PullbackCoefficients(benchmark::State& state) {
  HaarSampler sampler(2);
  Matrix2c y;
  y << 0.3, Complex(0.1, 0.2), Complex(0.1, -0.2), -0.4;
  const ConformalElement g = cayley(nbar(y));
  const FormField w =
      maxwell_basis({int(state.range(0)), MaxwellBasisLabel::Side::L, +1});
  const FormField pw = pullback(g, w);
  const U2Point u = sampler.u2();
  for (auto _ : state) benchmark::DoNotOptimize(pw.coefficients(u));
}
BENCHMARK(BM_PullbackCoefficients)->Arg(0)->Arg(3);

static void BM_CharacterSeries(benchmark::State& state) {
  const int n = int(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(maxw_character_series(n) ==
                             rational_side_series(n));
  }
}
BENCHMARK(BM_CharacterSeries)->Arg(20)->Arg(40)->Arg(80);

BENCHMARK_MAIN();
