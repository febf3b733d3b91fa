// Microbenchmarks for the analysis hot paths. The headline comparison is the
// block PPT check (d matrices of size d) against the full partial-transpose
// eigensolve (one matrix of size d^2).

#include <benchmark/benchmark.h>

#include "circsep/analysis.hpp"
#include "circsep/density.hpp"
#include "circsep/hermitian_eig.hpp"

namespace {

using namespace circsep;

DensityMatrix fixture_density(int d) {
  return random_circulant_density(d, PermutationZd::identity(d), 20240831u + d);
}

void BM_PptBlocks(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const DensityMatrix dm = fixture_density(d);
  for (auto _ : state) benchmark::DoNotOptimize(ppt_blocks(dm).ppt);
}
BENCHMARK(BM_PptBlocks)->Arg(3)->Arg(5)->Arg(7)->Arg(11);

void BM_FullPartialTransposeEig(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const DensityMatrix dm = fixture_density(d);
  for (auto _ : state) {
    const Matrix pt = partial_transpose(dm.rho, d);
    benchmark::DoNotOptimize(min_hermitian_eigenvalue(pt));
  }
}
BENCHMARK(BM_FullPartialTransposeEig)->Arg(3)->Arg(5)->Arg(7)->Arg(11);

void BM_StructuralCoefficients(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const DensityMatrix dm = fixture_density(d);
  for (auto _ : state) benchmark::DoNotOptimize(structural_coefficients(dm).mu_sum());
}
BENCHMARK(BM_StructuralCoefficients)->Arg(3)->Arg(5)->Arg(7);

void BM_Certify(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const DensityMatrix dm = mix_with_identity(fixture_density(d), 0.2);
  for (auto _ : state) benchmark::DoNotOptimize(certify(dm).kind);
}
BENCHMARK(BM_Certify)->Arg(3)->Arg(5)->Arg(7);

void BM_HermitianEig(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Matrix h = Matrix::Random(n, n);
  h = (0.5 * (h + h.adjoint().eval())).eval();
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eigenvalues(h).front());
}
BENCHMARK(BM_HermitianEig)->Arg(9)->Arg(25)->Arg(49)->Arg(121);

}  // namespace

BENCHMARK_MAIN();
