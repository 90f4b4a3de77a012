#include <benchmark/benchmark.h>

#include "exrobin/disk_solver.hpp"
#include "exrobin/radial_oracle.hpp"
#include "exrobin/specfun.hpp"

namespace {

using namespace exrobin;

void BM_legendre_q(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(specfun::legendre_q(0.7, 1.5));
}
BENCHMARK(BM_legendre_q);

// Near the degree floor and close to the argument cut: the slowest regime.
void BM_legendre_q_pair_hard(benchmark::State& state) {
  for (auto _ : state) {
    const specfun::Pair p = specfun::legendre_q_pair(-0.499, 1.05);
    benchmark::DoNotOptimize(p.q_nu);
    benchmark::DoNotOptimize(p.q_nu_plus_1);
  }
}
BENCHMARK(BM_legendre_q_pair_hard);

void BM_alpha_star_disk(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(disk::alpha_star_disk(1.0));
}
BENCHMARK(BM_alpha_star_disk);

void BM_lambda1_disk(benchmark::State& state) {
  for (auto _ : state) {
    const disk::SpectralResult r = disk::lambda1_disk(-2.0, 1.0);
    benchmark::DoNotOptimize(r.lambda);
  }
}
BENCHMARK(BM_lambda1_disk);

// Cost is dominated by the tridiagonal Sturm bisection; scales with grid size.
void BM_min_rayleigh(benchmark::State& state) {
  oracle::NumericParams num;
  num.grid_points = static_cast<int>(state.range(0));
  const oracle::RadialProblem problem{oracle::WeightSpec::sinh_shift(1.0), -2.0, num};
  for (auto _ : state)
    benchmark::DoNotOptimize(oracle::min_rayleigh(problem));
}
BENCHMARK(BM_min_rayleigh)->Arg(1000)->Arg(4000)->Arg(8000);

void BM_groundstate_quotient(benchmark::State& state) {
  const disk::SpectralResult r = disk::lambda1_disk(-2.0, 1.0);
  for (auto _ : state)
    benchmark::DoNotOptimize(oracle::groundstate_quotient(2.0, -2.0, *r.nu, 1.0));
}
BENCHMARK(BM_groundstate_quotient);

}  // namespace

BENCHMARK_MAIN();
