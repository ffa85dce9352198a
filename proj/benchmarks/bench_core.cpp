#include <benchmark/benchmark.h>

#include <random>

#include "dga/corpus.hpp"

using namespace dga;

namespace {

Multivector random_element(std::mt19937_64& rng, int ambient, int degree) {
  Multivector out(ambient);
  std::uniform_int_distribution<int> pick(0, ambient - 1);
  std::uniform_int_distribution<long> coef(-5, 5);
  for (int t = 0; t < 4; ++t) {
    std::vector<int> idx;
    for (int k = 0; k < degree; ++k) idx.push_back(pick(rng));
    out.add_tuple(idx, GaussianRational(Rational(coef(rng)), Rational(coef(rng))));
  }
  return out;
}

const SemidirectPackage& pkg() {
  static const SemidirectPackage p = build_semidirect(fixture_data("solvable-ex2"));
  return p;
}

void BM_Wedge(benchmark::State& state) {
  std::mt19937_64 rng(1);
  int ambient = (int)state.range(0);
  Multivector a = random_element(rng, ambient, 2), b = random_element(rng, ambient, 2);
  for (auto _ : state) benchmark::DoNotOptimize(wedge(a, b));
}
BENCHMARK(BM_Wedge)->Arg(4)->Arg(8)->Arg(12);

void BM_Schouten(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const GcaContext& ctx = pkg().ctx;
  Multivector a = random_element(rng, ctx.L_dim(), 2);
  Multivector b = random_element(rng, ctx.L_dim(), (int)state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ctx.schouten(a, b));
}
BENCHMARK(BM_Schouten)->Arg(1)->Arg(2)->Arg(3);

void BM_Dbar(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const GcaContext& ctx = pkg().ctx;
  Multivector a = random_element(rng, ctx.L_dim(), (int)state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ctx.dbar(a));
}
BENCHMARK(BM_Dbar)->Arg(1)->Arg(2)->Arg(3);

void BM_CompileContext(benchmark::State& state) {
  LieAlgebraSpec spec = pkg().h_spec;
  for (auto _ : state) benchmark::DoNotOptimize(GcaContext::compile(spec));
}
BENCHMARK(BM_CompileContext);

void BM_Cohomology(benchmark::State& state) {
  const GcaContext& ctx = pkg().ctx;
  for (auto _ : state) {
    CohomologyBasis h = cohomology(
        build_complex(ctx.L_dim(), [&](const Multivector& a) { return ctx.dbar(a); }));
    benchmark::DoNotOptimize(h);
  }
}
BENCHMARK(BM_Cohomology);

void BM_IntegrabilitySeries(benchmark::State& state) {
  auto mu = mu_constraint_solve(pkg());
  for (auto _ : state) {
    SeriesReport rep =
        integrability_series(pkg().ctx, pkg().lambda, mu->phi, (int)state.range(0));
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(BM_IntegrabilitySeries)->Arg(2)->Arg(4)->Arg(6);

void BM_Pipeline(benchmark::State& state) {
  SymplecticConnectionData data = fixture_data("kodaira-thurston");
  for (auto _ : state) benchmark::DoNotOptimize(weak_mirror_pipeline(data));
}
BENCHMARK(BM_Pipeline);

}  // namespace

BENCHMARK_MAIN();
