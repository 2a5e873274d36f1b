#include <benchmark/benchmark.h>

#include "deformkit/ce.hpp"
#include "deformkit/deformation.hpp"
#include "deformkit/descent.hpp"
#include "deformkit/group.hpp"
#include "deformkit/holonomy.hpp"

using namespace dk;

static void BM_CeCohomologyAdjoint(benchmark::State& state) {
  CeSpec spec;
  spec.lie = builtin::iso21();
  spec.module = adjoint_module(spec.lie);
  for (auto _ : state) benchmark::DoNotOptimize(lie_cohomology(spec));
}
BENCHMARK(BM_CeCohomologyAdjoint)->Unit(benchmark::kMillisecond);

static void BM_CeCohomologyAbelian(benchmark::State& state) {
  CeSpec spec;
  spec.lie = builtin::abelian(static_cast<int>(state.range(0)));
  spec.module = trivial_module(spec.lie);
  for (auto _ : state) benchmark::DoNotOptimize(lie_cohomology(spec));
}
BENCHMARK(BM_CeCohomologyAbelian)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

static void BM_CircleHolim(benchmark::State& state) {
  auto site = builtin::circle2();
  auto g = builtin::group(state.range(0) == 0 ? "S3" : "S4");
  auto x = constant_prestack(site, delooping(g.labels(), g.table(), g.identity()));
  const int s = *site.find_object("S");
  for (auto _ : state) {
    auto cech = cech_diagram(site, s, site.covers(s).at(1), x);
    benchmark::DoNotOptimize(holim2(cech.diagram));
  }
}
BENCHMARK(BM_CircleHolim)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_EnumerateReps(benchmark::State& state) {
  auto g = builtin::group("S4");
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_reps(2, g, 1'000'000'000, false, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_EnumerateReps)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_MaurerCartanDefect(benchmark::State& state) {
  auto g = build_dgla(builtin::surface_gca(3), builtin::iso21());
  auto a = builtin::truncated_polynomial(4);
  TensorContext ctx(g, a);
  Element alpha;
  Rational v = 1;
  for (const auto& k : ctx.basis(1, 1)) {
    add_term(alpha, k, v);
    v += 1;
  }
  for (auto _ : state) benchmark::DoNotOptimize(mc_defect(ctx, alpha));
}
BENCHMARK(BM_MaurerCartanDefect)->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();
