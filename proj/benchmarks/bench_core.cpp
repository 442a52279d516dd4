#include <benchmark/benchmark.h>

#include "lietwist/multiplets.hpp"

using namespace lietwist;

namespace {

void BM_WeylGenerateF4(benchmark::State& state) {
  DatumPtr d = RootDatum::build("F4");
  for (auto _ : state) benchmark::DoNotOptimize(generate_weyl(*d));
}
BENCHMARK(BM_WeylGenerateF4)->Unit(benchmark::kMillisecond);

void BM_FreudenthalB3(benchmark::State& state) {
  DatumPtr d = RootDatum::build("B3", "spin");
  RationalWeight lambda(Weight{state.range(0), 1, 1});
  for (auto _ : state) benchmark::DoNotOptimize(irreducible_restriction(d->system(), lambda));
}
BENCHMARK(BM_FreudenthalB3)->Arg(1)->Arg(3)->Arg(6);

void BM_InduceG2(benchmark::State& state) {
  ProblemPtr p = InductionProblem::build(make_subgroup(RootDatum::build("G2"), "a2long"));
  TorusElement a = expand(GroupElement::irreducible(p->h_scope(), p->rho_m() + RationalWeight(Weight{3, 3})));
  for (auto _ : state) benchmark::DoNotOptimize(induce_twisted_spinc(*p, a));
}
BENCHMARK(BM_InduceG2);

void BM_MultipletF4(benchmark::State& state) {
  ProblemPtr p = InductionProblem::build(make_subgroup(RootDatum::build("F4"), "b4"));
  TorusElement a = TorusElement::monomial(p->rho_g());
  for (auto _ : state) benchmark::DoNotOptimize(multiplet(*p, a));
}
BENCHMARK(BM_MultipletF4)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
