#include <benchmark/benchmark.h>

#include "ualg/builtins.hpp"
#include "ualg/commutator.hpp"
#include "ualg/congruence.hpp"
#include "ualg/construct.hpp"
#include "ualg/smp.hpp"
#include "ualg/tct.hpp"

using namespace ualg;

namespace {

void BM_ConLattice(benchmark::State& state) {
  FiniteAlgebra a = builtins::klein();
  for (auto _ : state) benchmark::DoNotOptimize(con_lattice(a));
}
BENCHMARK(BM_ConLattice);

void BM_GenerateSubuniverse(benchmark::State& state) {
  FiniteAlgebra z4 = builtins::z4g();
  std::vector<FiniteAlgebra> comps(static_cast<size_t>(state.range(0)), z4);
  std::set<std::vector<int>> gens;
  gens.insert(std::vector<int>(comps.size(), 1));
  std::vector<int> stagger(comps.size());
  for (size_t j = 0; j < comps.size(); ++j) stagger[j] = static_cast<int>(j % 4);
  gens.insert(stagger);
  for (auto _ : state) benchmark::DoNotOptimize(generate_subuniverse(comps, gens));
}
BENCHMARK(BM_GenerateSubuniverse)->Arg(3)->Arg(5)->Arg(7);

void BM_HigherCommutator(benchmark::State& state) {
  FiniteAlgebra a = builtins::z4s();
  Partition one = Partition::total(4);
  std::vector<Partition> betas(static_cast<size_t>(state.range(0)), one);
  for (auto _ : state) benchmark::DoNotOptimize(higher_commutator(a, betas));
}
BENCHMARK(BM_HigherCommutator)->Arg(2)->Arg(3);

void BM_PolynomialClone(benchmark::State& state) {
  FiniteAlgebra a = builtins::z4s();
  for (auto _ : state)
    benchmark::DoNotOptimize(polynomial_functions(a, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_PolynomialClone)->Arg(1)->Arg(2);

void BM_ConstructC(benchmark::State& state) {
  FiniteAlgebra z4 = builtins::z4g();
  auto [q, hom] = quotient(z4, Partition({0, 1, 0, 1}));
  for (auto _ : state) benchmark::DoNotOptimize(construct_c(hom));
}
BENCHMARK(BM_ConstructC);

void BM_CheckDalgIdentities(benchmark::State& state) {
  FiniteAlgebra z4 = builtins::z4g();
  auto [q, hom] = quotient(z4, Partition({0, 1, 0, 1}));
  ConstructedAlgebra c = construct_c(hom);
  for (auto _ : state) benchmark::DoNotOptimize(check_dalg_identities(c));
}
BENCHMARK(BM_CheckDalgIdentities);

void BM_SmpOracle(benchmark::State& state) {
  FiniteAlgebra z4 = builtins::z4g();
  SMPInstance inst;
  inst.components = {z4, z4, z4, z4};
  inst.generators = {{1, 1, 1, 1}, {0, 1, 2, 3}};
  inst.target = {2, 2, 2, 2};
  for (auto _ : state) benchmark::DoNotOptimize(smp_oracle(inst));
}
BENCHMARK(BM_SmpOracle);

}  // namespace

BENCHMARK_MAIN();
