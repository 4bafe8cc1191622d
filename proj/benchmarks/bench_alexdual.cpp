// Copyright 2026 The alexdual Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <vector>

#include "alexdual/complex.hpp"
#include "alexdual/families.hpp"
#include "alexdual/graph.hpp"
#include "alexdual/homology.hpp"
#include "alexdual/ideal.hpp"
#include "alexdual/quasitree.hpp"

namespace {

using namespace alexdual;

SimplicialComplex deltaQ() {
  return SimplicialComplex::fromMasks(6, {0b000111, 0b001110, 0b011100, 0b101100});
}

std::vector<SimplicialComplex> randomComplexes(int n, std::size_t count) {
  families::Rng rng(17);
  std::vector<SimplicialComplex> out;
  for (std::size_t k = 0; k < count; ++k) out.push_back(families::randomComplex(rng, n, 8, 0.5));
  return out;
}

void BM_AlexanderDual(benchmark::State& state) {
  const auto complexes = randomComplexes(static_cast<int>(state.range(0)), 64);
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(alexanderDual(complexes[k++ % complexes.size()]));
  }
}
BENCHMARK(BM_AlexanderDual)->Arg(6)->Arg(10)->Arg(14);

void BM_LeafOrder(benchmark::State& state) {
  families::Rng rng(5);
  std::vector<SimplicialComplex> trees;
  for (int k = 0; k < 64; ++k) {
    trees.push_back(families::randomQuasiTree(rng, static_cast<int>(state.range(0)), 10));
  }
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(leafOrder(trees[k++ % trees.size()]));
}
BENCHMARK(BM_LeafOrder)->Arg(8)->Arg(16);

void BM_Chordality(benchmark::State& state) {
  families::Rng rng(9);
  std::vector<Graph> graphs;
  for (int k = 0; k < 64; ++k) {
    graphs.push_back(families::randomGraph(rng, static_cast<int>(state.range(0)), 0.4));
  }
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(isChordal(graphs[k++ % graphs.size()]));
}
BENCHMARK(BM_Chordality)->Arg(7)->Arg(24)->Arg(64);

void BM_CliqueComplex(benchmark::State& state) {
  families::Rng rng(3);
  const Graph g = families::randomGraph(rng, static_cast<int>(state.range(0)), 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(cliqueComplex(g));
}
BENCHMARK(BM_CliqueComplex)->Arg(12)->Arg(20);

void BM_BettiTableIdealEx(benchmark::State& state) {
  const MonomialIdeal ideal = power(facetIdeal(complementComplex(deltaQ())),
                                    static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(bettiTable(ideal, FieldChoice::rationals()));
  }
}
BENCHMARK(BM_BettiTableIdealEx)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_BettiTableRandom(benchmark::State& state) {
  families::Rng rng(11);
  std::vector<MonomialIdeal> ideals;
  for (int k = 0; k < 16; ++k) ideals.push_back(families::randomIdeal(rng, 6, 6, 2, 6));
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(bettiTable(ideals[k++ % ideals.size()], FieldChoice::prime(2)));
  }
}
BENCHMARK(BM_BettiTableRandom)->Unit(benchmark::kMicrosecond);

void BM_ShellingOrder(benchmark::State& state) {
  families::Rng rng(21);
  std::vector<SimplicialComplex> pure;
  for (int k = 0; k < 16; ++k) pure.push_back(families::randomPureComplex(rng, 8, 3, 8, true));
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(shellingOrder(pure[k++ % pure.size()]));
}
BENCHMARK(BM_ShellingOrder)->Unit(benchmark::kMicrosecond);

void BM_RelationTrees(benchmark::State& state) {
  const SimplicialComplex dq = deltaQ();
  for (auto _ : state) benchmark::DoNotOptimize(relationTrees(dq));
}
BENCHMARK(BM_RelationTrees);

}  // namespace

BENCHMARK_MAIN();
