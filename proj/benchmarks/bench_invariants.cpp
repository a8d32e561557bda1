// Copyright 2026 The sgpoly authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "sgpoly/catalog.hpp"
#include "sgpoly/invariants.hpp"
#include "sgpoly/relations.hpp"
#include "sgpoly/surfaces.hpp"

using namespace sgpoly;

namespace {

LinkDiagram cable16() { return double_diagram(catalog::load("figure-eight").diagram); }

void BM_BracketEnumerate16(benchmark::State& state) {
  LinkDiagram link = cable16();
  StateSumConfig cfg;
  cfg.workers = 1;
  cfg.bracket_sweep_threshold = 30;
  for (auto _ : state) benchmark::DoNotOptimize(kauffman_bracket(link, cfg));
}
BENCHMARK(BM_BracketEnumerate16)->Unit(benchmark::kMillisecond);

void BM_BracketSweep16(benchmark::State& state) {
  LinkDiagram link = cable16();
  StateSumConfig cfg;
  cfg.bracket_sweep_threshold = 0;
  for (auto _ : state) benchmark::DoNotOptimize(kauffman_bracket(link, cfg));
}
BENCHMARK(BM_BracketSweep16)->Unit(benchmark::kMillisecond);

void BM_BracketSkein16(benchmark::State& state) {
  LinkDiagram link = cable16();
  StateSumConfig cfg;
  cfg.skein_memo = true;
  for (auto _ : state) benchmark::DoNotOptimize(kauffman_bracket_skein(link, cfg));
}
BENCHMARK(BM_BracketSkein16)->Unit(benchmark::kMillisecond);

void BM_BracketSweep26(benchmark::State& state) {
  LinkDiagram link = associated_link(catalog::load("omega6").diagram).link;
  StateSumConfig cfg;
  cfg.bracket_crossing_cap = 28;
  for (auto _ : state) benchmark::DoNotOptimize(kauffman_bracket(link, cfg));
}
BENCHMARK(BM_BracketSweep26)->Unit(benchmark::kMillisecond);

void BM_YamadaFourCrossings(benchmark::State& state) {
  Diagram d = catalog::load("omega7").diagram;
  StateSumConfig cfg;
  cfg.workers = 1;
  for (auto _ : state) benchmark::DoNotOptimize(yamada(d, cfg));
}
BENCHMARK(BM_YamadaFourCrossings)->Unit(benchmark::kMillisecond);

void BM_BandPolynomial(benchmark::State& state) {
  Diagram d = catalog::load("omega7").diagram;
  StateSumConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(jaeger(d, cfg));
}
BENCHMARK(BM_BandPolynomial)->Unit(benchmark::kMillisecond);

void BM_MainRelationOmega7(benchmark::State& state) {
  Diagram d = catalog::load("omega7").diagram;
  StateSumConfig cfg;
  cfg.bracket_crossing_cap = 28;
  for (auto _ : state) benchmark::DoNotOptimize(verify_main_theorem(d, cfg));
}
BENCHMARK(BM_MainRelationOmega7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
