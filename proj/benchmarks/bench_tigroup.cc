// Copyright 2026 The tigroup Authors
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

#include "tigroup/corpus/catalog.h"
#include "tigroup/corpus/constructors.h"
#include "tigroup/grouplat/lattice.h"
#include "tigroup/grouplat/subgroup.h"
#include "tigroup/thmcheck/suite.h"
#include "tigroup/tiprops/analysis.h"
#include "tigroup/tiprops/frobenius.h"
#include "tigroup/tiprops/ti.h"

namespace {

using namespace tig;

// Fresh groups each iteration so the lazy caches do not hide the work.
PermutationGroup fresh(const PermutationGroup& g) { return PermutationGroup(g.degree(), g.generators()); }

void BM_SchreierSims(benchmark::State& state) {
  const PermutationGroup g = field_aut_extension(static_cast<std::uint32_t>(state.range(0)),
                                                 static_cast<std::uint32_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(fresh(g).order());
}
BENCHMARK(BM_SchreierSims)->Args({32, 5})->Args({128, 7});

void BM_Enumerate(benchmark::State& state) {
  const PermutationGroup g = symmetric(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    std::uint64_t n = 0;
    for_each_element(g, [&](const Permutation&) { return ++n, true; });
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_Enumerate)->Arg(6)->Arg(8);

void BM_SubgroupClasses(benchmark::State& state) {
  const PermutationGroup g = symmetric(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(subgroup_classes(fresh(g))->size());
}
BENCHMARK(BM_SubgroupClasses)->Arg(4)->Arg(5);

void BM_Normalizer(benchmark::State& state) {
  const CatalogEntry& e = *find_entry("sl2_32_c5");
  for (auto _ : state) benchmark::DoNotOptimize(normalizer(fresh(e.group()), e.subgroup("H")).order());
}
BENCHMARK(BM_Normalizer)->Unit(benchmark::kMillisecond);

void BM_IsTI(benchmark::State& state) {
  const CatalogEntry& e = *find_entry("sl2_32_c5");
  for (auto _ : state) benchmark::DoNotOptimize(is_ti(fresh(e.group()), e.subgroup("H")).ti);
}
BENCHMARK(BM_IsTI)->Unit(benchmark::kMillisecond);

void BM_FrobeniusKernel(benchmark::State& state) {
  const CatalogEntry& e = *find_entry("agl1_13");
  for (auto _ : state) benchmark::DoNotOptimize(frobenius_kernel(fresh(e.group()), e.subgroup("H")).kernel);
}
BENCHMARK(BM_FrobeniusKernel);

void BM_AnalyzeFieldExtension(benchmark::State& state) {
  const CatalogEntry& e = *find_entry("sl2_32_c5");
  for (auto _ : state) benchmark::DoNotOptimize(analyze_ti_hall(fresh(e.group()), e.subgroup("H")).report.verdict);
}
BENCHMARK(BM_AnalyzeFieldExtension)->Unit(benchmark::kMillisecond);

void BM_SuiteFrobeniusTag(benchmark::State& state) {
  SuiteConfig config;
  config.suites = {"all"};
  config.filter = "frobenius";
  for (auto _ : state) benchmark::DoNotOptimize(run_suite(config).results.size());
}
BENCHMARK(BM_SuiteFrobeniusTag)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
