/*
 * Copyright 2026 The stabdec Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


// Timings for structure enumeration, absorbing-set analysis and stable
// decompositions on generated games and markets.

#include <benchmark/benchmark.h>

#include "stabdec/absorbing.hpp"
#include "stabdec/applications.hpp"
#include "stabdec/decomposition.hpp"
#include "stabdec/structure.hpp"

namespace {

using namespace stabdec;

constexpr std::uint64_t kSeed = 17;

void BM_EnumerateStructures(benchmark::State& state)
{
    const Game g = roommate_to_game(random_roommate(static_cast<int>(state.range(0)), 1.0, kSeed));
    std::size_t count = 0;
    for (auto _ : state) {
        const auto all = enumerate_structures(g);
        count = all.size();
        benchmark::DoNotOptimize(all.data());
    }
    state.counters["structures"] = static_cast<double>(count);
}
BENCHMARK(BM_EnumerateStructures)->DenseRange(4, 12, 2)->Unit(benchmark::kMicrosecond);

void BM_AbsorbingRandom(benchmark::State& state)
{
    const Game g = random_game(static_cast<int>(state.range(0)), 0.5, kSeed);
    for (auto _ : state)
        benchmark::DoNotOptimize(analyze_absorbing(g).sets.size());
}
BENCHMARK(BM_AbsorbingRandom)->DenseRange(4, 9)->Unit(benchmark::kMicrosecond);

void BM_AbsorbingRoommate(benchmark::State& state)
{
    const Game g = roommate_to_game(random_roommate(static_cast<int>(state.range(0)), 1.0, kSeed));
    for (auto _ : state)
        benchmark::DoNotOptimize(analyze_absorbing(g).sets.size());
}
BENCHMARK(BM_AbsorbingRoommate)->DenseRange(4, 10, 2)->Unit(benchmark::kMicrosecond);

void BM_DecompositionsRoommate(benchmark::State& state)
{
    const Game g = roommate_to_game(random_roommate(static_cast<int>(state.range(0)), 1.0, kSeed));
    for (auto _ : state)
        benchmark::DoNotOptimize(all_stable_decompositions(g).size());
}
BENCHMARK(BM_DecompositionsRoommate)->DenseRange(4, 10, 2)->Unit(benchmark::kMicrosecond);

void BM_DecompositionsMarriage(benchmark::State& state)
{
    const int side = static_cast<int>(state.range(0));
    const Game g = marriage_to_game(random_marriage(side, side, 0.8, kSeed));
    for (auto _ : state)
        benchmark::DoNotOptimize(all_stable_decompositions(g).size());
}
BENCHMARK(BM_DecompositionsMarriage)->DenseRange(2, 5)->Unit(benchmark::kMicrosecond);

void BM_ConvergenceMarriage(benchmark::State& state)
{
    const int side = static_cast<int>(state.range(0));
    const Game g = marriage_to_game(random_marriage(side, side, 0.8, kSeed));
    for (auto _ : state)
        benchmark::DoNotOptimize(converges_to_stability(g).converges);
}
BENCHMARK(BM_ConvergenceMarriage)->DenseRange(2, 5)->Unit(benchmark::kMicrosecond);

} // namespace

BENCHMARK_MAIN();
