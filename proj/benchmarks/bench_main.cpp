/*
 * Copyright 2026 The advopt Authors
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

#include <benchmark/benchmark.h>

#include "advopt/cycle.hpp"
#include "advopt/ground_states.hpp"
#include "advopt/minplus.hpp"
#include "advopt/theta.hpp"

namespace {

using namespace advopt;

const Sft& golden() {
  static const Sft s = golden_mean_shift();
  return s;
}

const Sft& full2() {
  static const Sft s = full_shift(Alphabet({"0", "1"}));
  return s;
}

const Potential& hamming() {
  static const Potential p = hamming_preset(golden().alphabet(), full2().alphabet());
  return p;
}

void BM_MinCost(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  Word y{0, std::vector<LetterIndex>(k, 1)};
  for (auto _ : state) benchmark::DoNotOptimize(min_cost(golden(), hamming(), y));
}
BENCHMARK(BM_MinCost)->Arg(16)->Arg(256)->Arg(4096);

void BM_RkSequence(benchmark::State& state) {
  RkOptions options;
  options.prune = state.range(1) != 0;
  const auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(r_k_sequence(golden(), full2(), hamming(), k, options));
}
BENCHMARK(BM_RkSequence)->Args({10, 1})->Args({10, 0})->Args({14, 1})->Args({14, 0})->Unit(benchmark::kMillisecond);

void BM_DeltaBracket(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(delta_bracket(golden(), full2(), hamming(), 14, 6));
}
BENCHMARK(BM_DeltaBracket)->Unit(benchmark::kMillisecond);

void BM_KarpLayered(benchmark::State& state) {
  std::vector<LetterIndex> cycle(static_cast<std::size_t>(state.range(0)), 1);
  cycle[0] = 0;
  const auto orbit = PeriodicOrbit::from_cycle(full2(), cycle);
  for (auto _ : state) benchmark::DoNotOptimize(psi_periodic(golden(), hamming(), orbit));
}
BENCHMARK(BM_KarpLayered)->Arg(8)->Arg(64)->Arg(256);

void BM_EffectivePotential(benchmark::State& state) {
  const auto L = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(effective_potential(golden(), full2(), hamming(), L));
}
BENCHMARK(BM_EffectivePotential)->Arg(1)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_AlphaEstimate(benchmark::State& state) {
  const auto L = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(alpha_estimate(golden(), full2(), hamming(), L));
}
BENCHMARK(BM_AlphaEstimate)->Arg(1)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_CertifyEdgeExample(benchmark::State& state) {
  const auto sys = hruskova_system();
  const auto aa = PeriodicOrbit::from_cycle(sys.y, {sys.y.alphabet().index_of("AA")});
  const auto W = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(certify_orbit(aa, sys.y, sys.x, sys.f, Rational(0), W));
}
BENCHMARK(BM_CertifyEdgeExample)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
