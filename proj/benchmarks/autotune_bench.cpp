/*
 * Copyright 2026 The gossip_lab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <benchmark/benchmark.h>

#include "gossiplab/autotune.hpp"

namespace {

using namespace gossiplab;

void BM_ComputeMu(benchmark::State& state) {
  SystemSize n(static_cast<int>(state.range(0)));
  Rational h(1, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(compute_mu(n, h));
  }
}
BENCHMARK(BM_ComputeMu)->Arg(50)->Arg(200)->Unit(benchmark::kMicrosecond);

void BM_AdaptiveAutotune(benchmark::State& state) {
  SystemSize n(200);
  MuEvaluator mu = make_mu_evaluator(n);
  ParallelismMap seed(n);
  seed.insert(Rational(0), mu(Rational(0)));
  seed.insert(Rational(1), mu(Rational(1)));
  for (auto _ : state) {
    MapeController c(seed, SenseProvider::constant(13), MapeConfig{}, Rational(0), mu);
    benchmark::DoNotOptimize(run_autotune(c, 12));
  }
}
BENCHMARK(BM_AdaptiveAutotune)->Unit(benchmark::kMillisecond);

void BM_TuneLookup(benchmark::State& state) {
  ParallelismMap map(SystemSize(200));
  for (const Rational& h : default_lookup_grid()) map.insert(h, Rational(1) + Rational(133) * h);
  int cp = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(tune_lookup(cp, map));
    cp = cp % 134 + 1;
  }
}
BENCHMARK(BM_TuneLookup);

}  // namespace
