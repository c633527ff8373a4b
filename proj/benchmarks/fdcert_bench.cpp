// Copyright 2026 The fdcert Authors
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

#include <cmath>
#include <random>
#include <vector>

#include "fdcert/fdcert.hpp"

namespace {

using namespace fdcert;

void BM_EigenvaluesQft(benchmark::State& state) {
  const auto x = build_model_error(ErrorModel::QFT, 0.05, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(eigenvalues_unitary(x));
}
BENCHMARK(BM_EigenvaluesQft)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

void BM_BuildQftPair(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_qft_pair(n, 0.05));
}
BENCHMARK(BM_BuildQftPair)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_MomentsFromUnitary(benchmark::State& state) {
  const auto x = build_model_error(ErrorModel::QFT, 0.05, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fd_from_unitary(x));
}
BENCHMARK(BM_MomentsFromUnitary)->DenseRange(6, 10, 2);

void BM_CertifyUnitary(benchmark::State& state) {
  const auto x = build_model_error(ErrorModel::QFT, 0.05, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(certify_unitary(x, 1.0));
}
BENCHMARK(BM_CertifyUnitary)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_SimulateProtocol(benchmark::State& state) {
  const auto x = build_cz_error(0.3);
  const auto samples = static_cast<std::size_t>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(estimate_moments(simulate_protocol(x, samples, 1000, seed++)));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SimulateProtocol)->Arg(100)->Arg(1000);

void BM_ConvexHull(benchmark::State& state) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::acos(-1.0));
  std::vector<PlanarPoint> points(static_cast<std::size_t>(state.range(0)));
  for (auto& p : points) {
    const double t = angle(rng);
    p = {std::cos(t), std::sin(t)};
  }
  for (auto _ : state) benchmark::DoNotOptimize(convex_hull(points));
}
BENCHMARK(BM_ConvexHull)->Range(16, 1024);

}  // namespace

BENCHMARK_MAIN();
