// Copyright 2026 The benchmit Authors
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

#include "benchmit/density_matrix.h"
#include "benchmit/mitigation/transforms.h"
#include "benchmit/models.h"
#include "benchmit/noisy_sim.h"
#include "benchmit/program.h"
#include "benchmit/statevector.h"
#include "benchmit/transpile.h"

namespace benchmit {
namespace {

Circuit chain(ModelKind kind, std::size_t n, std::size_t nt) {
    ModelParams p;
    p.model = kind;
    p.theta1 = p.theta2 = p.theta3 = p.theta4 = 0.3;
    p.n_trotter = nt;
    p.topology = Topology::linear_chain(n);
    return build_model(p);
}

void BM_DensityNoisyCz(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    DensityMatrix rho(n);
    for (auto _ : state) {
        rho.apply_noisy_cz(0, static_cast<std::uint32_t>(n - 1), 0.01);
        benchmark::ClobberMemory();
    }
}
BENCHMARK(BM_DensityNoisyCz)->DenseRange(4, 10, 2);

void BM_DensityOneQubit(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    DensityMatrix rho(n);
    const Mat2 sx = single_qubit_matrix(Gate::sx(0));
    for (auto _ : state) {
        rho.apply_1q(static_cast<std::uint32_t>(n / 2), sx);
        benchmark::ClobberMemory();
    }
}
BENCHMARK(BM_DensityOneQubit)->DenseRange(4, 10, 2);

void BM_NoisyExpectation(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const Circuit c = fold(transpile(chain(ModelKind::Heisenberg, n, 4)), 3);
    const PauliString o = PauliString::single(n, n / 2, Pauli::Z);
    const NoiseModel nm = NoiseModel::uniform(0.01);
    for (auto _ : state) {
        benchmark::DoNotOptimize(noisy_expectation(c, o, nm));
    }
}
BENCHMARK(BM_NoisyExpectation)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_Statevector(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const Circuit c = transpile(chain(ModelKind::KickedIsing, n, 10));
    for (auto _ : state) {
        benchmark::DoNotOptimize(simulate_statevector(c));
    }
}
BENCHMARK(BM_Statevector)->Arg(8)->Arg(12)->Arg(14)->Unit(benchmark::kMillisecond);

void BM_TranspileCompact(benchmark::State& state) {
    ModelParams p;
    p.model = ModelKind::KickedIsing;
    p.theta1 = -kPi / 8;
    p.theta2 = -kPi / 2;
    p.n_trotter = static_cast<std::size_t>(state.range(0));
    p.topology = Topology::linear_chain(100);
    const Circuit c = build_model(p);
    for (auto _ : state) {
        benchmark::DoNotOptimize(transpile(c, TranspilePath::Compact));
    }
}
BENCHMARK(BM_TranspileCompact)->Arg(5)->Arg(20)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace benchmit

BENCHMARK_MAIN();
