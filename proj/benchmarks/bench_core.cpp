/*
   Copyright 2026 the evo project contributors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <benchmark/benchmark.h>

#include "evo/canonical.hpp"
#include "evo/dynamics.hpp"
#include "evo/generators.hpp"

namespace {

void BM_BitMatrixMultiply(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    evo::Algebra A = evo::random_algebra(evo::Field(1), n, 42, evo::RandomKind::Evolution);
    evo::EvolutionOperator op = evo::operator_of(A);
    const evo::BitMatrix& m = op.m2();
    evo::BitMatrix acc = evo::BitMatrix::identity(n);
    for (auto _ : state) {
        acc = acc * m;
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_BitMatrixMultiply)->Arg(16)->Arg(32)->Arg(64);

void BM_OperatorProfile(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    evo::Algebra A = evo::random_algebra(evo::Field(1), n, 7, evo::RandomKind::Evolution);
    for (auto _ : state) {
        benchmark::DoNotOptimize(evo::operator_profile(A));
    }
}
BENCHMARK(BM_OperatorProfile)->Arg(8)->Arg(16)->Arg(32);

void BM_TrainPolynomial(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    evo::Algebra A = evo::random_algebra(evo::Field(2), n, 11, evo::RandomKind::Evolution);
    for (auto _ : state) {
        benchmark::DoNotOptimize(evo::train_polynomial(A));
    }
}
BENCHMARK(BM_TrainPolynomial)->Arg(4)->Arg(6);

void BM_InvariantFactors(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    evo::Algebra A = evo::random_algebra(evo::Field(1), n, 3, evo::RandomKind::Evolution);
    evo::EvolutionOperator op = evo::operator_of(A);
    const evo::BitMatrix& m = op.m2();
    for (auto _ : state) {
        benchmark::DoNotOptimize(evo::invariant_factors(m));
    }
}
BENCHMARK(BM_InvariantFactors)->Arg(8)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
