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

#include "evo/generators.hpp"

#include <numeric>
#include <random>

#include "evo/errors.hpp"

namespace evo {

namespace {

Algebra empty_f2_algebra(int n) {
    return Algebra{Field(1), n, std::vector<Vec>(static_cast<std::size_t>(n), Vec(static_cast<std::size_t>(n), 0)),
                   std::nullopt, std::nullopt};
}

}  // namespace

Algebra rule90(int n) {
    if (n < 3) throw SizeTooSmall("ring size must be >= 3");
    Algebra A = empty_f2_algebra(n);
    for (int i = 0; i < n; ++i) {
        A.squares[static_cast<std::size_t>(i)][static_cast<std::size_t>((i + 1) % n)] ^= 1;
        A.squares[static_cast<std::size_t>(i)][static_cast<std::size_t>((i + n - 1) % n)] ^= 1;
    }
    return A;
}

Algebra rule150(int n) {
    if (n < 3) throw SizeTooSmall("ring size must be >= 3");
    Algebra A = rule90(n);
    for (int i = 0; i < n; ++i) A.squares[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] ^= 1;
    return A;
}

Algebra dynsys_algebra(const DynSys& D) {
    if (D.size < 1 || static_cast<int>(D.f.size()) != D.size) throw InvalidInput("malformed dynamical system");
    for (int v : D.f)
        if (v < 0 || v >= D.size) throw InvalidInput("map value out of range");
    Algebra A = empty_f2_algebra(D.size);
    for (int i = 0; i < D.size; ++i) A.squares[static_cast<std::size_t>(i)][static_cast<std::size_t>(D.f[static_cast<std::size_t>(i)])] = 1;
    return A;
}

PeriodicityProfile dynsys_profile(const DynSys& D) {
    // Combinatorial view: preperiod = longest tail into a cycle, period
    // = lcm of cycle lengths.
    int n = D.size;
    std::vector<int> depth(static_cast<std::size_t>(n), -1);  // steps to reach a cycle
    std::vector<int> on_cycle_len(static_cast<std::size_t>(n), 0);
    // Find cycles: iterate each point n steps to land on a cycle.
    std::vector<bool> cyclic(static_cast<std::size_t>(n), false);
    for (int s = 0; s < n; ++s) {
        int x = s;
        for (int k = 0; k < n; ++k) x = D.f[static_cast<std::size_t>(x)];
        // x is now on a cycle; walk it once.
        if (!cyclic[static_cast<std::size_t>(x)]) {
            int len = 1, y = D.f[static_cast<std::size_t>(x)];
            cyclic[static_cast<std::size_t>(x)] = true;
            while (y != x) {
                cyclic[static_cast<std::size_t>(y)] = true;
                y = D.f[static_cast<std::size_t>(y)];
                ++len;
            }
            int z = x;
            do {
                on_cycle_len[static_cast<std::size_t>(z)] = len;
                z = D.f[static_cast<std::size_t>(z)];
            } while (z != x);
        }
    }
    int max_tail = 0;
    std::uint64_t period = 1;
    for (int s = 0; s < n; ++s) {
        int x = s, steps = 0;
        while (!cyclic[static_cast<std::size_t>(x)]) {
            x = D.f[static_cast<std::size_t>(x)];
            ++steps;
        }
        max_tail = std::max(max_tail, steps);
        period = std::lcm(period, static_cast<std::uint64_t>(on_cycle_len[static_cast<std::size_t>(x)]));
    }
    PeriodicityProfile prof;
    prof.kind = PeriodicityProfile::Kind::UltimatelyPeriodic;
    prof.n = max_tail;
    prof.p = period;
    return prof;
}

DynSys quadratic_map(int c, int m) {
    if (m < 2) throw InvalidInput("modulus must be >= 2");
    DynSys D;
    D.size = m;
    D.f.resize(static_cast<std::size_t>(m));
    for (int x = 0; x < m; ++x) {
        long v = (static_cast<long>(x) * x + c) % m;
        if (v < 0) v += m;
        D.f[static_cast<std::size_t>(x)] = static_cast<int>(v);
    }
    return D;
}

Algebra random_algebra(const Field& field, int dim, std::uint64_t seed, RandomKind kind) {
    if (dim < 1 || dim > 64) throw InvalidInput("dimension must be in 1..64");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> dist(0, field.size() - 1);
    Algebra A{field, dim, std::vector<Vec>(static_cast<std::size_t>(dim), Vec(static_cast<std::size_t>(dim), 0)),
              std::nullopt, std::nullopt};
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) A.squares[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = dist(rng);
    if (kind == RandomKind::General) {
        std::vector<std::vector<Vec>> table(
            static_cast<std::size_t>(dim),
            std::vector<Vec>(static_cast<std::size_t>(dim), Vec(static_cast<std::size_t>(dim), 0)));
        for (int i = 0; i < dim; ++i) {
            table[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = A.squares[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < dim; ++j) {
                Vec prod(static_cast<std::size_t>(dim), 0);
                for (int k = 0; k < dim; ++k) prod[static_cast<std::size_t>(k)] = dist(rng);
                table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = prod;
                table[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = std::move(prod);
            }
        }
        A.table = std::move(table);
    }
    return A;
}

bool evolution_nilpotency_check(const Algebra& A) {
    if (!A.has_natural_basis()) throw NotEvolutionAlgebra("algebra has nonzero off-diagonal products");
    std::vector<Vec> S = structure_matrix(A);
    int bound = A.field.p() * A.dim;
    if (A.field.p() == 1) {
        // Nilpotency of S itself; Cayley-Hamilton bounds the exponent by d.
        std::vector<Vec> acc = S;
        for (int k = 1; k <= A.dim; ++k) {
            bool zero = true;
            for (const Vec& row : acc)
                for (fe c : row) zero = zero && c == 0;
            if (zero) return true;
            acc = hadamard_composite(A.field, S, k + 1);  // over F_2 this is S^{k+1}
        }
        return false;
    }
    for (int k = 1; k <= bound; ++k) {
        std::vector<Vec> comp = hadamard_composite(A.field, S, k);
        bool zero = true;
        for (const Vec& row : comp)
            for (fe c : row) zero = zero && c == 0;
        if (zero) return true;
    }
    return false;
}

}  // namespace evo
