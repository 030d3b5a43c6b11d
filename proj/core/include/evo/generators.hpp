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

#ifndef EVO_GENERATORS_HPP
#define EVO_GENERATORS_HPP

#include <cstdint>
#include <vector>

#include "evo/algebra.hpp"
#include "evo/dynamics.hpp"

namespace evo {

/// Finite dynamical system: a total map f on {0..size-1}.
struct DynSys {
    int size = 0;
    std::vector<int> f;
};

/// Cellular-automaton ring of size n under rule 90:
/// e_i^2 = e_{i-1} + e_{i+1} (indices cyclic). Requires n >= 3.
Algebra rule90(int n);

/// Rule 150: e_i^2 = e_{i-1} + e_i + e_{i+1}. Requires n >= 3.
Algebra rule150(int n);

/// Transition algebra of a dynamical system over F_2: e_i^2 = e_{f(i)}.
Algebra dynsys_algebra(const DynSys& D);

/// Profile of the functional graph of f: preperiod = longest tail,
/// period = lcm of the cycle lengths. Must agree with the transition
/// algebra's operator profile.
PeriodicityProfile dynsys_profile(const DynSys& D);

/// f(x) = (x^2 + c) mod m.
DynSys quadratic_map(int c, int m);

enum class RandomKind { General, Evolution };

/// Deterministic pseudo-random algebra. Evolution kind leaves the
/// off-diagonal products zero (natural basis); general kind fills a
/// symmetric full table.
Algebra random_algebra(const Field& field, int dim, std::uint64_t seed, RandomKind kind);

/// Nilpotency of the evolution operator of an evolution algebra via the
/// structure matrix: over F_2 nilpotency of S itself; over F_{2^q}
/// vanishing of a Hadamard composite S S^{.2} ... within p*d steps.
/// Must agree with profile-based nilpotency. Throws NotEvolutionAlgebra
/// when off-diagonal products are present.
bool evolution_nilpotency_check(const Algebra& A);

}  // namespace evo

#endif
