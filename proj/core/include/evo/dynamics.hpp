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

#ifndef EVO_DYNAMICS_HPP
#define EVO_DYNAMICS_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "evo/algebra.hpp"
#include "evo/polyf.hpp"

namespace evo {

/// Orbit of an element under V: preperiod m, period d, the m+d distinct
/// iterates x, V(x), ..., and the entry point V^m(x) of the cycle.
struct OrbitReport {
    int preperiod = 0;
    std::uint64_t period = 1;
    std::vector<Vec> orbit;
    Vec entry_point;
};

/// Classification of the operator V as a whole.
struct PeriodicityProfile {
    enum class Kind { Nilpotent, QuasiConstant, UltimatelyPeriodic };
    Kind kind = Kind::UltimatelyPeriodic;
    /// Nilpotency degree, quasi-constant degree, or preperiod.
    int n = 0;
    /// Period (1 for QuasiConstant; unused for Nilpotent).
    std::uint64_t p = 1;
    /// The quasi-constant idempotent, when kind == QuasiConstant.
    std::optional<Vec> e;

    bool operator==(const PeriodicityProfile& o) const { return kind == o.kind && n == o.n && (kind == Kind::Nilpotent || p == o.p); }
};

/// Minimal monic annihilating polynomial of V with coefficients in F.
struct TrainPolynomial {
    PolyF T{Field(1)};
    int degree = 0;
    int valuation = 0;
    /// Striction sigma(T); 0 when T is a monomial.
    int sigma = 0;
};

/// Element periodicity with the divisibility certificate against the
/// operator profile: m <= n and d | p.
struct ElementProfile {
    int m = 0;
    std::uint64_t d = 1;
    bool m_within_bound = false;
    bool d_divides_period = false;
};

struct IdentityCheck {
    bool holds = false;
    std::optional<Vec> witness;  // x with P(V)(x) != 0
};

OrbitReport orbit(const Algebra& A, const Vec& x);

/// x^[n]: x^[1] = x, x^[k+1] = (x^[k])^2; equals V^{n-1}(x).
Vec plenary_power(const Algebra& A, const Vec& x, int n);

/// Profile from the minimal polynomial of the restricted-scalars matrix:
/// mu = X^v * g with g(0) = 1 gives Nilpotent(v) when g = 1, otherwise
/// UltimatelyPeriodic(v, order of X modulo g).
PeriodicityProfile operator_profile(const Algebra& A);
PeriodicityProfile operator_profile(const EvolutionOperator& op);

/// Oracle route: iterate powers of M2 and report the first repeat.
PeriodicityProfile operator_profile_bruteforce(const Algebra& A);

ElementProfile element_profile(const Algebra& A, const Vec& x);

/// The unique split x = a + b with V^d(a) = a and V^m(b) = 0, where
/// (m, d) is the element profile of x.
std::pair<Vec, Vec> element_decomposition(const Algebra& A, const Vec& x);

/// Witness (degree n, idempotent e) when A is quasi-constant:
/// V^n(x) = e for every x != 0. Occurs exactly for F_2, dim 1, e^2 = e.
std::optional<std::pair<int, Vec>> quasi_constant_check(const Algebra& A);

/// Minimal monic T in F[X] with T(V) = 0, found degree by degree via an
/// F_2-linear solve over the coefficient bits; the solution at the
/// minimal degree is unique (asserted).
TrainPolynomial train_polynomial(const Algebra& A);

/// Exact check of P(V) = 0 as an identity on all of A (complete because
/// the map is F_2-linear after restriction of scalars); on failure the
/// witness is a scalar multiple of a basis vector.
IdentityCheck verify_identity(const Algebra& A, const PolyF& P);
IdentityCheck verify_identity(const Algebra& A, const Poly2& P);

/// F_2-linear matrix of x -> alpha * x on restricted scalars.
BitMatrix scalar_matrix(const Field& field, fe alpha, int dim);

}  // namespace evo

#endif
