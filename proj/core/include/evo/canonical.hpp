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

#ifndef EVO_CANONICAL_HPP
#define EVO_CANONICAL_HPP

#include <cstdint>
#include <vector>

#include "evo/algebra.hpp"
#include "evo/polyf.hpp"

namespace evo {

/// Similitude invariants of a GF(2) matrix: the nontrivial diagonal of
/// the Smith normal form of XI - M, in divisibility order (each entry
/// divides the next; the last is the minimal polynomial).
std::vector<Poly2> invariant_factors(const BitMatrix& M);

/// Semi-isomorphism class data of an ultimately periodic algebra:
/// nilpotent block sizes s (weakly decreasing), periodic block exponents
/// t (weakly decreasing), odd part q and 2-exponent r of the period.
struct CanonicalInvariants {
    std::vector<int> s;
    std::vector<int> t;
    std::uint64_t q = 1;
    int r = 0;
};

/// s-tuple of a nilpotent algebra over F_2: the degrees of the invariant
/// factors X^{s_i}, weakly decreasing; s_1 = nilpotency degree.
std::vector<int> nilpotent_invariants(const Algebra& A);

/// Full invariants of an ultimately periodic algebra over F_2 via the
/// kernel split ker V^n (+) ker(V^p - id). Throws UnexpectedFactorShape
/// when a periodic invariant factor is not (X^q+1)^{2^t}.
CanonicalInvariants periodic_invariants(const Algebra& A);

/// Nilpotent canonical form A(s) over F_2: disjoint chains
/// e_{i,1} -> e_{i,2} -> ... -> 0 of lengths s_i.
Algebra build_A_s(const std::vector<int>& s);

/// Ultimately periodic canonical form A_(s,t): A(s) chains plus cyclic
/// blocks of lengths 2^{t_i} q. The field degree must divide every
/// cycle length (FieldIncompatible otherwise).
Algebra build_A_st(const std::vector<int>& s, const std::vector<int>& t, std::uint64_t q, const Field& field);

/// Companion algebra C_P: V permutes the basis down the chain and the
/// last image is given by the coefficients of P (e_i^2 = C_P column i).
Algebra build_companion(const Poly2& P, const Field& field);
Algebra build_companion(const PolyF& P);

/// Tail of length n feeding a cycle of length p over F_2; the operator
/// profile is exactly (n, p).
Algebra build_cycle_tail(std::uint64_t p, int n);

/// Canonical train algebra: nilpotent chains of lengths v_i plus, for
/// each (divisor D, multiplicity m), m companion blocks C_D. Requires
/// the field degree to divide sigma(D) for every selected divisor.
Algebra build_train_algebra(const std::vector<int>& v,
                            const std::vector<std::pair<Poly2, int>>& selection, const Field& field);

enum class SemiIso {
    Yes,
    No,
    /// q > 1: restricted-scalars similarity is only a necessary condition.
    NecessaryConditionsPass,
    NecessaryConditionsFail,
};

/// Over F_2 semi-isomorphism is equivalent to similarity of the V
/// matrices (equal invariant factors); over larger fields only the
/// necessary restricted-scalars check is performed.
SemiIso semi_isomorphic(const Algebra& A, const Algebra& B);

}  // namespace evo

#endif
