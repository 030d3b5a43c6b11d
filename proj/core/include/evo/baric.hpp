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

#ifndef EVO_BARIC_HPP
#define EVO_BARIC_HPP

#include <utility>
#include <vector>

#include "evo/algebra.hpp"

namespace evo {

/// A weighted algebra together with derived weight data: a basis of
/// ker omega and one representative of the weight-1 hyperplane.
struct BaricStructure {
    Algebra algebra;
    Vec omega;
    std::vector<Vec> kernel_basis;  // d-1 vectors over F
    Vec unit_rep;                   // element with omega = 1
};

/// omega(x) = sum omega_i x_i.
fe weight_of(const BaricStructure& B, const Vec& x);

/// Validates the weight (nonzero algebra morphism; requires the full
/// table) and builds the kernel/unit data. Throws NotAMorphism with a
/// witness pair, ZeroWeight, or InvariantViolation.
BaricStructure check_weight(const Algebra& A);

/// (n, e) with n the nil-plenary degree of V on ker omega and
/// e = V^n(unit_rep): then V^n(x) = omega(x)^{2^n} e for every x.
/// Throws KernelNotNilplenary when V is not nilpotent on ker omega.
std::pair<int, Vec> baric_quasi_constant(const BaricStructure& B);

/// Minimal (preperiod n, period p) of the Bernstein identity
/// V^{n+p}(x) = omega(x)^{2^n(2^p-1)} V^n(x); always (nu, 1) where nu
/// is the quasi-constant degree (period compared first in the order).
std::pair<int, std::uint64_t> bernstein_profile(const BaricStructure& B);

/// Minimal weighted train identity
/// V^n(x) = sum_k alpha_k omega(x)^{2^n - 2^k} V^k(x).
struct WeightedTrainIdentity {
    int degree = 0;                // n
    std::vector<fe> alpha;         // alpha_0 .. alpha_{n-1}
};

/// The minimal identity has degree nu + 1 with alpha_nu = 1 and the
/// others zero; the solver additionally confirms no smaller degree works.
WeightedTrainIdentity weighted_train_identity(const BaricStructure& B);

/// Exact check that the degree-n identity with the given coefficients
/// holds for every x (complete by the lambda/kernel separation).
bool holds_weighted_identity(const BaricStructure& B, const WeightedTrainIdentity& id);

/// Weighted canonical form: idempotent e of weight 1 plus A(s) kernel
/// chains, all mixed products zero, full table and weight present.
Algebra build_weighted_As(const std::vector<int>& s, const Field& field);

}  // namespace evo

#endif
