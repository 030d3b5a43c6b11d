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

#include "evo/canonical.hpp"

#include <algorithm>
#include <numeric>

#include "evo/dynamics.hpp"
#include "evo/errors.hpp"

namespace evo {

namespace {

using PolyMatrix = std::vector<std::vector<Poly2>>;

// Smith normal form over F_2[X]: diagonalize with a divisibility chain.
std::vector<Poly2> smith_diagonal(PolyMatrix m) {
    std::size_t n = m.size();
    std::vector<Poly2> diag;
    for (std::size_t t = 0; t < n; ++t) {
        // Find a nonzero entry of minimal degree in the trailing block.
        bool found = false;
        std::size_t pi = t, pj = t;
        for (std::size_t i = t; i < n; ++i)
            for (std::size_t j = t; j < n; ++j) {
                if (m[i][j].is_zero()) continue;
                if (!found || m[i][j].degree() < m[pi][pj].degree()) {
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        if (!found) break;
        std::swap(m[t], m[pi]);
        for (std::size_t i = 0; i < n; ++i) std::swap(m[i][t], m[i][pj]);
        // Eliminate row and column t; restart if a remainder drops below
        // the pivot degree.
        bool again = true;
        while (again) {
            again = false;
            for (std::size_t i = t + 1; i < n; ++i) {
                if (m[i][t].is_zero()) continue;
                Poly2 qt = m[i][t] / m[t][t];
                for (std::size_t j = t; j < n; ++j) m[i][j] = m[i][j] + qt * m[t][j];
                if (!m[i][t].is_zero()) {
                    std::swap(m[t], m[i]);
                    again = true;
                }
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (m[t][j].is_zero()) continue;
                Poly2 qt = m[t][j] / m[t][t];
                for (std::size_t i = t; i < n; ++i) m[i][j] = m[i][j] + qt * m[i][t];
                if (!m[t][j].is_zero()) {
                    for (std::size_t i = 0; i < n; ++i) std::swap(m[i][t], m[i][j]);
                    again = true;
                }
            }
        }
        // Enforce divisibility: if the pivot misses some trailing entry,
        // fold that row in and redo this position.
        for (std::size_t i = t + 1; i < n; ++i) {
            for (std::size_t j = t + 1; j < n; ++j) {
                if (!m[i][j].is_zero() && !(m[i][j] % m[t][t]).is_zero()) {
                    for (std::size_t jj = t; jj < n; ++jj) m[t][jj] = m[t][jj] + m[i][jj];
                    --t;
                    goto next_pivot;
                }
            }
        }
        diag.push_back(m[t][t]);
    next_pivot:;
    }
    return diag;
}

}  // namespace

std::vector<Poly2> invariant_factors(const BitMatrix& M) {
    if (M.rows() != M.cols()) throw DimensionMismatch("invariant factors require a square matrix");
    std::size_t n = static_cast<std::size_t>(M.rows());
    PolyMatrix xm(n, std::vector<Poly2>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Poly2 e;
            if (M.get(static_cast<int>(i), static_cast<int>(j))) e = e + Poly2::one();
            if (i == j) e = e + Poly2::x();
            xm[i][j] = e;
        }
    std::vector<Poly2> diag = smith_diagonal(std::move(xm));
    std::vector<Poly2> out;
    for (const Poly2& d : diag) {
        if (d.degree() >= 1) out.push_back(d);
    }
    // Ascending divisibility order; smith_diagonal already produces it,
    // but normalize defensively by degree (chain entries have distinct or
    // equal degrees in order).
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> nilpotent_invariants(const Algebra& A) {
    PeriodicityProfile prof = operator_profile(A);
    if (prof.kind != PeriodicityProfile::Kind::Nilpotent) throw NotNilpotent("operator is not nilpotent");
    std::vector<Poly2> inv = invariant_factors(operator_of(A).m2());
    std::vector<int> s;
    for (const Poly2& f : inv) {
        if (f.term_count() != 1) throw UnexpectedFactorShape("nilpotent invariant factor is not a power of X");
        s.push_back(f.degree());
    }
    std::sort(s.rbegin(), s.rend());
    return s;
}

namespace {

// Matrix of M restricted to the span of `basis` (columns in that basis).
BitMatrix restrict_to(const BitMatrix& M, const std::vector<BitVec>& basis) {
    int n = M.rows();
    int k = static_cast<int>(basis.size());
    BitMatrix B(n, k);
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < n; ++i)
            if (basis[static_cast<std::size_t>(j)].test(i)) B.set(i, j);
    BitMatrix R(k, k);
    for (int j = 0; j < k; ++j) {
        BitVec img = M.apply(basis[static_cast<std::size_t>(j)]);
        auto c = B.solve(img);
        if (!c) throw InvariantViolation("subspace is not stable under the operator");
        for (int i = 0; i < k; ++i)
            if (c->test(i)) R.set(i, j);
    }
    return R;
}

}  // namespace

CanonicalInvariants periodic_invariants(const Algebra& A) {
    if (A.field.p() != 1) throw InvalidInput("periodic invariants are computed over F_2 only");
    PeriodicityProfile prof = operator_profile(A);
    if (prof.kind != PeriodicityProfile::Kind::UltimatelyPeriodic)
        throw NotPeriodic("operator is not ultimately periodic with a nonzero period part");
    CanonicalInvariants ci;
    std::uint64_t p = prof.p;
    ci.r = 0;
    ci.q = p;
    while (ci.q % 2 == 0) {
        ci.q /= 2;
        ++ci.r;
    }
    EvolutionOperator op = operator_of(A);
    const BitMatrix& M = op.m2();
    int n = M.rows();
    // A = ker M^n (+) ker(M^p + I); (V^q - id)^{2^r} = V^p - id in char 2.
    BitMatrix mn = M.pow(static_cast<std::uint64_t>(prof.n));
    BitMatrix mp = M.pow(p) + BitMatrix::identity(n);
    std::vector<BitVec> nil_basis = mn.kernel_basis();
    std::vector<BitVec> per_basis = mp.kernel_basis();
    if (static_cast<int>(nil_basis.size() + per_basis.size()) != n)
        throw InvariantViolation("kernel split does not cover the space");
    if (!nil_basis.empty()) {
        std::vector<Poly2> inv = invariant_factors(restrict_to(M, nil_basis));
        for (const Poly2& f : inv) {
            if (f.term_count() != 1) throw UnexpectedFactorShape("nilpotent summand has a non-X-power invariant factor");
            ci.s.push_back(f.degree());
        }
        std::sort(ci.s.rbegin(), ci.s.rend());
    }
    std::vector<Poly2> pinv = invariant_factors(restrict_to(M, per_basis));
    Poly2 base = Poly2::monomial(static_cast<int>(ci.q)) + Poly2::one();  // X^q + 1
    for (const Poly2& f : pinv) {
        // f must equal (X^q + 1)^{2^t}.
        int e = 0;
        Poly2 rest = f;
        while (base.divides(rest)) {
            rest = rest / base;
            ++e;
        }
        if (!rest.is_one() || e == 0 || (e & (e - 1)) != 0)
            throw UnexpectedFactorShape("periodic invariant factor is not (X^q+1)^(2^t): " + f.to_string());
        int t = 0;
        while ((1 << t) < e) ++t;
        ci.t.push_back(t);
    }
    std::sort(ci.t.rbegin(), ci.t.rend());
    // Dimension identity and t_1 = r.
    long total = 0;
    for (int si : ci.s) total += si;
    for (int ti : ci.t) total += (long{1} << ti) * static_cast<long>(ci.q);
    if (total != A.dim) throw InvariantViolation("canonical invariants do not account for the dimension");
    if (!ci.t.empty() && ci.t.front() != ci.r) throw InvariantViolation("largest periodic exponent does not match the period");
    return ci;
}

Algebra build_A_s(const std::vector<int>& s) {
    if (s.empty()) throw ShapeError("A(s) requires at least one chain");
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 1) throw ShapeError("chain lengths must be >= 1");
        if (i > 0 && s[i] > s[i - 1]) throw ShapeError("s must be weakly decreasing");
    }
    int dim = std::accumulate(s.begin(), s.end(), 0);
    Algebra A{Field(1), dim, std::vector<Vec>(static_cast<std::size_t>(dim), Vec(static_cast<std::size_t>(dim), 0)),
              std::nullopt, std::nullopt};
    int base = 0;
    for (int len : s) {
        for (int j = 0; j + 1 < len; ++j) A.squares[static_cast<std::size_t>(base + j)][static_cast<std::size_t>(base + j + 1)] = 1;
        base += len;
    }
    return A;
}

Algebra build_A_st(const std::vector<int>& s, const std::vector<int>& t, std::uint64_t q, const Field& field) {
    if (q < 1 || q % 2 == 0) throw ShapeError("q must be odd and >= 1");
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 1) throw ShapeError("chain lengths must be >= 1");
        if (i > 0 && s[i] > s[i - 1]) throw ShapeError("s must be weakly decreasing");
    }
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] < 0) throw ShapeError("periodic exponents must be >= 0");
        if (i > 0 && t[i] > t[i - 1]) throw ShapeError("t must be weakly decreasing");
    }
    if (t.empty()) throw ShapeError("A_(s,t) requires at least one periodic block");
    long dim = std::accumulate(s.begin(), s.end(), 0L);
    for (int ti : t) {
        long len = (long{1} << ti) * static_cast<long>(q);
        if (field.p() != 1 && len % field.p() != 0)
            throw FieldIncompatible("cycle length is not a multiple of the field degree");
        dim += len;
    }
    if (dim > 64) throw ShapeError("dimension exceeds the supported cap of 64");
    Algebra A{field, static_cast<int>(dim),
              std::vector<Vec>(static_cast<std::size_t>(dim), Vec(static_cast<std::size_t>(dim), 0)), std::nullopt,
              std::nullopt};
    int base = 0;
    for (int len : s) {
        for (int j = 0; j + 1 < len; ++j) A.squares[static_cast<std::size_t>(base + j)][static_cast<std::size_t>(base + j + 1)] = 1;
        base += len;
    }
    for (int ti : t) {
        int len = static_cast<int>((std::uint64_t{1} << ti) * q);
        for (int j = 0; j < len; ++j)
            A.squares[static_cast<std::size_t>(base + j)][static_cast<std::size_t>(base + (j + 1) % len)] = 1;
        base += len;
    }
    return A;
}

Algebra build_companion(const PolyF& P) {
    if (P.degree() < 1) throw ShapeError("companion algebra needs degree >= 1");
    if (!P.is_monic()) throw ShapeError("companion polynomial must be monic");
    int d = P.degree();
    Algebra A{P.field(), d, std::vector<Vec>(static_cast<std::size_t>(d), Vec(static_cast<std::size_t>(d), 0)),
              std::nullopt, std::nullopt};
    for (int i = 0; i + 1 < d; ++i) A.squares[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + 1)] = 1;
    // V(e_d) = sum_k c_k e_{k+1} realizes V^d = sum c_k V^k on the chain.
    for (int k = 0; k < d; ++k) A.squares[static_cast<std::size_t>(d - 1)][static_cast<std::size_t>(k)] = P.coeff(k);
    return A;
}

Algebra build_companion(const Poly2& P, const Field& field) {
    return build_companion(PolyF::from_poly2(field, P));
}

Algebra build_cycle_tail(std::uint64_t p, int n) {
    if (p < 1) throw ShapeError("cycle length must be >= 1");
    if (n < 0) throw ShapeError("tail length must be >= 0");
    long dim = static_cast<long>(p) + n;
    if (dim > 64) throw ShapeError("dimension exceeds the supported cap of 64");
    Algebra A{Field(1), static_cast<int>(dim),
              std::vector<Vec>(static_cast<std::size_t>(dim), Vec(static_cast<std::size_t>(dim), 0)), std::nullopt,
              std::nullopt};
    int pc = static_cast<int>(p);
    for (int j = 0; j < pc; ++j) A.squares[static_cast<std::size_t>(j)][static_cast<std::size_t>((j + 1) % pc)] = 1;
    for (int j = 0; j < n; ++j) {
        int from = pc + j;
        int to = j + 1 < n ? pc + j + 1 : 0;  // last tail element feeds the cycle
        A.squares[static_cast<std::size_t>(from)][static_cast<std::size_t>(to)] = 1;
    }
    return A;
}

Algebra build_train_algebra(const std::vector<int>& v, const std::vector<std::pair<Poly2, int>>& selection,
                            const Field& field) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 1) throw ShapeError("chain lengths must be >= 1");
        if (i > 0 && v[i] > v[i - 1]) throw ShapeError("v must be weakly decreasing");
    }
    long dim = std::accumulate(v.begin(), v.end(), 0L);
    for (const auto& [D, mult] : selection) {
        if (D.degree() < 1 || mult < 1) throw ShapeError("divisors need degree >= 1 and multiplicity >= 1");
        if (field.p() != 1) {
            if (D.term_count() < 2 || striction(D).sigma % field.p() != 0)
                throw FieldIncompatible("divisor striction is not a multiple of the field degree");
        }
        dim += static_cast<long>(D.degree()) * mult;
    }
    if (dim < 1) throw ShapeError("empty train algebra");
    if (dim > 64) throw ShapeError("dimension exceeds the supported cap of 64");
    Algebra A{field, static_cast<int>(dim),
              std::vector<Vec>(static_cast<std::size_t>(dim), Vec(static_cast<std::size_t>(dim), 0)), std::nullopt,
              std::nullopt};
    int base = 0;
    for (int len : v) {
        for (int j = 0; j + 1 < len; ++j) A.squares[static_cast<std::size_t>(base + j)][static_cast<std::size_t>(base + j + 1)] = 1;
        base += len;
    }
    for (const auto& [D, mult] : selection) {
        int d = D.degree();
        for (int b = 0; b < mult; ++b) {
            for (int i = 0; i + 1 < d; ++i) A.squares[static_cast<std::size_t>(base + i)][static_cast<std::size_t>(base + i + 1)] = 1;
            for (int k = 0; k < d; ++k)
                if (D.test(k)) A.squares[static_cast<std::size_t>(base + d - 1)][static_cast<std::size_t>(base + k)] = 1;
            base += d;
        }
    }
    return A;
}

SemiIso semi_isomorphic(const Algebra& A, const Algebra& B) {
    if (!(A.field == B.field)) throw FieldMismatch("algebras live over different fields");
    if (A.dim != B.dim) throw DimensionMismatch("algebras have different dimensions");
    bool similar = invariant_factors(operator_of(A).m2()) == invariant_factors(operator_of(B).m2());
    if (A.field.p() == 1) return similar ? SemiIso::Yes : SemiIso::No;
    return similar ? SemiIso::NecessaryConditionsPass : SemiIso::NecessaryConditionsFail;
}

}  // namespace evo
