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

#include "evo/dynamics.hpp"

#include <map>
#include <numeric>

#include "evo/errors.hpp"

namespace evo {

OrbitReport orbit(const Algebra& A, const Vec& x) {
    OrbitReport r;
    std::map<Vec, int> seen;
    Vec cur = x;
    int k = 0;
    while (true) {
        auto it = seen.find(cur);
        if (it != seen.end()) {
            r.preperiod = it->second;
            r.period = static_cast<std::uint64_t>(k - it->second);
            r.entry_point = r.orbit[static_cast<std::size_t>(it->second)];
            return r;
        }
        seen.emplace(cur, k);
        r.orbit.push_back(cur);
        cur = evolution_apply(A, cur);
        ++k;
    }
}

Vec plenary_power(const Algebra& A, const Vec& x, int n) {
    if (n < 1) throw InvalidInput("plenary power index must be >= 1");
    Vec cur = x;
    for (int i = 1; i < n; ++i) cur = evolution_apply(A, cur);
    return cur;
}

PeriodicityProfile operator_profile(const EvolutionOperator& op) {
    Poly2 mu = op.m2().minimal_polynomial();
    PeriodicityProfile prof;
    int v = std::max(mu.valuation(), 0);
    Poly2 g = mu / Poly2::monomial(v);
    if (g.is_one()) {
        prof.kind = PeriodicityProfile::Kind::Nilpotent;
        prof.n = v;
        return prof;
    }
    prof.kind = PeriodicityProfile::Kind::UltimatelyPeriodic;
    prof.n = v;
    prof.p = order_mod(g);
    return prof;
}

PeriodicityProfile operator_profile(const Algebra& A) { return operator_profile(operator_of(A)); }

PeriodicityProfile operator_profile_bruteforce(const Algebra& A) {
    EvolutionOperator op = operator_of(A);
    const BitMatrix& m = op.m2();
    std::map<std::vector<std::vector<std::uint64_t>>, int> seen;
    auto key = [](const BitMatrix& x) {
        std::vector<std::vector<std::uint64_t>> k;
        for (int i = 0; i < x.rows(); ++i) k.push_back(x.row(i).words());
        return k;
    };
    BitMatrix cur = BitMatrix::identity(m.rows());
    int k = 0;
    while (true) {
        auto it = seen.find(key(cur));
        if (it != seen.end()) {
            PeriodicityProfile prof;
            int n = it->second;
            std::uint64_t p = static_cast<std::uint64_t>(k - it->second);
            if (p == 1 && cur.is_zero()) {
                prof.kind = PeriodicityProfile::Kind::Nilpotent;
                prof.n = n;
            } else {
                prof.kind = PeriodicityProfile::Kind::UltimatelyPeriodic;
                prof.n = n;
                prof.p = p;
            }
            return prof;
        }
        seen.emplace(key(cur), k);
        cur = cur * m;
        ++k;
    }
}

ElementProfile element_profile(const Algebra& A, const Vec& x) {
    OrbitReport o = orbit(A, x);
    PeriodicityProfile prof = operator_profile(A);
    ElementProfile e;
    e.m = o.preperiod;
    e.d = o.period;
    int n_bound = prof.n;
    std::uint64_t p_bound = prof.kind == PeriodicityProfile::Kind::Nilpotent ? 1 : prof.p;
    e.m_within_bound = e.m <= n_bound || prof.kind == PeriodicityProfile::Kind::Nilpotent;
    e.d_divides_period = p_bound % e.d == 0;
    if (prof.kind == PeriodicityProfile::Kind::Nilpotent) {
        e.m_within_bound = e.m <= prof.n;
        e.d_divides_period = e.d == 1;
    }
    return e;
}

std::pair<Vec, Vec> element_decomposition(const Algebra& A, const Vec& x) {
    EvolutionOperator op = operator_of(A);
    ElementProfile ep = element_profile(A, x);
    const BitMatrix& M = op.m2();
    int n = M.rows();
    BitVec xb = expand_f2(A.field, x);
    // Find a with (M^d + I) a = 0 and M^m (x + a) = 0; then b = x + a.
    BitMatrix md = M.pow(ep.d) + BitMatrix::identity(n);
    BitMatrix mm = M.pow(static_cast<std::uint64_t>(ep.m));
    BitMatrix sys(2 * n, n);
    BitVec rhs(2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            sys.set(i, j, md.get(i, j));
            sys.set(n + i, j, mm.get(i, j));
        }
    }
    BitVec mx = mm.apply(xb);
    for (int i = 0; i < n; ++i) rhs.set(n + i, mx.test(i));
    auto sol = sys.solve(rhs);
    if (!sol) throw NotPeriodic("element admits no periodic + nilpotent split");
    Vec a = contract_f2(A.field, A.dim, *sol);
    Vec b(static_cast<std::size_t>(A.dim), 0);
    for (int i = 0; i < A.dim; ++i) b[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(i)] ^ a[static_cast<std::size_t>(i)];
    return {a, b};
}

std::optional<std::pair<int, Vec>> quasi_constant_check(const Algebra& A) {
    // Quasi-constant forces F = F_2 and dim 1 with e^2 = e nonzero; then
    // V(x) = e for the single nonzero element, degree 1.
    if (A.field.p() != 1 || A.dim != 1) return std::nullopt;
    if (A.squares[0][0] != 1) return std::nullopt;
    return std::make_pair(1, Vec{1});
}

BitMatrix scalar_matrix(const Field& field, fe alpha, int dim) {
    int p = field.p();
    int n = p * dim;
    BitMatrix m(n, n);
    // Block diagonal: each coordinate block is multiplication by alpha
    // in the polynomial basis.
    for (int a = 0; a < p; ++a) {
        fe img = field.mul(alpha, fe{1} << a);
        for (int b = 0; b < p; ++b) {
            if ((img >> b) & 1) {
                for (int i = 0; i < dim; ++i) m.set(i * p + b, i * p + a);
            }
        }
    }
    return m;
}

TrainPolynomial train_polynomial(const Algebra& A) {
    EvolutionOperator op = operator_of(A);
    const Field& F = A.field;
    int p = F.p();
    int n = op.m2().rows();
    // Powers of M2 and the scalar matrices L_{X^a}, reused across degrees.
    std::vector<BitMatrix> powers{BitMatrix::identity(n)};
    std::vector<BitMatrix> basis_scalars;
    for (int a = 0; a < p; ++a) basis_scalars.push_back(scalar_matrix(F, fe{1} << a, A.dim));
    for (int deg = 1; deg <= n; ++deg) {
        powers.push_back(powers.back() * op.m2());
        // Unknown bit (k*p + a) = coefficient of X^a in alpha_k; equation set:
        // sum_{k,a} bit * (L_{X^a} M2^k) = M2^deg entrywise.
        LinearSystem sys(p * deg);
        std::vector<BitMatrix> contrib;
        for (int k = 0; k < deg; ++k)
            for (int a = 0; a < p; ++a) contrib.push_back(basis_scalars[static_cast<std::size_t>(a)] * powers[static_cast<std::size_t>(k)]);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                BitVec row(p * deg);
                for (int u = 0; u < p * deg; ++u)
                    if (contrib[static_cast<std::size_t>(u)].get(i, j)) row.set(u);
                sys.add_equation(row, powers.back().get(i, j));
            }
        }
        auto sol = sys.solve();
        if (!sol) continue;
        if (sys.solution_space_dim() != 0)
            throw InvariantViolation("annihilating polynomial at minimal degree is not unique");
        std::vector<fe> coeffs(static_cast<std::size_t>(deg + 1), 0);
        coeffs[static_cast<std::size_t>(deg)] = 1;
        for (int k = 0; k < deg; ++k)
            for (int a = 0; a < p; ++a)
                if (sol->test(k * p + a)) coeffs[static_cast<std::size_t>(k)] |= fe{1} << a;
        TrainPolynomial t{PolyF(F, std::move(coeffs)), deg, 0, 0};
        t.valuation = t.T.valuation();
        if (t.T.exponents().size() >= 2) {
            StrictionReport sr = striction(t.T);
            t.sigma = sr.sigma;
            if (t.sigma % p != 0)
                throw InvariantViolation("train polynomial striction incompatible with the coefficient field");
        }
        return t;
    }
    throw InvariantViolation("no annihilating polynomial up to the space dimension");
}

IdentityCheck verify_identity(const Algebra& A, const PolyF& P) {
    if (!(A.field == P.field())) throw FieldMismatch("identity polynomial is over a different field");
    EvolutionOperator op = operator_of(A);
    int n = op.m2().rows();
    int p = A.field.p();
    BitMatrix acc(n, n);
    BitMatrix pw = BitMatrix::identity(n);
    for (int k = 0; k <= P.degree(); ++k) {
        if (k > 0) pw = pw * op.m2();
        fe c = P.coeff(k);
        if (c) acc = acc + scalar_matrix(A.field, c, A.dim) * pw;
    }
    IdentityCheck r;
    if (acc.is_zero()) {
        r.holds = true;
        return r;
    }
    // A nonzero column j = i*p + a means P(V)(X^a e_{i+1}) != 0.
    for (int j = 0; j < n; ++j) {
        bool nonzero = false;
        for (int i = 0; i < n && !nonzero; ++i) nonzero = acc.get(i, j);
        if (nonzero) {
            Vec w(static_cast<std::size_t>(A.dim), 0);
            w[static_cast<std::size_t>(j / p)] = fe{1} << (j % p);
            r.witness = std::move(w);
            break;
        }
    }
    r.holds = false;
    return r;
}

IdentityCheck verify_identity(const Algebra& A, const Poly2& P) {
    return verify_identity(A, PolyF::from_poly2(A.field, P));
}

}  // namespace evo
