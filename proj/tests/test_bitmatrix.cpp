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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "evo/bitmatrix.hpp"

using namespace evo;

namespace {

BitMatrix random_matrix(std::mt19937_64& rng, int n) {
    BitMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (rng() & 1) m.set(i, j);
    return m;
}

Poly2 eval_at(const BitMatrix& M, const Poly2& f) {
    // Returns zero polynomial iff f(M) = 0; encodes nothing else.
    BitMatrix acc(M.rows(), M.cols());
    BitMatrix p = BitMatrix::identity(M.rows());
    for (int k = 0; k <= f.degree(); ++k) {
        if (f.test(k)) acc = acc + p;
        p = p * M;
    }
    return acc.is_zero() ? Poly2::zero() : Poly2::one();
}

}  // namespace

TEST_CASE("bit vector basics") {
    BitVec v(70);
    v.set(0);
    v.set(69);
    CHECK(v.test(0));
    CHECK(v.test(69));
    CHECK_FALSE(v.test(1));
    CHECK(v.popcount() == 2);
    CHECK(v.first_set() == 0);
    v.flip(0);
    CHECK(v.first_set() == 69);
    BitVec w(70);
    w.set(69);
    CHECK((v ^ w).is_zero());
}

TEST_CASE("matrix arithmetic") {
    // Nilpotent single Jordan block of size 3.
    BitMatrix n(3, 3);
    n.set(1, 0);
    n.set(2, 1);
    CHECK_FALSE((n * n).is_zero());
    CHECK((n * n * n).is_zero());
    CHECK(n.pow(3).is_zero());
    CHECK(n.pow(0) == BitMatrix::identity(3));
    CHECK((n + n).is_zero());

    BitVec x(3);
    x.set(0);
    BitVec y = n.apply(x);
    CHECK(y.test(1));
    CHECK(y.popcount() == 1);
}

TEST_CASE("rank, kernel, solve") {
    BitMatrix m(3, 3);
    m.set(0, 0);
    m.set(0, 1);
    m.set(1, 1);
    m.set(1, 2);
    m.set(2, 0);
    m.set(2, 2);  // row3 = row1 + row2
    CHECK(m.rank() == 2);
    auto ker = m.kernel_basis();
    REQUIRE(ker.size() == 1);
    CHECK(m.apply(ker[0]).is_zero());
    CHECK(ker[0].popcount() == 3);  // (1,1,1)

    BitVec b(3);
    b.set(0);
    b.set(1);
    b.set(2);  // b = (1,1,1) is in the column span? row1+row2 = row3 => consistent target
    auto sol = m.solve(b);
    if (sol) CHECK(m.apply(*sol) == b);

    BitVec bad(3);
    bad.set(0);  // (1,0,0): rows are dependent so half the targets fail
    auto s2 = m.solve(bad);
    if (s2) CHECK(m.apply(*s2) == bad);
}

TEST_CASE("solve round trip on random systems") {
    std::mt19937_64 rng(2024);
    for (int it = 0; it < 200; ++it) {
        int n = 2 + static_cast<int>(rng() % 12);
        BitMatrix m = random_matrix(rng, n);
        // Build a guaranteed-consistent target from a random x.
        BitVec x(n);
        for (int i = 0; i < n; ++i)
            if (rng() & 1) x.set(i);
        BitVec b = m.apply(x);
        auto sol = m.solve(b);
        REQUIRE(sol.has_value());
        CHECK(m.apply(*sol) == b);
    }
}

TEST_CASE("minimal polynomial examples") {
    CHECK(BitMatrix::identity(4).minimal_polynomial() == Poly2::parse("0b11"));  // X+1
    BitMatrix z(3, 3);
    CHECK(z.minimal_polynomial() == Poly2::x());

    BitMatrix n(3, 3);
    n.set(1, 0);
    n.set(2, 1);
    CHECK(n.minimal_polynomial() == Poly2::parse("0b1000"));  // X^3

    // 2-cycle permutation: min poly X^2 + 1.
    BitMatrix c(2, 2);
    c.set(0, 1);
    c.set(1, 0);
    CHECK(c.minimal_polynomial() == Poly2::parse("0b101"));
}

TEST_CASE("minimal polynomial annihilates and is minimal") {
    std::mt19937_64 rng(5150);
    for (int it = 0; it < 100; ++it) {
        int n = 2 + static_cast<int>(rng() % 8);
        BitMatrix m = random_matrix(rng, n);
        Poly2 mu = m.minimal_polynomial();
        CHECK(mu.degree() >= 1);
        CHECK(mu.degree() <= n);
        CHECK(eval_at(m, mu).is_zero());
        // No proper monic divisor annihilates.
        for (const auto& [f, e] : factor_f2(mu)) {
            CHECK_FALSE(eval_at(m, mu / f).is_zero());
            (void)e;
        }
    }
}

TEST_CASE("linear system solver") {
    LinearSystem sys(3);
    BitVec e1(3), e12(3);
    e1.set(0);
    e12.set(0);
    e12.set(1);
    sys.add_equation(e1, true);        // x0 = 1
    sys.add_equation(e12, false);      // x0 + x1 = 0
    CHECK(sys.solution_space_dim() == 1);  // x2 free
    auto s = sys.solve();
    REQUIRE(s.has_value());
    CHECK(s->test(0));
    CHECK(s->test(1));

    BitVec e2(3);
    e2.set(1);
    sys.add_equation(e2, false);       // contradiction: x1 = 0 vs x1 = 1
    CHECK(sys.solution_space_dim() == -1);
    CHECK_FALSE(sys.solve().has_value());
}
