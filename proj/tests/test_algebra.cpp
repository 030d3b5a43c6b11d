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

#include "evo/algebra.hpp"
#include "evo/errors.hpp"
#include "evo/generators.hpp"

using namespace evo;

namespace {

Vec random_vec(std::mt19937_64& rng, const Field& F, int dim) {
    Vec x(static_cast<std::size_t>(dim));
    for (auto& c : x) c = static_cast<fe>(rng() % F.size());
    return x;
}

}  // namespace

TEST_CASE("rule90 squares table, ring size 3") {
    Algebra A = rule90(3);
    CHECK(A.dim == 3);
    CHECK(A.squares[0] == Vec{0, 1, 1});
    CHECK(A.squares[1] == Vec{1, 0, 1});
    CHECK(A.squares[2] == Vec{1, 1, 0});
    CHECK(A.has_natural_basis());
    A.validate();
}

TEST_CASE("evolution application") {
    Algebra A = rule90(3);
    // V(e1 + e2) = e1^2 + e2^2 = (e2+e3) + (e1+e3) = e1 + e2.
    CHECK(evolution_apply(A, {1, 1, 0}) == Vec{1, 1, 0});
    CHECK(evolution_apply(A, {0, 0, 0}) == Vec{0, 0, 0});

    // Over F_4: V(alpha e1) = alpha^2 e1^2.
    Field f4(2);
    Algebra B{f4, 2, {{0, 1}, {0, 0}}, std::nullopt, std::nullopt};
    B.validate();
    CHECK(evolution_apply(B, {2, 0}) == Vec{0, 3});  // alpha^2 = alpha + 1 = 3
}

TEST_CASE("multiply requires a table off the diagonal") {
    Algebra A = rule90(3);
    CHECK(multiply(A, {1, 0, 0}, {1, 0, 0}) == A.squares[0]);
    CHECK_THROWS_AS(multiply(A, {1, 0, 0}, {0, 1, 0}), InvalidInput);
}

TEST_CASE("validation rejects malformed algebras") {
    Algebra bad{Field(1), 2, {{1, 0}}, std::nullopt, std::nullopt};
    CHECK_THROWS_AS(bad.validate(), InvariantViolation);  // wrong squares count

    Algebra range{Field(1), 1, {{5}}, std::nullopt, std::nullopt};
    CHECK_THROWS_AS(range.validate(), InvariantViolation);  // coordinate out of field

    // Asymmetric table.
    Algebra asym{Field(1), 2, {{0, 0}, {0, 0}},
                 std::vector<std::vector<Vec>>{{{0, 0}, {1, 0}}, {{0, 1}, {0, 0}}}, std::nullopt};
    CHECK_THROWS_AS(asym.validate(), InvariantViolation);

    // Table diagonal disagreeing with squares.
    Algebra diag{Field(1), 1, {{0}}, std::vector<std::vector<Vec>>{{{1}}}, std::nullopt};
    CHECK_THROWS_AS(diag.validate(), InvariantViolation);
}

TEST_CASE("restricted scalars expansion round trip") {
    Field f8(3);
    std::mt19937_64 rng(31);
    for (int it = 0; it < 100; ++it) {
        Vec x = random_vec(rng, f8, 4);
        BitVec b = expand_f2(f8, x);
        CHECK(b.size() == 12);
        CHECK(contract_f2(f8, 4, b) == x);
    }
    // Bit layout: coordinate i, basis power a -> bit i*p + a.
    Vec y{0, 5, 0, 0};  // 5 = 1 + X^2
    BitVec b = expand_f2(f8, y);
    CHECK(b.test(3));
    CHECK(b.test(5));
    CHECK(b.popcount() == 2);
}

TEST_CASE("operator matrix agrees with direct application") {
    std::mt19937_64 rng(77);
    for (int it = 0; it < 500; ++it) {
        int p = 1 + static_cast<int>(rng() % 3);
        Field F(p);
        int dim = 1 + static_cast<int>(rng() % 5);
        Algebra A = random_algebra(F, dim, rng(), RandomKind::Evolution);
        EvolutionOperator op = operator_of(A);
        Vec x = random_vec(rng, F, dim);
        Vec via_alg = evolution_apply(A, x);
        Vec via_m2 = contract_f2(F, dim, op.m2().apply(expand_f2(F, x)));
        CHECK(via_alg == via_m2);
    }
}

TEST_CASE("V is additive and semilinear") {
    std::mt19937_64 rng(171);
    for (int it = 0; it < 200; ++it) {
        int p = 1 + static_cast<int>(rng() % 3);
        Field F(p);
        int dim = 1 + static_cast<int>(rng() % 5);
        Algebra A = random_algebra(F, dim, rng(), RandomKind::Evolution);
        Vec x = random_vec(rng, F, dim);
        Vec y = random_vec(rng, F, dim);
        // Additivity: V(x + y) = V(x) + V(y).
        Vec xy(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) xy[i] = F.add(x[i], y[i]);
        Vec lhs = evolution_apply(A, xy);
        Vec vx = evolution_apply(A, x), vy = evolution_apply(A, y);
        Vec rhs(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) rhs[i] = F.add(vx[i], vy[i]);
        CHECK(lhs == rhs);
        // Semilinearity: V(lambda x) = lambda^2 V(x).
        fe lam = static_cast<fe>(rng() % F.size());
        Vec lx(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) lx[i] = F.mul(lam, x[i]);
        Vec vlx = evolution_apply(A, lx);
        fe lam2 = F.mul(lam, lam);
        for (std::size_t i = 0; i < x.size(); ++i) CHECK(vlx[i] == F.mul(lam2, vx[i]));
    }
}

TEST_CASE("V of an evolution algebra is independent of off-diagonal products") {
    // Same squares, one algebra with a nonzero off-diagonal table: V agrees.
    Algebra plain = rule90(3);
    Algebra tabled = plain;
    std::vector<std::vector<Vec>> t(3, std::vector<Vec>(3, Vec{0, 0, 0}));
    for (int i = 0; i < 3; ++i) t[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = plain.squares[static_cast<std::size_t>(i)];
    t[0][1] = t[1][0] = {1, 1, 1};
    tabled.table = t;
    tabled.validate();
    std::mt19937_64 rng(8);
    for (int it = 0; it < 50; ++it) {
        Vec x = random_vec(rng, plain.field, 3);
        CHECK(evolution_apply(plain, x) == evolution_apply(tabled, x));
    }
    CHECK_FALSE(tabled.has_natural_basis());
}

TEST_CASE("hadamard composite matches V^k up to Frobenius on coordinates") {
    // Over F_2 Frobenius is trivial, so the composite is simply M^k.
    Algebra A = rule90(5);
    std::vector<Vec> S = structure_matrix(A);
    for (int k = 1; k <= 6; ++k) {
        std::vector<Vec> H = hadamard_composite(A.field, S, k);
        for (int j = 0; j < A.dim; ++j) {
            Vec ej(static_cast<std::size_t>(A.dim), 0);
            ej[static_cast<std::size_t>(j)] = 1;
            Vec v = ej;
            for (int i = 0; i < k; ++i) v = evolution_apply(A, v);
            for (int i = 0; i < A.dim; ++i)
                CHECK(H[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == v[static_cast<std::size_t>(i)]);
        }
    }
}

TEST_CASE("serialization round trip") {
    Algebra A = rule90(4);
    Algebra B = parse_algebra(serialize_algebra(A));
    CHECK(A == B);

    // With weight and table.
    Field F(2);
    Algebra W{F, 1, {{1}}, std::vector<std::vector<Vec>>{{{1}}}, Vec{1}};
    W.validate();
    Algebra W2 = parse_algebra(serialize_algebra(W));
    CHECK(W == W2);
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_algebra("not json"), ParseError);
    CHECK_THROWS_AS(parse_algebra("{}"), ParseError);                       // missing fields
    CHECK_THROWS_AS(parse_algebra(R"({"field":{"p":1},"dim":2})"), ParseError);  // missing squares
    // Structurally valid JSON, invalid algebra (coordinate out of range).
    CHECK_THROWS_AS(parse_algebra(R"({"field":{"p":1},"dim":1,"squares":[[7]]})"), InvariantViolation);
}
