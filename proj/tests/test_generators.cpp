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

#include "evo/errors.hpp"
#include "evo/generators.hpp"

using namespace evo;

TEST_CASE("cellular automaton rings") {
    Algebra A = rule90(5);
    CHECK(A.dim == 5);
    CHECK(A.field.p() == 1);
    CHECK(A.squares[0] == Vec{0, 1, 0, 0, 1});  // e1^2 = e2 + e5
    CHECK(A.squares[2] == Vec{0, 1, 0, 1, 0});  // e3^2 = e2 + e4
    CHECK(A.has_natural_basis());

    Algebra B = rule150(3);
    CHECK(B.squares[0] == Vec{1, 1, 1});
    CHECK(B.squares[1] == Vec{1, 1, 1});

    CHECK_THROWS_AS(rule90(2), SizeTooSmall);
    CHECK_THROWS_AS(rule150(2), SizeTooSmall);
}

TEST_CASE("transition algebras of dynamical systems") {
    DynSys D{3, {1, 2, 0}};  // 3-cycle
    Algebra A = dynsys_algebra(D);
    CHECK(A.squares[0] == Vec{0, 1, 0});
    CHECK(A.squares[1] == Vec{0, 0, 1});
    CHECK(A.squares[2] == Vec{1, 0, 0});
    PeriodicityProfile p = dynsys_profile(D);
    CHECK(p.n == 0);
    CHECK(p.p == 3);

    DynSys bad{2, {0, 5}};
    CHECK_THROWS_AS(dynsys_algebra(bad), InvalidInput);
}

TEST_CASE("quadratic maps") {
    DynSys q13 = quadratic_map(2, 13);
    CHECK(q13.size == 13);
    CHECK(q13.f[0] == 2);
    CHECK(q13.f[5] == 1);   // 27 mod 13
    CHECK(q13.f[12] == 3);  // 146 mod 13

    DynSys q2 = quadratic_map(0, 2);  // identity on {0, 1}
    PeriodicityProfile p2 = dynsys_profile(q2);
    CHECK(p2.n == 0);
    CHECK(p2.p == 1);

    DynSys q3 = quadratic_map(1, 3);  // 0 -> 1 -> 2 -> 2
    PeriodicityProfile p3 = dynsys_profile(q3);
    CHECK(p3.n == 2);
    CHECK(p3.p == 1);

    CHECK_THROWS_AS(quadratic_map(0, 0), InvalidInput);
}

TEST_CASE("graph profile equals transition-algebra profile") {
    std::mt19937_64 rng(2025);
    for (int it = 0; it < 100; ++it) {
        int n = 2 + static_cast<int>(rng() % 19);
        DynSys D{n, {}};
        for (int i = 0; i < n; ++i) D.f.push_back(static_cast<int>(rng() % n));
        PeriodicityProfile combinatorial = dynsys_profile(D);
        PeriodicityProfile algebraic = operator_profile(dynsys_algebra(D));
        CHECK(combinatorial.kind == algebraic.kind);
        CHECK(combinatorial.n == algebraic.n);
        if (combinatorial.kind == PeriodicityProfile::Kind::UltimatelyPeriodic)
            CHECK(combinatorial.p == algebraic.p);
    }
}

TEST_CASE("random algebras are deterministic in the seed") {
    Field F(2);
    Algebra a = random_algebra(F, 5, 77, RandomKind::Evolution);
    Algebra b = random_algebra(F, 5, 77, RandomKind::Evolution);
    CHECK(a == b);
    Algebra c = random_algebra(F, 5, 78, RandomKind::Evolution);
    CHECK_FALSE(a == c);

    Algebra g = random_algebra(F, 4, 9, RandomKind::General);
    Algebra h = random_algebra(F, 4, 9, RandomKind::General);
    CHECK(g == h);
    g.validate();
    CHECK(g.table.has_value());
    a.validate();
    CHECK(a.has_natural_basis());
}

TEST_CASE("evolution nilpotency criterion on fixed examples") {
    CHECK(evolution_nilpotency_check(rule90(4)));
    CHECK(evolution_nilpotency_check(rule90(8)));
    CHECK_FALSE(evolution_nilpotency_check(rule90(3)));
    CHECK_FALSE(evolution_nilpotency_check(rule90(5)));
    CHECK_FALSE(evolution_nilpotency_check(rule150(4)));

    // Requires a natural basis.
    Algebra mixed{Field(1), 2, {{0, 0}, {0, 0}},
                  std::vector<std::vector<Vec>>{{{0, 0}, {1, 0}}, {{1, 0}, {0, 0}}}, std::nullopt};
    mixed.validate();
    CHECK_THROWS_AS(evolution_nilpotency_check(mixed), NotEvolutionAlgebra);
}

TEST_CASE("nilpotency criterion agrees with the profile over F_4") {
    std::mt19937_64 rng(606);
    int nilpotent_seen = 0;
    for (int it = 0; it < 100; ++it) {
        int dim = 1 + static_cast<int>(rng() % 4);
        Algebra A = random_algebra(Field(2), dim, rng(), RandomKind::Evolution);
        bool by_hadamard = evolution_nilpotency_check(A);
        bool by_profile = operator_profile(A).kind == PeriodicityProfile::Kind::Nilpotent;
        CHECK(by_hadamard == by_profile);
        if (by_profile) ++nilpotent_seen;
    }
    CHECK(nilpotent_seen > 0);  // the sample exercises both outcomes
}

TEST_CASE("field degree divides the period over extension fields") {
    std::mt19937_64 rng(707);
    for (int q : {2, 3}) {
        Field F(q);
        for (int it = 0; it < 50; ++it) {
            int dim = 1 + static_cast<int>(rng() % 4);
            Algebra A = random_algebra(F, dim, rng(), RandomKind::Evolution);
            PeriodicityProfile p = operator_profile(A);
            if (p.kind == PeriodicityProfile::Kind::UltimatelyPeriodic) CHECK(p.p % q == 0);
        }
    }
}
