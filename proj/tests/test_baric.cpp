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

#include "evo/baric.hpp"
#include "evo/errors.hpp"

using namespace evo;

namespace {

Vec iterate(const Algebra& A, Vec x, int k) {
    for (int i = 0; i < k; ++i) x = evolution_apply(A, x);
    return x;
}

/// Weighted algebra in a basis (e, z_1, ..., z_{d-1}): e idempotent of
/// weight 1, kernel squares strictly triangular (so V is nilpotent on the
/// kernel), every other product a random kernel element. The weight
/// morphism property holds by construction since all those products have
/// weight 0 = 0 * 0 (or 1 * 0).
Algebra make_random_weighted(std::mt19937_64& rng, const Field& F, int dim) {
    Algebra A{F, dim, {}, std::nullopt, std::nullopt};
    auto rand_kernel_tail = [&](int from) {
        // Random element of span(z_from, ..., z_{d-1}).
        Vec v(static_cast<std::size_t>(dim), 0);
        for (int k = from; k < dim; ++k) v[static_cast<std::size_t>(k)] = static_cast<fe>(rng() % F.size());
        return v;
    };
    std::vector<std::vector<Vec>> table(
        static_cast<std::size_t>(dim), std::vector<Vec>(static_cast<std::size_t>(dim), Vec(static_cast<std::size_t>(dim), 0)));
    table[0][0][0] = 1;  // e^2 = e
    for (int i = 1; i < dim; ++i) table[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = rand_kernel_tail(i + 1);
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j)
            table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                table[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = rand_kernel_tail(1);
    A.squares.resize(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i) A.squares[static_cast<std::size_t>(i)] = table[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
    A.table = std::move(table);
    Vec w(static_cast<std::size_t>(dim), 0);
    w[0] = 1;
    A.weight = w;
    A.validate();
    return A;
}

}  // namespace

TEST_CASE("weighted canonical form A((1))") {
    Algebra W = build_weighted_As({1}, Field(1));
    CHECK(W.dim == 2);
    BaricStructure B = check_weight(W);
    CHECK(weight_of(B, {1, 0}) == 1);
    CHECK(weight_of(B, {0, 1}) == 0);
    CHECK(weight_of(B, {1, 1}) == 1);
    REQUIRE(B.kernel_basis.size() == 1);
    CHECK(weight_of(B, B.kernel_basis[0]) == 0);
    CHECK(weight_of(B, B.unit_rep) == 1);

    auto [nu, e] = baric_quasi_constant(B);
    CHECK(nu == 1);
    CHECK(evolution_apply(W, e) == e);  // e is idempotent
    CHECK(bernstein_profile(B) == std::make_pair(1, std::uint64_t{1}));

    WeightedTrainIdentity id = weighted_train_identity(B);
    CHECK(id.degree == 2);
    CHECK(id.alpha == std::vector<fe>{0, 1});
    CHECK(holds_weighted_identity(B, id));
    // A perturbed coefficient breaks the identity.
    WeightedTrainIdentity wrong = id;
    wrong.alpha[0] = 1;
    CHECK_FALSE(holds_weighted_identity(B, wrong));
}

TEST_CASE("one-dimensional weighted line is degenerate") {
    Algebra L{Field(2), 1, {{1}}, std::vector<std::vector<Vec>>{{{1}}}, Vec{1}};
    L.validate();
    BaricStructure B = check_weight(L);
    CHECK(B.kernel_basis.empty());
    auto [nu, e] = baric_quasi_constant(B);
    CHECK(nu == 0);
    CHECK(e == Vec{1});
    CHECK(bernstein_profile(B) == std::make_pair(0, std::uint64_t{1}));
    WeightedTrainIdentity id = weighted_train_identity(B);
    CHECK(id.degree == 1);
    CHECK(id.alpha == std::vector<fe>{1});
    CHECK(holds_weighted_identity(B, id));
}

TEST_CASE("weight validation failures") {
    // omega(e2)^2 = 1 but omega(e2^2) = 0: witness indices (2, 2). The
    // product e1 e2 = e1 keeps the earlier pairs consistent.
    Algebra bad{Field(1), 2, {{1, 0}, {0, 0}},
                std::vector<std::vector<Vec>>{{{1, 0}, {1, 0}}, {{1, 0}, {0, 0}}}, Vec{1, 1}};
    try {
        bad.validate();
        FAIL("expected NotAMorphism");
    } catch (const NotAMorphism& e) {
        CHECK(e.witness_i == 2);
        CHECK(e.witness_j == 2);
    }

    Algebra zero_w{Field(1), 1, {{1}}, std::vector<std::vector<Vec>>{{{1}}}, Vec{0}};
    CHECK_THROWS_AS(zero_w.validate(), ZeroWeight);

    // Weight without the full table cannot be checked.
    Algebra no_table{Field(1), 1, {{1}}, std::nullopt, Vec{1}};
    CHECK_THROWS_AS(no_table.validate(), InvariantViolation);
}

TEST_CASE("idempotent in the kernel blocks the quasi-constant theorem") {
    // e1 idempotent of weight 1, e2 idempotent of weight 0.
    Algebra A{Field(1), 2, {{1, 0}, {0, 1}},
              std::vector<std::vector<Vec>>{{{1, 0}, {0, 0}}, {{0, 0}, {0, 1}}}, Vec{1, 0}};
    A.validate();
    BaricStructure B = check_weight(A);
    CHECK_THROWS_AS(baric_quasi_constant(B), KernelNotNilplenary);
}

TEST_CASE("weighted equivalence theorems on random algebras") {
    std::mt19937_64 rng(1234);
    for (int it = 0; it < 100; ++it) {
        int p = 1 + static_cast<int>(rng() % 2);
        Field F(p);
        int dim = 1 + static_cast<int>(rng() % 5);
        Algebra A = make_random_weighted(rng, F, dim);
        BaricStructure B = check_weight(A);
        auto [nu, e] = baric_quasi_constant(B);
        CHECK(nu <= dim - 1);
        // e is idempotent and has weight 1.
        CHECK(evolution_apply(A, e) == e);
        CHECK(weight_of(B, e) == 1);

        // Quasi-constant identity: V^nu(x) = omega(x)^{2^nu} e for all sampled x.
        for (int s = 0; s < 10; ++s) {
            Vec x(static_cast<std::size_t>(dim));
            for (auto& c : x) c = static_cast<fe>(rng() % F.size());
            fe w = weight_of(B, x);
            fe wpow = F.pow(w, std::uint64_t{1} << nu);
            Vec expect(e.size());
            for (std::size_t i = 0; i < e.size(); ++i) expect[i] = F.mul(wpow, e[i]);
            CHECK(iterate(A, x, nu) == expect);
        }

        // Bernstein profile and minimal weighted train identity.
        CHECK(bernstein_profile(B) == std::make_pair(nu, std::uint64_t{1}));
        WeightedTrainIdentity id = weighted_train_identity(B);
        CHECK(id.degree == nu + 1);
        REQUIRE(static_cast<int>(id.alpha.size()) == nu + 1);
        CHECK(id.alpha[static_cast<std::size_t>(nu)] == 1);
        CHECK(holds_weighted_identity(B, id));
    }
}

TEST_CASE("the idempotent does not depend on the unit representative") {
    std::mt19937_64 rng(4321);
    for (int it = 0; it < 30; ++it) {
        Field F(1 + static_cast<int>(rng() % 2));
        Algebra A = make_random_weighted(rng, F, 4);
        BaricStructure B = check_weight(A);
        auto [nu, e] = baric_quasi_constant(B);
        // Any other weight-1 element maps to the same idempotent under V^nu.
        for (const Vec& z : B.kernel_basis) {
            Vec u = B.unit_rep;
            for (std::size_t i = 0; i < u.size(); ++i) u[i] = F.add(u[i], z[i]);
            CHECK(weight_of(B, u) == 1);
            CHECK(iterate(A, u, nu) == e);
        }
    }
}

TEST_CASE("weighted canonical forms over several fields") {
    for (int p : {1, 2, 3}) {
        Field F(p);
        for (std::vector<int> s : {std::vector<int>{1}, {2}, {2, 1}, {3, 2}}) {
            Algebra W = build_weighted_As(s, F);
            BaricStructure B = check_weight(W);
            auto [nu, e] = baric_quasi_constant(B);
            CHECK(nu == s.front());  // longest kernel chain
            CHECK(bernstein_profile(B).first == s.front());
            WeightedTrainIdentity id = weighted_train_identity(B);
            CHECK(id.degree == s.front() + 1);
            CHECK(holds_weighted_identity(B, id));
        }
    }
}
