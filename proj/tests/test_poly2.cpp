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
#include "evo/poly2.hpp"

using namespace evo;

TEST_CASE("basic arithmetic") {
    Poly2 a = Poly2::parse("0b11");    // X+1
    Poly2 b = Poly2::parse("0b111");   // X^2+X+1
    CHECK(a * b == Poly2::parse("0b1001"));  // X^3+1
    CHECK((a + a).is_zero());
    CHECK(gcd(Poly2::parse("0b1001"), Poly2::parse("0b101")) == a);  // gcd(X^3+1, X^2+1) = X+1

    // X^8+X divided by X^3+X^2+1 leaves no remainder.
    auto [q, r] = Poly2::parse("0b100000010").divmod(Poly2::parse("0b1101"));
    CHECK(r.is_zero());
    CHECK(q * Poly2::parse("0b1101") == Poly2::parse("0b100000010"));

    CHECK_THROWS_AS(a.divmod(Poly2::zero()), DivisionByZero);
    CHECK(Poly2::parse("0b1101").to_string() == "X^3+X^2+1");
    CHECK(Poly2::parse("13") == Poly2::parse("0b1101"));
    CHECK(Poly2::parse("0xd") == Poly2::parse("0b1101"));
}

TEST_CASE("degree, valuation, exponents") {
    Poly2 f = Poly2::parse("0b1010010");
    CHECK(f.degree() == 6);
    CHECK(f.valuation() == 1);
    CHECK(f.exponents() == std::vector<int>{1, 4, 6});
    CHECK(Poly2::zero().degree() == -1);
    CHECK(Poly2::zero().valuation() == -1);
}

TEST_CASE("irreducibility and smallest irreducible") {
    CHECK(is_irreducible(Poly2::parse("0b111")));       // X^2+X+1
    CHECK_FALSE(is_irreducible(Poly2::parse("0b101")));  // (X+1)^2
    CHECK(is_irreducible(Poly2::parse("0b1011")));
    CHECK(is_irreducible(Poly2::parse("0b1101")));
    CHECK_FALSE(is_irreducible(Poly2::parse("0b1111")));  // (X+1)(X^2+X+1)
    CHECK(smallest_irreducible(2) == Poly2::parse("0b111"));
    CHECK(smallest_irreducible(3) == Poly2::parse("0b1011"));
    CHECK(smallest_irreducible(4) == Poly2::parse("0b10011"));
    CHECK(smallest_irreducible(8).degree() == 8);
}

TEST_CASE("factorization examples") {
    // X^12+X^10+X^4+1 = ((X+1)(X^2+X+1)(X^3+X^2+1))^2
    auto fs = factor_f2(Poly2::parse("5137"));
    REQUIRE(fs.size() == 3);
    CHECK(fs[0] == std::make_pair(Poly2::parse("0b11"), 2));
    CHECK(fs[1] == std::make_pair(Poly2::parse("0b111"), 2));
    CHECK(fs[2] == std::make_pair(Poly2::parse("0b1101"), 2));

    // X^6+1 = (X+1)^2 (X^2+X+1)^2
    auto fs2 = factor_f2(Poly2::parse("65"));
    REQUIRE(fs2.size() == 2);
    CHECK(fs2[0] == std::make_pair(Poly2::parse("0b11"), 2));
    CHECK(fs2[1] == std::make_pair(Poly2::parse("0b111"), 2));

    auto fs3 = factor_f2(Poly2::parse("0b100"));  // X^2
    REQUIRE(fs3.size() == 1);
    CHECK(fs3[0] == std::make_pair(Poly2::x(), 2));

    CHECK_THROWS_AS(factor_f2(Poly2::one()), InvalidInput);
}

TEST_CASE("factorization round trip on random polynomials") {
    std::mt19937_64 rng(12345);
    for (int it = 0; it < 1000; ++it) {
        std::uint64_t bits = rng() & ((std::uint64_t{1} << 25) - 1);
        if (bits < 2) continue;
        Poly2 f(bits);
        Poly2 prod = Poly2::one();
        for (const auto& [irr, mult] : factor_f2(f)) {
            CHECK(is_irreducible(irr));
            for (int i = 0; i < mult; ++i) prod = prod * irr;
        }
        CHECK(prod == f);
    }
}

TEST_CASE("multiplicative order") {
    CHECK(order_mod(Poly2::parse("0b11")) == 1);
    CHECK(order_mod(Poly2::parse("0b111")) == 3);
    CHECK(order_mod(Poly2::parse("0b1101")) == 7);
    // (X^2+X+1)^2 has order 3 * 2 = 6: divides X^6+1 but not X^3+1.
    CHECK(order_mod(Poly2::parse("0b111") * Poly2::parse("0b111")) == 6);
    CHECK_THROWS_AS(order_mod(Poly2::parse("0b110")), InvalidInput);

    // Definition check: g divides X^p + 1 at the reported p and at no
    // smaller exponent (brute force for small p).
    for (std::uint64_t bits : {0b111ull, 0b1011ull, 0b1101ull, 0b11001ull, 0b101111ull}) {
        Poly2 g(bits);
        std::uint64_t p = order_mod(g);
        CHECK(g.divides(Poly2::monomial(static_cast<int>(p)) + Poly2::one()));
        for (std::uint64_t k = 1; k < p && k <= 40; ++k)
            CHECK_FALSE(g.divides(Poly2::monomial(static_cast<int>(k)) + Poly2::one()));
    }
}

TEST_CASE("order divides 2^d - 1 for irreducibles") {
    std::mt19937_64 rng(99);
    int found = 0;
    while (found < 40) {
        Poly2 f(rng() & 0xfff);
        if (f.degree() < 1 || !is_irreducible(f) || !f.constant_term()) continue;
        ++found;
        std::uint64_t e = (std::uint64_t{1} << f.degree()) - 1;
        CHECK(e % order_mod(f) == 0);
    }
}

TEST_CASE("cyclotomic products") {
    auto c1 = cyclotomic_product(1);
    REQUIRE(c1.size() == 1);
    CHECK(c1[0].second == Poly2::parse("0b11"));

    auto c3 = cyclotomic_product(3);
    REQUIRE(c3.size() == 2);
    CHECK(c3[0].second == Poly2::parse("0b11"));
    CHECK(c3[1].second == Poly2::parse("0b111"));

    auto c7 = cyclotomic_product(7);
    REQUIRE(c7.size() == 2);
    Poly2 phi7 = c7[1].second;
    CHECK(phi7.degree() == 6);
    auto fs = factor_f2(phi7);
    REQUIRE(fs.size() == 2);
    CHECK(fs[0].first.degree() == 3);
    CHECK(fs[1].first.degree() == 3);

    // Product over divisors reproduces X^b + 1.
    for (std::uint64_t b : {1ull, 3ull, 5ull, 7ull, 9ull, 15ull, 21ull}) {
        Poly2 prod = Poly2::one();
        for (const auto& [d, phi] : cyclotomic_product(b)) prod = prod * phi;
        CHECK(prod == Poly2::monomial(static_cast<int>(b)) + Poly2::one());
    }
    CHECK_THROWS_AS(cyclotomic_product(4), InvalidInput);
}

TEST_CASE("striction") {
    CHECK(striction(Poly2::parse("5137")).sigma == 2);   // X^12+X^10+X^4+1
    CHECK(striction(Poly2::parse("65")).sigma == 6);     // X^6+1
    CHECK(striction(Poly2::parse("4617")).sigma == 3);   // X^12+X^9+X^3+1
    StrictionReport s = striction(Poly2::parse("5137"));
    CHECK(s.exponents == std::vector<int>{0, 4, 10, 12});
    CHECK(s.valuation == 0);
    CHECK(s.degree == 12);
    CHECK_THROWS_AS(striction(Poly2::parse("0b100")), MonomialInput);

    // Invariance under multiplication by X^k.
    std::mt19937_64 rng(7);
    for (int it = 0; it < 200; ++it) {
        Poly2 f(rng() & 0xffff);
        if (f.term_count() < 2) continue;
        int base = striction(f).sigma;
        CHECK(striction(f.shifted(3)).sigma == base);
        CHECK(striction(f.shifted(11)).sigma == base);
    }
}

TEST_CASE("compatible structures: worked examples") {
    Poly2 T1 = Poly2::parse("5137");
    CompatibleStructure c2 = compatible_structure(T1, 2);
    REQUIRE(c2.blocks.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(c2.blocks[i].factor_indices == std::vector<int>{static_cast<int>(i)});
        REQUIRE(c2.blocks[i].chains.size() == 1);
        REQUIRE(c2.blocks[i].chains[0].size() == 1);
        CHECK(c2.blocks[i].chains[0][0] == c2.blocks[i].product);  // chain = {f_i^2}
    }

    CompatibleStructure c1 = compatible_structure(T1, 1);
    REQUIRE(c1.blocks.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        REQUIRE(c1.blocks[i].chains.size() == 1);
        REQUIRE(c1.blocks[i].chains[0].size() == 2);
        CHECK(c1.blocks[i].chains[0][0] == c1.factors[i].first);
        CHECK(c1.blocks[i].chains[0][1] == c1.blocks[i].product);
    }

    Poly2 T3 = Poly2::parse("4617");
    CompatibleStructure c3 = compatible_structure(T3, 3);
    REQUIRE(c3.blocks.size() == 2);
    CHECK(c3.blocks[0].factor_indices == std::vector<int>{0, 1});
    CHECK(c3.blocks[1].factor_indices == std::vector<int>{2});
    REQUIRE(c3.blocks[0].chains.size() == 1);
    REQUIRE(c3.blocks[0].chains[0].size() == 2);
    CHECK(c3.blocks[0].chains[0][0] == Poly2::parse("0b1001"));  // X^3+1
    CHECK(c3.blocks[0].chains[0][1] == Poly2::parse("0b1001") * Poly2::parse("0b1001"));

    CHECK_THROWS_AS(compatible_structure(T1, 4), IncompatibleField);
}

TEST_CASE("compatible structures: every listed divisor complies") {
    for (auto [bits, p] : {std::pair<std::uint64_t, int>{5137, 2}, {5137, 1}, {65, 6}, {65, 3}, {4617, 3}, {4617, 1}}) {
        CompatibleStructure c = compatible_structure(Poly2(bits), p);
        for (const auto& b : c.blocks) {
            CHECK(striction(b.product).sigma % p == 0);
            for (const auto& chain : b.chains) {
                CHECK(validate_subdivision(chain, b.product, p));
                for (const Poly2& d : chain) CHECK(striction(d).sigma % p == 0);
            }
        }
    }
}

TEST_CASE("subdivision validation") {
    Poly2 f = Poly2::parse("0b1001");  // X^3+1
    Poly2 f2 = f * f;
    CHECK(validate_subdivision({f, f2}, f2, 3));
    CHECK(validate_subdivision({f2}, f2, 3));
    CHECK_FALSE(validate_subdivision({f}, f2, 3));             // does not end at the product
    CHECK_FALSE(validate_subdivision({f2, f}, f2, 3));         // not ascending
    CHECK_FALSE(validate_subdivision({Poly2::parse("0b111"), f2}, f2, 3));  // striction 1 entry
}
