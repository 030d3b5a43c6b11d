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

#include "evo/field.hpp"

#include <bit>
#include <sstream>

#include "evo/errors.hpp"
#include "evo/poly2.hpp"

namespace evo {

Field::Field(int p, std::optional<std::uint32_t> modulus) : p_(p) {
    if (p < 1 || p > 16) throw InvalidInput("field extension degree must be in 1..16");
    if (modulus) {
        Poly2 m(*modulus);
        if (m.degree() != p) throw RejectedModulus("modulus degree does not match p");
        if (p > 1 && !is_irreducible(m)) throw RejectedModulus("modulus is reducible over GF(2)");
        if (p == 1 && *modulus != 0b10u) throw RejectedModulus("p = 1 requires modulus X (0b10)");
        modulus_ = *modulus;
    } else {
        modulus_ = static_cast<std::uint32_t>(smallest_irreducible(p).low_bits());
    }
}

fe Field::mul(fe a, fe b) const {
    // Carry-less multiply, then reduce modulo the modulus.
    std::uint64_t prod = 0;
    std::uint64_t x = a;
    std::uint32_t y = b;
    while (y) {
        if (y & 1) prod ^= x;
        x <<= 1;
        y >>= 1;
    }
    // Shift-reduce: clear bits from the top down to below deg(modulus).
    std::uint64_t m = modulus_;
    int dm = 31 - std::countl_zero(modulus_);
    for (int k = 62; k >= dm; --k) {
        if ((prod >> k) & 1) prod ^= m << (k - dm);
    }
    return static_cast<fe>(prod);
}

fe Field::pow(fe a, std::uint64_t e) const {
    fe r = 1;
    fe b = a;
    while (e) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

fe Field::inv(fe a) const {
    if (a == 0) throw DivisionByZero("inverse of zero field element");
    // a^(2^p - 2) = a^{-1} in F_{2^p}.
    return pow(a, size() - 2);
}

fe Field::frobenius(fe a, int k) const {
    k %= p_;
    fe r = a;
    for (int i = 0; i < k; ++i) r = mul(r, r);
    return r;
}

fe Field::frobenius_inverse(fe a, int k) const {
    // Frobenius has order p, so the inverse of Frob^k is Frob^{p - k mod p}.
    k %= p_;
    return frobenius(a, (p_ - k) % p_);
}

std::string Field::element_to_string(fe a) const {
    std::ostringstream os;
    os << a;
    return os.str();
}

bool is_subfield(int p, int m) {
    if (p < 1 || m < 1) throw InvalidInput("subfield degrees must be >= 1");
    return m % p == 0;
}

}  // namespace evo
