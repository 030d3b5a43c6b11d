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

#ifndef EVO_FIELD_HPP
#define EVO_FIELD_HPP

#include <cstdint>
#include <optional>
#include <string>

namespace evo {

/// An element of F_{2^p}: coordinates in the polynomial basis
/// {1, X, ..., X^{p-1}} packed as a bitmask.
using fe = std::uint32_t;

/// F_{2^p} with 1 <= p <= 16, fixed by a monic irreducible modulus of
/// degree p (bit k of `modulus` = coefficient of X^k). p = 1 uses
/// modulus X (bitmask 0b10) and degenerates to F_2.
class Field {
  public:
    /// When `modulus` is omitted the lexicographically smallest (as a
    /// bitmask) monic irreducible of degree p is chosen. Throws
    /// RejectedModulus on a reducible or wrong-degree modulus,
    /// InvalidInput for p outside 1..16.
    explicit Field(int p, std::optional<std::uint32_t> modulus = std::nullopt);

    int p() const { return p_; }
    std::uint32_t modulus() const { return modulus_; }
    /// Number of elements, 2^p.
    std::uint32_t size() const { return std::uint32_t{1} << p_; }

    bool contains(fe a) const { return a < size(); }

    fe add(fe a, fe b) const { return a ^ b; }
    fe mul(fe a, fe b) const;
    /// a^e for e >= 0 (a^0 = 1, including 0^0 = 1).
    fe pow(fe a, std::uint64_t e) const;
    /// Multiplicative inverse; throws DivisionByZero on 0.
    fe inv(fe a) const;
    fe div(fe a, fe b) const { return mul(a, inv(b)); }

    /// a^{2^k}.
    fe frobenius(fe a, int k = 1) const;
    /// The unique b with b^{2^k} = a (Frobenius is a bijection).
    fe frobenius_inverse(fe a, int k = 1) const;

    bool operator==(const Field& o) const { return p_ == o.p_ && modulus_ == o.modulus_; }

    std::string element_to_string(fe a) const;

  private:
    int p_;
    std::uint32_t modulus_;
};

/// F_{2^p} embeds in F_{2^m} iff p divides m.
bool is_subfield(int p, int m);

}  // namespace evo

#endif
