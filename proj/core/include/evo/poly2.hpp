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

#ifndef EVO_POLY2_HPP
#define EVO_POLY2_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace evo {

/// Univariate polynomial over GF(2), coefficients stored as a bitmask
/// (bit k = coefficient of X^k). The zero polynomial has empty storage.
class Poly2 {
  public:
    Poly2() = default;
    explicit Poly2(std::uint64_t bits);

    static Poly2 zero() { return Poly2(); }
    static Poly2 one() { return Poly2(1); }
    static Poly2 x() { return Poly2(2); }
    /// X^k
    static Poly2 monomial(int k);
    /// Parse "0b1011", decimal, or hex ("0x...") bitmask text.
    static Poly2 parse(const std::string& text);

    bool is_zero() const { return words_.empty(); }
    bool is_one() const { return words_.size() == 1 && words_[0] == 1; }
    /// -1 for the zero polynomial.
    int degree() const;
    /// Index of the lowest set bit; -1 for zero.
    int valuation() const;
    /// Number of nonzero coefficients.
    int term_count() const;
    bool test(int k) const;
    void set(int k);
    /// Constant coefficient.
    bool constant_term() const { return test(0); }
    /// Exponents with nonzero coefficient, ascending.
    std::vector<int> exponents() const;

    Poly2 operator+(const Poly2& o) const;
    Poly2 operator*(const Poly2& o) const;
    /// Multiply by X^k.
    Poly2 shifted(int k) const;
    /// Quotient and remainder; throws DivisionByZero when o is zero.
    std::pair<Poly2, Poly2> divmod(const Poly2& o) const;
    Poly2 operator/(const Poly2& o) const { return divmod(o).first; }
    Poly2 operator%(const Poly2& o) const { return divmod(o).second; }
    bool divides(const Poly2& o) const;

    /// Square root of a perfect square (every exponent even).
    Poly2 sqrt() const;
    /// Formal derivative (in characteristic 2: shifts the odd part).
    Poly2 derivative() const;

    bool operator==(const Poly2& o) const { return words_ == o.words_; }
    /// Orders by degree, then by bitmask value; gives the deterministic
    /// output order used throughout.
    std::strong_ordering operator<=>(const Poly2& o) const;

    std::uint64_t low_bits() const { return words_.empty() ? 0 : words_[0]; }
    std::string to_string() const;    // human readable, e.g. "X^3+X^2+1"
    std::string to_bitmask() const;   // "0b..." form

  private:
    std::vector<std::uint64_t> words_;
    void trim();
    friend Poly2 poly2_from_words(std::vector<std::uint64_t> w);
};

Poly2 gcd(const Poly2& a, const Poly2& b);
Poly2 lcm(const Poly2& a, const Poly2& b);

/// base^e mod m (square and multiply).
Poly2 powmod(const Poly2& base, std::uint64_t e, const Poly2& m);
/// base^(2^k) mod m (k repeated squarings).
Poly2 frobenius_powmod(const Poly2& base, int k, const Poly2& m);

bool is_irreducible(const Poly2& f);
/// Lexicographically smallest (as bitmask) monic irreducible of degree p.
Poly2 smallest_irreducible(int degree);

/// Irreducible factorization over GF(2), deterministic output order
/// (ascending degree, then bitmask). Throws InvalidInput on constants.
std::vector<std::pair<Poly2, int>> factor_f2(const Poly2& f);

/// Least p >= 1 with g | X^p + 1; requires g(0) = 1 and deg g >= 1.
std::uint64_t order_mod(const Poly2& g);

/// Cyclotomic polynomials Phi_d over GF(2) for all d | b (b odd),
/// computed by iterated exact division; their product is X^b + 1.
std::vector<std::pair<std::uint64_t, Poly2>> cyclotomic_product(std::uint64_t b);

/// Exponent-gap data of a polynomial with at least two terms.
struct StrictionReport {
    std::vector<int> exponents;  // E(T), ascending
    int sigma = 0;               // gcd of pairwise exponent differences
    int valuation = 0;
    int degree = 0;
};

StrictionReport striction(const Poly2& f);
StrictionReport striction_of_exponents(const std::vector<int>& exponents);

/// One block of a field-compatible partition of the irreducible factors,
/// with every maximal divisibility-ordered divisor chain ending at the
/// block's full-multiplicity product.
struct CompatibleBlock {
    std::vector<int> factor_indices;           // indices into `factors`, ascending
    Poly2 product;                             // full-multiplicity product over the block
    std::vector<std::vector<Poly2>> chains;    // each ascending by divisibility
};

struct CompatibleStructure {
    int valuation = 0;
    std::vector<std::pair<Poly2, int>> factors;  // irreducible factorization of T / X^v
    std::vector<CompatibleBlock> blocks;
};

/// Finest partition of the irreducible factors of T whose block products
/// have striction divisible by p, plus all maximal compatible divisor
/// chains per block. Requires p | striction(T).
CompatibleStructure compatible_structure(const Poly2& T, int p);

/// True when `chain` is totally ordered by divisibility, ends at `product`,
/// and every entry D has degree >= 1 and p | striction(D).
bool validate_subdivision(const std::vector<Poly2>& chain, const Poly2& product, int p);

}  // namespace evo

#endif
