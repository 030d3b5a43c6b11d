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

#ifndef EVO_ALGEBRA_HPP
#define EVO_ALGEBRA_HPP

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "evo/bitmatrix.hpp"
#include "evo/field.hpp"

namespace evo {

/// Element coordinates in the distinguished basis e_1..e_d.
using Vec = std::vector<fe>;

/// Finite-dimensional commutative algebra over F_{2^p} given by its
/// squares table (row i = coordinates of e_i^2), an optional full
/// multiplication table, and an optional weight row.
struct Algebra {
    Field field;
    int dim = 0;
    std::vector<Vec> squares;
    /// table[i][j] = coordinates of e_i e_j; symmetric, diagonal = squares.
    std::optional<std::vector<std::vector<Vec>>> table;
    /// weight[i] = omega(e_i); a nonzero algebra morphism when present.
    std::optional<Vec> weight;

    /// Checks every structural invariant (coordinate ranges, table
    /// symmetry and diagonal, weight morphism property). Throws
    /// InvariantViolation / NotAMorphism / ZeroWeight on failure.
    void validate() const;

    /// True when every off-diagonal product is zero (requires no table,
    /// or a table whose off-diagonal entries vanish).
    bool has_natural_basis() const;

    bool operator==(const Algebra& o) const;
};

/// x * y using the full table when present; without a table only
/// squares are defined and x*y for x != y throws InvalidInput.
Vec multiply(const Algebra& A, const Vec& x, const Vec& y);

/// V(x) = x^2 = sum lambda_i^2 e_i^2 (additivity in characteristic 2).
Vec evolution_apply(const Algebra& A, const Vec& x);

/// F_2 coordinate expansion of x: bit (i*p + a) = coefficient of X^a in
/// coordinate i. Size p*d.
BitVec expand_f2(const Field& field, const Vec& x);
Vec contract_f2(const Field& field, int dim, const BitVec& v);

/// The evolution operator of A in both representations: the semilinear
/// matrix S over F (column i = e_i^2) and the F_2-linear matrix M2 of
/// size (p*d) x (p*d) after restriction of scalars. M2 is built lazily
/// and at most once (thread-safe).
class EvolutionOperator {
  public:
    explicit EvolutionOperator(Algebra a);

    const Algebra& algebra() const { return a_; }
    /// S with S[i][j] = coordinate j of e_{i+1}^2 (row-major squares table).
    const std::vector<Vec>& squares() const { return a_.squares; }

    Vec apply(const Vec& x) const { return evolution_apply(a_, x); }
    /// The F_2-linear matrix of V on restricted scalars. On a temporary
    /// operator a copy is returned so the result can never dangle.
    const BitMatrix& m2() const&;
    BitMatrix m2() const&& { return static_cast<const EvolutionOperator&>(*this).m2(); }

  private:
    Algebra a_;
    struct Lazy {
        std::once_flag flag;
        BitMatrix m2;
    };
    std::shared_ptr<Lazy> lazy_;
};

EvolutionOperator operator_of(const Algebra& A);

/// S * S^{.2} * S^{.4} * ... * S^{.2^{k-1}} where S^{.2^j} raises every
/// entry to the 2^j-th power (entrywise Frobenius); matrix of V^k
/// composed with Frob^{-k} on coordinates. Entry convention: S[i][j] =
/// coordinate i of V(e_j) (column j = image of e_j).
std::vector<Vec> hadamard_composite(const Field& field, const std::vector<Vec>& S, int k);

/// Column-convention matrix of V over F: column j = coordinates of e_j^2.
std::vector<Vec> structure_matrix(const Algebra& A);

Algebra parse_algebra(const std::string& text);
std::string serialize_algebra(const Algebra& A);

}  // namespace evo

#endif
