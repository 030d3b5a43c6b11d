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

#ifndef EVO_BITMATRIX_HPP
#define EVO_BITMATRIX_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "evo/poly2.hpp"

namespace evo {

/// Bit vector of fixed length, packed 64 bits per word.
class BitVec {
  public:
    BitVec() = default;
    explicit BitVec(int n) : n_(n), words_(static_cast<std::size_t>((n + 63) / 64), 0) {}

    int size() const { return n_; }
    bool test(int k) const { return (words_[static_cast<std::size_t>(k) / 64] >> (k % 64)) & 1; }
    void set(int k, bool v = true);
    void flip(int k) { words_[static_cast<std::size_t>(k) / 64] ^= std::uint64_t{1} << (k % 64); }
    bool any() const;
    bool is_zero() const { return !any(); }
    int popcount() const;
    /// Index of the lowest set bit, or -1.
    int first_set() const;

    BitVec& operator^=(const BitVec& o);
    BitVec operator^(const BitVec& o) const;
    bool operator==(const BitVec& o) const = default;
    /// Lexicographic-by-word ordering (for use as map keys).
    auto operator<=>(const BitVec& o) const = default;

    const std::vector<std::uint64_t>& words() const { return words_; }
    std::vector<std::uint64_t>& words() { return words_; }

  private:
    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Square or rectangular matrix over GF(2); rows packed as BitVec.
class BitMatrix {
  public:
    BitMatrix() = default;
    BitMatrix(int rows, int cols);

    static BitMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool get(int i, int j) const { return data_[static_cast<std::size_t>(i)].test(j); }
    void set(int i, int j, bool v = true) { data_[static_cast<std::size_t>(i)].set(j, v); }
    const BitVec& row(int i) const { return data_[static_cast<std::size_t>(i)]; }
    BitVec& row(int i) { return data_[static_cast<std::size_t>(i)]; }

    bool is_zero() const;

    BitMatrix operator+(const BitMatrix& o) const;
    BitMatrix operator*(const BitMatrix& o) const;
    /// y = M x (column-vector convention).
    BitVec apply(const BitVec& x) const;
    /// M^k for k >= 0 (square matrices).
    BitMatrix pow(std::uint64_t k) const;

    bool operator==(const BitMatrix& o) const = default;

    int rank() const;
    /// Basis of {x : M x = 0}.
    std::vector<BitVec> kernel_basis() const;
    /// One solution of M x = b, or nullopt when inconsistent.
    std::optional<BitVec> solve(const BitVec& b) const;

    /// Minimal polynomial over GF(2) (square matrices): lcm of the minimal
    /// annihilators of the Krylov sequences of the standard basis vectors.
    Poly2 minimal_polynomial() const;

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<BitVec> data_;
};

/// Dense GF(2) linear system A x = b accumulated row by row; solves by
/// Gaussian elimination and can also report the solution-space dimension.
class LinearSystem {
  public:
    explicit LinearSystem(int unknowns) : n_(unknowns) {}

    void add_equation(const BitVec& coeffs, bool rhs);
    /// One solution, or nullopt when inconsistent.
    std::optional<BitVec> solve() const;
    /// Dimension of the affine solution set (-1 when inconsistent).
    int solution_space_dim() const;

  private:
    int n_;
    std::vector<std::pair<BitVec, bool>> eqs_;
};

}  // namespace evo

#endif
