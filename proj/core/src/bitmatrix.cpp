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

#include "evo/bitmatrix.hpp"

#include <bit>

#include "evo/errors.hpp"

namespace evo {

void BitVec::set(int k, bool v) {
    std::uint64_t mask = std::uint64_t{1} << (k % 64);
    if (v)
        words_[static_cast<std::size_t>(k) / 64] |= mask;
    else
        words_[static_cast<std::size_t>(k) / 64] &= ~mask;
}

bool BitVec::any() const {
    for (auto w : words_)
        if (w) return true;
    return false;
}

int BitVec::popcount() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
}

int BitVec::first_set() const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if (words_[i]) return static_cast<int>(i) * 64 + std::countr_zero(words_[i]);
    }
    return -1;
}

BitVec& BitVec::operator^=(const BitVec& o) {
    if (n_ != o.n_) throw DimensionMismatch("bit vector lengths differ");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
}

BitVec BitVec::operator^(const BitVec& o) const {
    BitVec r = *this;
    r ^= o;
    return r;
}

BitMatrix::BitMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows), BitVec(cols)) {}

BitMatrix BitMatrix::identity(int n) {
    BitMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i);
    return m;
}

bool BitMatrix::is_zero() const {
    for (const auto& r : data_)
        if (r.any()) return false;
    return true;
}

BitMatrix BitMatrix::operator+(const BitMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix shapes differ");
    BitMatrix r = *this;
    for (int i = 0; i < rows_; ++i) r.row(i) ^= o.row(i);
    return r;
}

BitMatrix BitMatrix::operator*(const BitMatrix& o) const {
    if (cols_ != o.rows_) throw DimensionMismatch("matrix shapes incompatible for multiply");
    BitMatrix r(rows_, o.cols_);
    // Row-by-row word-parallel combination: row i of the product is the
    // xor of the rows of `o` selected by the bits of row i.
    for (int i = 0; i < rows_; ++i) {
        const auto& w = data_[static_cast<std::size_t>(i)].words();
        for (std::size_t wi = 0; wi < w.size(); ++wi) {
            std::uint64_t bits = w[wi];
            while (bits) {
                int b = std::countr_zero(bits);
                bits &= bits - 1;
                r.row(i) ^= o.row(static_cast<int>(wi) * 64 + b);
            }
        }
    }
    return r;
}

BitVec BitMatrix::apply(const BitVec& x) const {
    if (x.size() != cols_) throw DimensionMismatch("vector length does not match matrix columns");
    BitVec y(rows_);
    for (int i = 0; i < rows_; ++i) {
        // y_i = <row i, x> over GF(2).
        std::uint64_t acc = 0;
        const auto& a = data_[static_cast<std::size_t>(i)].words();
        const auto& b = x.words();
        for (std::size_t wi = 0; wi < a.size(); ++wi) acc ^= a[wi] & b[wi];
        if (std::popcount(acc) & 1) y.set(i);
    }
    return y;
}

BitMatrix BitMatrix::pow(std::uint64_t k) const {
    if (rows_ != cols_) throw DimensionMismatch("matrix power requires a square matrix");
    BitMatrix r = identity(rows_);
    BitMatrix b = *this;
    while (k) {
        if (k & 1) r = r * b;
        b = b * b;
        k >>= 1;
    }
    return r;
}

namespace {

// Row echelon form in place; returns pivot column per reduced row.
std::vector<int> echelonize(std::vector<BitVec>& rows) {
    std::vector<int> pivots;
    std::size_t r = 0;
    int cols = rows.empty() ? 0 : rows[0].size();
    for (int c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t sel = r;
        while (sel < rows.size() && !rows[sel].test(c)) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i != r && rows[i].test(c)) rows[i] ^= rows[r];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

int BitMatrix::rank() const {
    std::vector<BitVec> rows = data_;
    return static_cast<int>(echelonize(rows).size());
}

std::vector<BitVec> BitMatrix::kernel_basis() const {
    std::vector<BitVec> rows = data_;
    std::vector<int> pivots = echelonize(rows);
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols_), false);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<BitVec> basis;
    for (int free = 0; free < cols_; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        BitVec v(cols_);
        v.set(free);
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            if (rows[r].test(free)) v.set(pivots[r]);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<BitVec> BitMatrix::solve(const BitVec& b) const {
    if (b.size() != rows_) throw DimensionMismatch("rhs length does not match matrix rows");
    // Augment each row with the rhs bit in an extra column.
    std::vector<BitVec> rows;
    rows.reserve(data_.size());
    for (int i = 0; i < rows_; ++i) {
        BitVec r(cols_ + 1);
        for (int j = 0; j < cols_; ++j)
            if (get(i, j)) r.set(j);
        if (b.test(i)) r.set(cols_);
        rows.push_back(std::move(r));
    }
    std::vector<int> pivots = echelonize(rows);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == cols_) return std::nullopt;  // 0 = 1 row
    }
    BitVec x(cols_);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (rows[r].test(cols_)) x.set(pivots[r]);
    }
    return x;
}

Poly2 BitMatrix::minimal_polynomial() const {
    if (rows_ != cols_) throw DimensionMismatch("minimal polynomial requires a square matrix");
    int n = rows_;
    Poly2 mu = Poly2::one();
    for (int s = 0; s < n; ++s) {
        // Krylov sequence of e_s: find the least-degree dependency
        // v, Mv, M^2 v, ... and divide out what mu already covers.
        BitVec v(n);
        v.set(s);
        std::vector<BitVec> seq{v};
        std::vector<BitVec> reduced{v};
        std::vector<int> pivots;
        // Maintain `reduced` in echelon form alongside combination tracking.
        std::vector<BitVec> combos;  // combos[k] over the power coefficients
        BitVec c0(n + 1);
        c0.set(0);
        combos.push_back(c0);
        std::vector<BitVec> ech;     // echelonized copies of seq entries
        std::vector<BitVec> echcmb;  // matching combinations
        Poly2 local;
        for (int k = 0;; ++k) {
            BitVec cur = seq.back();
            BitVec cmb = combos.back();
            // Reduce cur against the echelon rows collected so far.
            for (std::size_t r = 0; r < ech.size(); ++r) {
                int p = ech[r].first_set();
                if (p >= 0 && cur.test(p)) {
                    cur ^= ech[r];
                    cmb ^= echcmb[r];
                }
            }
            if (cur.is_zero()) {
                // cmb encodes the minimal annihilator of this Krylov chain.
                Poly2 g;
                for (int d = 0; d <= n; ++d)
                    if (cmb.test(d)) g.set(d);
                local = g;
                break;
            }
            ech.push_back(cur);
            echcmb.push_back(cmb);
            BitVec nxt = apply(seq.back());
            BitVec ncmb(n + 1);
            for (int d = 0; d < n; ++d)
                if (combos.back().test(d)) ncmb.set(d + 1);
            seq.push_back(std::move(nxt));
            combos.push_back(std::move(ncmb));
        }
        mu = lcm(mu, local);
        if (mu.degree() == n) break;  // cannot grow further
    }
    return mu;
}

void LinearSystem::add_equation(const BitVec& coeffs, bool rhs) {
    if (coeffs.size() != n_) throw DimensionMismatch("equation width does not match unknown count");
    eqs_.emplace_back(coeffs, rhs);
}

std::optional<BitVec> LinearSystem::solve() const {
    std::vector<BitVec> rows;
    rows.reserve(eqs_.size());
    for (const auto& [c, b] : eqs_) {
        BitVec r(n_ + 1);
        for (int j = 0; j < n_; ++j)
            if (c.test(j)) r.set(j);
        if (b) r.set(n_);
        rows.push_back(std::move(r));
    }
    std::vector<int> pivots = echelonize(rows);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == n_) return std::nullopt;
    }
    BitVec x(n_);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (rows[r].test(n_)) x.set(pivots[r]);
    }
    return x;
}

int LinearSystem::solution_space_dim() const {
    std::vector<BitVec> rows;
    rows.reserve(eqs_.size());
    for (const auto& [c, b] : eqs_) {
        BitVec r(n_ + 1);
        for (int j = 0; j < n_; ++j)
            if (c.test(j)) r.set(j);
        if (b) r.set(n_);
        rows.push_back(std::move(r));
    }
    std::vector<int> pivots = echelonize(rows);
    int effective = 0;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == n_) return -1;
        ++effective;
    }
    return n_ - effective;
}

}  // namespace evo
