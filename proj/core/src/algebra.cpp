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

#include "evo/algebra.hpp"

#include <cassert>
#include <sstream>

#include <json.hpp>

#include "evo/errors.hpp"

namespace evo {

using json = nlohmann::json;

void Algebra::validate() const {
    if (dim < 1 || dim > 64) throw InvariantViolation("dimension must be in 1..64");
    if (static_cast<int>(squares.size()) != dim) throw InvariantViolation("squares table must have dim rows");
    auto check_vec = [&](const Vec& v, const char* what) {
        if (static_cast<int>(v.size()) != dim) throw InvariantViolation(std::string(what) + ": wrong length");
        for (fe c : v) {
            if (!field.contains(c)) throw InvariantViolation(std::string(what) + ": coordinate out of field range");
        }
    };
    for (const Vec& row : squares) check_vec(row, "squares row");
    if (table) {
        if (static_cast<int>(table->size()) != dim) throw InvariantViolation("table must have dim rows");
        for (int i = 0; i < dim; ++i) {
            if (static_cast<int>((*table)[i].size()) != dim) throw InvariantViolation("table row has wrong length");
            for (int j = 0; j < dim; ++j) check_vec((*table)[i][j], "table entry");
        }
        for (int i = 0; i < dim; ++i) {
            if ((*table)[i][i] != squares[i]) throw InvariantViolation("table diagonal disagrees with squares");
            for (int j = i + 1; j < dim; ++j) {
                if ((*table)[i][j] != (*table)[j][i]) throw InvariantViolation("table is not symmetric");
            }
        }
    }
    if (weight) {
        check_vec(*weight, "weight");
        bool nonzero = false;
        for (fe w : *weight) nonzero = nonzero || w != 0;
        if (!nonzero) throw ZeroWeight("weight row is identically zero");
        if (!table) throw InvariantViolation("weight requires the full multiplication table");
        auto omega = [&](const Vec& v) {
            fe s = 0;
            for (int k = 0; k < dim; ++k) s ^= field.mul((*weight)[static_cast<std::size_t>(k)], v[static_cast<std::size_t>(k)]);
            return s;
        };
        for (int i = 0; i < dim; ++i) {
            for (int j = i; j < dim; ++j) {
                fe lhs = omega((*table)[i][j]);
                fe rhs = field.mul((*weight)[static_cast<std::size_t>(i)], (*weight)[static_cast<std::size_t>(j)]);
                if (lhs != rhs)
                    throw NotAMorphism("weight is not an algebra morphism", i + 1, j + 1);
            }
        }
    }
}

bool Algebra::has_natural_basis() const {
    if (!table) return true;  // off-diagonal products default to zero
    Vec zero(static_cast<std::size_t>(dim), 0);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            if (i != j && (*table)[i][j] != zero) return false;
        }
    }
    return true;
}

bool Algebra::operator==(const Algebra& o) const {
    return field == o.field && dim == o.dim && squares == o.squares && table == o.table && weight == o.weight;
}

Vec multiply(const Algebra& A, const Vec& x, const Vec& y) {
    if (static_cast<int>(x.size()) != A.dim || static_cast<int>(y.size()) != A.dim)
        throw DimensionMismatch("vector length does not match algebra dimension");
    Vec out(static_cast<std::size_t>(A.dim), 0);
    for (int i = 0; i < A.dim; ++i) {
        if (!x[static_cast<std::size_t>(i)]) continue;
        for (int j = 0; j < A.dim; ++j) {
            if (!y[static_cast<std::size_t>(j)]) continue;
            fe c = A.field.mul(x[static_cast<std::size_t>(i)], y[static_cast<std::size_t>(j)]);
            const Vec* prod;
            if (i == j) {
                prod = &A.squares[static_cast<std::size_t>(i)];
            } else if (A.table) {
                prod = &(*A.table)[i][j];
            } else {
                throw InvalidInput("off-diagonal product requires the full multiplication table");
            }
            for (int k = 0; k < A.dim; ++k)
                out[static_cast<std::size_t>(k)] ^= A.field.mul(c, (*prod)[static_cast<std::size_t>(k)]);
        }
    }
    return out;
}

Vec evolution_apply(const Algebra& A, const Vec& x) {
    if (static_cast<int>(x.size()) != A.dim) throw DimensionMismatch("vector length does not match algebra dimension");
    Vec out(static_cast<std::size_t>(A.dim), 0);
    for (int i = 0; i < A.dim; ++i) {
        fe li = x[static_cast<std::size_t>(i)];
        if (!li) continue;
        fe c = A.field.mul(li, li);
        for (int k = 0; k < A.dim; ++k)
            out[static_cast<std::size_t>(k)] ^= A.field.mul(c, A.squares[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]);
    }
#ifndef NDEBUG
    // With a full table, (sum l_i e_i)^2 expanded termwise must agree:
    // the cross terms each appear twice and cancel in characteristic 2.
    if (A.table) assert(multiply(A, x, x) == out);
#endif
    return out;
}

BitVec expand_f2(const Field& field, const Vec& x) {
    int p = field.p();
    BitVec v(p * static_cast<int>(x.size()));
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (int a = 0; a < p; ++a) {
            if ((x[i] >> a) & 1) v.set(static_cast<int>(i) * p + a);
        }
    }
    return v;
}

Vec contract_f2(const Field& field, int dim, const BitVec& v) {
    int p = field.p();
    if (v.size() != p * dim) throw DimensionMismatch("bit vector length does not match p*dim");
    Vec x(static_cast<std::size_t>(dim), 0);
    for (int i = 0; i < dim; ++i) {
        for (int a = 0; a < p; ++a) {
            if (v.test(i * p + a)) x[static_cast<std::size_t>(i)] |= fe{1} << a;
        }
    }
    return x;
}

EvolutionOperator::EvolutionOperator(Algebra a) : a_(std::move(a)), lazy_(std::make_shared<Lazy>()) {
    a_.validate();
}

const BitMatrix& EvolutionOperator::m2() const& {
    std::call_once(lazy_->flag, [this] {
        const Field& f = a_.field;
        int p = f.p();
        int n = p * a_.dim;
        BitMatrix m(n, n);
        // Column (i*p + a) = F_2 expansion of V(X^a e_{i+1}) = (X^a)^2 e_{i+1}^2.
        for (int i = 0; i < a_.dim; ++i) {
            for (int a = 0; a < p; ++a) {
                fe beta = f.mul(fe{1} << a, fe{1} << a);
                Vec img(static_cast<std::size_t>(a_.dim), 0);
                for (int k = 0; k < a_.dim; ++k)
                    img[static_cast<std::size_t>(k)] =
                        f.mul(beta, a_.squares[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]);
                BitVec col = expand_f2(f, img);
                for (int r = 0; r < n; ++r)
                    if (col.test(r)) m.set(r, i * p + a);
            }
        }
        lazy_->m2 = std::move(m);
    });
    return lazy_->m2;
}

EvolutionOperator operator_of(const Algebra& A) { return EvolutionOperator(A); }

std::vector<Vec> structure_matrix(const Algebra& A) {
    std::vector<Vec> S(static_cast<std::size_t>(A.dim), Vec(static_cast<std::size_t>(A.dim), 0));
    for (int i = 0; i < A.dim; ++i)
        for (int j = 0; j < A.dim; ++j)
            S[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                A.squares[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    return S;
}

std::vector<Vec> hadamard_composite(const Field& field, const std::vector<Vec>& S, int k) {
    if (k < 1) throw InvalidInput("hadamard_composite requires k >= 1");
    std::size_t d = S.size();
    auto matmul = [&](const std::vector<Vec>& A, const std::vector<Vec>& B) {
        std::vector<Vec> C(d, Vec(d, 0));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t l = 0; l < d; ++l) {
                if (!A[i][l]) continue;
                for (std::size_t j = 0; j < d; ++j) C[i][j] ^= field.mul(A[i][l], B[l][j]);
            }
        return C;
    };
    std::vector<Vec> acc = S;
    std::vector<Vec> pow = S;
    for (int j = 1; j < k; ++j) {
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t l = 0; l < d; ++l) pow[i][l] = field.mul(pow[i][l], pow[i][l]);
        acc = matmul(acc, pow);
    }
    return acc;
}

Algebra parse_algebra(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    try {
        if (!j.contains("field")) throw ParseError("missing \"field\"");
        if (!j.contains("dim")) throw ParseError("missing \"dim\"");
        if (!j.contains("squares")) throw ParseError("missing \"squares\"");
        int p = j["field"].at("p").get<int>();
        std::optional<std::uint32_t> modulus;
        if (j["field"].contains("modulus")) modulus = j["field"]["modulus"].get<std::uint32_t>();
        Field field = [&] {
            try {
                return Field(p, modulus);
            } catch (const RejectedModulus& e) {
                throw ParseError(std::string("field: ") + e.what());
            } catch (const InvalidInput& e) {
                throw ParseError(std::string("field: ") + e.what());
            }
        }();
        Algebra A{field, j["dim"].get<int>(), {}, std::nullopt, std::nullopt};
        A.squares = j["squares"].get<std::vector<Vec>>();
        if (j.contains("table") && !j["table"].is_null())
            A.table = j["table"].get<std::vector<std::vector<Vec>>>();
        if (j.contains("weight") && !j["weight"].is_null()) A.weight = j["weight"].get<Vec>();
        A.validate();
        return A;
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed algebra file: ") + e.what());
    }
}

std::string serialize_algebra(const Algebra& A) {
    json j;
    j["field"] = {{"p", A.field.p()}, {"modulus", A.field.modulus()}};
    j["dim"] = A.dim;
    j["squares"] = A.squares;
    if (A.table) j["table"] = *A.table;
    if (A.weight) j["weight"] = *A.weight;
    return j.dump();
}

}  // namespace evo
