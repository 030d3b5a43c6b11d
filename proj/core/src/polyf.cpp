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

#include "evo/polyf.hpp"

#include <algorithm>
#include <sstream>

#include "evo/errors.hpp"

namespace evo {

PolyF::PolyF(Field field, std::vector<fe> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    for (fe c : coeffs_) {
        if (!field_.contains(c)) throw InvalidInput("coefficient out of field range");
    }
    trim();
}

PolyF PolyF::from_poly2(const Field& field, const Poly2& f) {
    std::vector<fe> c(static_cast<std::size_t>(f.degree() + 1), 0);
    for (int e : f.exponents()) c[static_cast<std::size_t>(e)] = 1;
    return PolyF(field, std::move(c));
}

void PolyF::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

int PolyF::valuation() const {
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k]) return static_cast<int>(k);
    }
    return -1;
}

std::vector<int> PolyF::exponents() const {
    std::vector<int> e;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k]) e.push_back(static_cast<int>(k));
    }
    return e;
}

bool PolyF::has_f2_coeffs() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](fe c) { return c <= 1; });
}

Poly2 PolyF::to_poly2() const {
    if (!has_f2_coeffs()) throw InvalidInput("polynomial has coefficients outside F_2");
    Poly2 p;
    for (int e : exponents()) p.set(e);
    return p;
}

PolyF PolyF::operator+(const PolyF& o) const {
    if (!(field_ == o.field_)) throw FieldMismatch("polynomial fields differ");
    std::vector<fe> c(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = coeff(static_cast<int>(k)) ^ o.coeff(static_cast<int>(k));
    return PolyF(field_, std::move(c));
}

PolyF PolyF::operator*(const PolyF& o) const {
    if (!(field_ == o.field_)) throw FieldMismatch("polynomial fields differ");
    if (is_zero() || o.is_zero()) return PolyF(field_);
    std::vector<fe> c(coeffs_.size() + o.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (!coeffs_[i]) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
            c[i + j] ^= field_.mul(coeffs_[i], o.coeffs_[j]);
        }
    }
    return PolyF(field_, std::move(c));
}

std::pair<PolyF, PolyF> PolyF::divmod(const PolyF& o) const {
    if (!(field_ == o.field_)) throw FieldMismatch("polynomial fields differ");
    if (o.is_zero()) throw DivisionByZero("polynomial division by zero");
    std::vector<fe> rem = coeffs_;
    std::vector<fe> quot;
    int db = o.degree();
    fe lead_inv = field_.inv(o.coeffs_.back());
    int dr = static_cast<int>(rem.size()) - 1;
    while (dr >= 0 && rem[static_cast<std::size_t>(dr)] == 0) --dr;
    if (dr >= db) quot.assign(static_cast<std::size_t>(dr - db + 1), 0);
    while (dr >= db) {
        fe q = field_.mul(rem[static_cast<std::size_t>(dr)], lead_inv);
        quot[static_cast<std::size_t>(dr - db)] = q;
        for (int k = 0; k <= db; ++k) {
            rem[static_cast<std::size_t>(dr - db + k)] ^= field_.mul(q, o.coeffs_[static_cast<std::size_t>(k)]);
        }
        while (dr >= 0 && rem[static_cast<std::size_t>(dr)] == 0) --dr;
    }
    return {PolyF(field_, std::move(quot)), PolyF(field_, std::move(rem))};
}

bool PolyF::divides(const PolyF& o) const {
    if (is_zero()) return o.is_zero();
    return o.divmod(*this).second.is_zero();
}

bool PolyF::operator==(const PolyF& o) const {
    return field_ == o.field_ && coeffs_ == o.coeffs_;
}

std::string PolyF::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    auto e = exponents();
    for (auto it = e.rbegin(); it != e.rend(); ++it) {
        if (it != e.rbegin()) os << "+";
        fe c = coeffs_[static_cast<std::size_t>(*it)];
        if (*it == 0) {
            if (c == 1)
                os << "1";
            else
                os << "[" << c << "]";
        } else {
            if (c != 1) os << "[" << c << "]";
            if (*it == 1)
                os << "X";
            else
                os << "X^" << *it;
        }
    }
    return os.str();
}

StrictionReport striction(const PolyF& f) {
    return striction_of_exponents(f.exponents());
}

}  // namespace evo
