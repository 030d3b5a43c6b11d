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

#ifndef EVO_POLYF_HPP
#define EVO_POLYF_HPP

#include <string>
#include <vector>

#include "evo/field.hpp"
#include "evo/poly2.hpp"

namespace evo {

/// Univariate polynomial over F_{2^p}; coeffs[k] is the coefficient of
/// X^k, with the leading coefficient nonzero unless the polynomial is zero.
class PolyF {
  public:
    explicit PolyF(Field field) : field_(std::move(field)) {}
    PolyF(Field field, std::vector<fe> coeffs);

    /// Lift of an F_2 polynomial (coefficients 0/1).
    static PolyF from_poly2(const Field& field, const Poly2& f);

    const Field& field() const { return field_; }
    const std::vector<fe>& coeffs() const { return coeffs_; }
    fe coeff(int k) const { return k >= 0 && k < static_cast<int>(coeffs_.size()) ? coeffs_[k] : 0; }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    int valuation() const;
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
    /// Exponents with nonzero coefficient, ascending.
    std::vector<int> exponents() const;

    /// True when every coefficient lies in {0, 1}; then the F_2 image
    /// is available via to_poly2.
    bool has_f2_coeffs() const;
    Poly2 to_poly2() const;

    PolyF operator+(const PolyF& o) const;
    PolyF operator*(const PolyF& o) const;
    std::pair<PolyF, PolyF> divmod(const PolyF& o) const;
    bool divides(const PolyF& o) const;

    bool operator==(const PolyF& o) const;

    std::string to_string() const;

  private:
    Field field_;
    std::vector<fe> coeffs_;
    void trim();
};

/// Striction data; throws MonomialInput with fewer than two terms.
StrictionReport striction(const PolyF& f);

}  // namespace evo

#endif
