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

#include "evo/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "evo/errors.hpp"
#include "evo/generators.hpp"

namespace evo {

using json = nlohmann::json;

namespace {

std::string profile_str(const PeriodicityProfile& p) {
    std::ostringstream os;
    switch (p.kind) {
        case PeriodicityProfile::Kind::Nilpotent:
            os << "nilpotent(" << p.n << ")";
            break;
        case PeriodicityProfile::Kind::QuasiConstant:
            os << "quasi-constant(" << p.n << ")";
            break;
        case PeriodicityProfile::Kind::UltimatelyPeriodic:
            os << "(" << p.n << "," << p.p << ")";
            break;
    }
    return os.str();
}

}  // namespace

AnalysisReport analyze(const Algebra& A) {
    AnalysisReport r;
    r.profile = operator_profile(A);
    r.quasi_constant = quasi_constant_check(A);
    if (r.quasi_constant) {
        r.classification = "quasi-constant";
    } else if (r.profile.kind == PeriodicityProfile::Kind::Nilpotent) {
        r.classification = "nilpotent";
    } else {
        r.classification = "ultimately-periodic";
    }
    r.train = train_polynomial(A);
    if (A.field.p() == 1) {
        if (r.profile.kind == PeriodicityProfile::Kind::Nilpotent) {
            r.nilpotent_s = nilpotent_invariants(A);
        } else {
            try {
                r.canonical = periodic_invariants(A);
            } catch (const UnexpectedFactorShape& e) {
                r.canonical_note = e.what();
            }
        }
    }
    if (A.weight) {
        AnalysisReport::BaricSection b;
        try {
            BaricStructure B = check_weight(A);
            auto [nu, e] = baric_quasi_constant(B);
            b.qc_degree = nu;
            b.idempotent = e;
            auto [bn, bp] = bernstein_profile(B);
            b.bernstein_n = bn;
            b.bernstein_p = bp;
            b.train_identity = weighted_train_identity(B);
        } catch (const KernelNotNilplenary& e) {
            b.note = e.what();
        }
        r.baric = std::move(b);
    }
    return r;
}

std::string render_report(const AnalysisReport& r) {
    std::ostringstream os;
    os << "classification: " << r.classification << "\n";
    os << "profile: " << profile_str(r.profile) << "\n";
    if (r.quasi_constant) os << "quasi-constant degree: " << r.quasi_constant->first << "\n";
    os << "train polynomial: " << r.train.T.to_string() << " (degree " << r.train.degree << ", valuation "
       << r.train.valuation << ", striction " << r.train.sigma << ")\n";
    if (r.nilpotent_s) {
        os << "nilpotent invariants s = (";
        for (std::size_t i = 0; i < r.nilpotent_s->size(); ++i) os << (i ? "," : "") << (*r.nilpotent_s)[i];
        os << ")\n";
    }
    if (r.canonical) {
        os << "canonical invariants: s=(";
        for (std::size_t i = 0; i < r.canonical->s.size(); ++i) os << (i ? "," : "") << r.canonical->s[i];
        os << ") t=(";
        for (std::size_t i = 0; i < r.canonical->t.size(); ++i) os << (i ? "," : "") << r.canonical->t[i];
        os << ") q=" << r.canonical->q << " r=" << r.canonical->r << "\n";
    }
    if (r.canonical_note) os << "canonical note: " << *r.canonical_note << "\n";
    if (r.baric) {
        if (r.baric->note) {
            os << "baric: " << *r.baric->note << "\n";
        } else {
            os << "baric quasi-constant degree: " << r.baric->qc_degree << "\n";
            os << "bernstein profile: (" << r.baric->bernstein_n << "," << r.baric->bernstein_p << ")\n";
            os << "weighted train identity degree: " << r.baric->train_identity.degree << "\n";
        }
    }
    return os.str();
}

std::string report_to_json(const AnalysisReport& r) {
    json j;
    j["schema"] = 1;
    j["classification"] = r.classification;
    j["profile"] = profile_str(r.profile);
    j["preperiod"] = r.profile.n;
    if (r.profile.kind != PeriodicityProfile::Kind::Nilpotent) j["period"] = r.profile.p;
    if (r.quasi_constant) {
        j["quasi_constant"] = {{"degree", r.quasi_constant->first}, {"idempotent", r.quasi_constant->second}};
    }
    j["train"] = {{"text", r.train.T.to_string()},
                  {"coeffs", r.train.T.coeffs()},
                  {"degree", r.train.degree},
                  {"valuation", r.train.valuation},
                  {"striction", r.train.sigma}};
    if (r.nilpotent_s) j["nilpotent_s"] = *r.nilpotent_s;
    if (r.canonical)
        j["canonical"] = {{"s", r.canonical->s}, {"t", r.canonical->t}, {"q", r.canonical->q}, {"r", r.canonical->r}};
    if (r.canonical_note) j["canonical_note"] = *r.canonical_note;
    if (r.baric) {
        if (r.baric->note) {
            j["baric"] = {{"note", *r.baric->note}};
        } else {
            j["baric"] = {{"qc_degree", r.baric->qc_degree},
                          {"idempotent", r.baric->idempotent},
                          {"bernstein", {r.baric->bernstein_n, r.baric->bernstein_p}},
                          {"train_degree", r.baric->train_identity.degree},
                          {"train_alpha", r.baric->train_identity.alpha}};
        }
    }
    return j.dump(2);
}

namespace {

void identity_row(std::vector<CorpusRow>& rows, const std::string& id, const Algebra& A, const Poly2& P,
                  const std::string& claim) {
    IdentityCheck c = verify_identity(A, P);
    rows.push_back({id, c.holds ? "PASS" : "FAIL", claim, c.holds ? "identity holds" : "identity fails"});
}

void profile_row(std::vector<CorpusRow>& rows, const std::string& id, const Algebra& A,
                 const std::string& claimed) {
    std::string got = profile_str(operator_profile(A));
    rows.push_back({id, got == claimed ? "PASS" : "FLAG", claimed, got});
}

std::string factors_str(const std::vector<std::pair<Poly2, int>>& fs) {
    std::ostringstream os;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (i) os << " * ";
        os << "(" << fs[i].first.to_string() << ")^" << fs[i].second;
    }
    return os.str();
}

}  // namespace

std::vector<CorpusRow> verify_paper() {
    std::vector<CorpusRow> rows;

    // Annihilation identities of the cellular-automaton rings.
    identity_row(rows, "01-rule90-05-identity", rule90(5), Poly2::parse("0b101010"), "V^5 = V^3 + V");
    identity_row(rows, "02-rule90-07-identity", rule90(7), Poly2::parse("0b10100010"), "V^7 = V^5 + V");
    identity_row(rows, "03-rule90-13-identity", rule90(13), Poly2::parse("0b10101000001010"),
                 "V^13 = V^11 + V^9 + V^3 + V");
    identity_row(rows, "04-rule150-05-identity", rule150(5), Poly2::parse("0b111111"),
                 "T(V) = 0 for T = X^5+X^4+X^3+X^2+X+1");
    identity_row(rows, "05-rule150-07-identity", rule150(7), Poly2::parse("0b11001111"),
                 "T(V) = 0 for T = X^7+X^6+X^3+X^2+X+1");

    // Quadratic dynamical system modulo 13.
    {
        DynSys D = quadratic_map(2, 13);
        auto compose = [&](int k) {
            std::vector<int> g(static_cast<std::size_t>(D.size));
            for (int x = 0; x < D.size; ++x) {
                int y = x;
                for (int i = 0; i < k; ++i) y = D.f[static_cast<std::size_t>(y)];
                g[static_cast<std::size_t>(x)] = y;
            }
            return g;
        };
        bool ok = compose(8) == compose(4);
        Algebra A = dynsys_algebra(D);
        bool ok_alg = verify_identity(A, Poly2::parse("0b100010000")).holds;  // X^8 + X^4
        rows.push_back({"06-mod13-identity", ok && ok_alg ? "PASS" : "FAIL", "f^8 = f^4",
                        ok && ok_alg ? "identity holds" : "identity fails"});
        profile_row(rows, "07-mod13-profile", A, "(4,4)");
    }

    // F_4 plus a point at infinity: indices 0, 1, alpha, alpha^2, infinity.
    {
        DynSys D{5, {4, 0, 1, 1, 4}};
        profile_row(rows, "08-f4inf-profile", dynsys_algebra(D), "(1,3)");
    }

    // Remark algebra: V(e1)=e2, V(e2)=e3, V(e3)=e1+e3.
    {
        Algebra A = build_companion(Poly2::parse("0b1101"), Field(1));  // X^3+X^2+1
        identity_row(rows, "09-remark-train-identity", A, Poly2::parse("0b1101"), "V^3 + V^2 + id = 0");
        identity_row(rows, "10-remark-v8-identity", A, Poly2::parse("0b100000010"), "V^8 = V");
        profile_row(rows, "11-remark-profile", A, "(1,7)");
    }

    // Cyclic dimension-4 algebra and its element examples.
    {
        Algebra A = build_A_st({}, {2}, 1, Field(1));
        profile_row(rows, "12-cyclic4-profile", A, "(0,4)");
        auto elt = [&](const Vec& x, const std::string& id, const std::string& claim) {
            OrbitReport o = orbit(A, x);
            std::ostringstream got;
            got << "(" << o.preperiod << "," << o.period << ")";
            rows.push_back({id, got.str() == claim ? "PASS" : "FLAG", claim, got.str()});
        };
        elt({1, 0, 1, 0}, "13-cyclic4-elt-e1e3", "(0,2)");
        elt({1, 1, 1, 1}, "14-cyclic4-elt-ones", "(0,1)");
    }

    // Ring-size profiles of the two cellular automata.
    profile_row(rows, "15-rule90-03-profile", rule90(3), "(1,2)");
    profile_row(rows, "16-rule90-04-profile", rule90(4), "nilpotent(4)");
    profile_row(rows, "17-rule90-06-profile", rule90(6), "(2,4)");
    profile_row(rows, "18-rule90-08-profile", rule90(8), "nilpotent(8)");
    profile_row(rows, "19-rule90-12-profile", rule90(12), "(4,8)");
    profile_row(rows, "20-rule150-03-profile", rule150(3), "(2,1)");
    profile_row(rows, "21-rule150-04-profile", rule150(4), "(0,4)");
    profile_row(rows, "22-rule150-06-profile", rule150(6), "(4,2)");
    profile_row(rows, "23-rule150-08-profile", rule150(8), "(0,8)");

    // Striction and compatibility examples.
    {
        Poly2 T = Poly2::parse("5137");  // X^12+X^10+X^4+1
        StrictionReport s = striction(T);
        rows.push_back({"24-striction-ex1", s.sigma == 2 ? "PASS" : "FAIL", "sigma = 2",
                        "sigma = " + std::to_string(s.sigma)});
        auto fs = factor_f2(T);
        bool ok = fs.size() == 3 && fs[0] == std::make_pair(Poly2::parse("0b11"), 2) &&
                  fs[1] == std::make_pair(Poly2::parse("0b111"), 2) && fs[2] == std::make_pair(Poly2::parse("0b1101"), 2);
        rows.push_back({"25-factors-ex1", ok ? "PASS" : "FAIL", "(X+1)^2 (X^2+X+1)^2 (X^3+X^2+1)^2", factors_str(fs)});
        CompatibleStructure c2 = compatible_structure(T, 2);
        bool part_ok = c2.blocks.size() == 3;
        for (const auto& b : c2.blocks)
            part_ok = part_ok && b.factor_indices.size() == 1 && b.chains.size() == 1 && b.chains[0].size() == 1;
        rows.push_back({"26-compat-ex1-p2", part_ok ? "PASS" : "FAIL", "three singleton blocks, chains {f_i^2}",
                        part_ok ? "as claimed" : "differs"});
        CompatibleStructure c1 = compatible_structure(T, 1);
        bool sub_ok = c1.blocks.size() == 3;
        for (const auto& b : c1.blocks)
            sub_ok = sub_ok && b.chains.size() == 1 && b.chains[0].size() == 2;
        rows.push_back({"27-compat-ex1-p1", sub_ok ? "PASS" : "FAIL", "chains {f_i, f_i^2}",
                        sub_ok ? "as claimed" : "differs"});
    }
    {
        StrictionReport s = striction(Poly2::parse("65"));  // X^6+1
        rows.push_back({"28-striction-ex2", s.sigma == 6 ? "PASS" : "FAIL", "sigma = 6",
                        "sigma = " + std::to_string(s.sigma)});
    }
    {
        Poly2 T = Poly2::parse("4617");  // X^12+X^9+X^3+1
        StrictionReport s = striction(T);
        rows.push_back({"29-striction-ex3", s.sigma == 3 ? "PASS" : "FAIL", "sigma = 3",
                        "sigma = " + std::to_string(s.sigma)});
        CompatibleStructure c = compatible_structure(T, 3);
        bool ok = c.blocks.size() == 2 && c.blocks[0].factor_indices == std::vector<int>{0, 1} &&
                  c.blocks[1].factor_indices == std::vector<int>{2};
        // Block 1 chain: (X^3+1), (X^3+1)^2; block 2: just f_3.
        ok = ok && c.blocks[0].chains.size() == 1 && c.blocks[0].chains[0].size() == 2 &&
             c.blocks[0].chains[0][0] == Poly2::parse("0b1001") && c.blocks[1].chains.size() == 1 &&
             c.blocks[1].chains[0].size() == 1;
        rows.push_back({"30-compat-ex3-p3", ok ? "PASS" : "FAIL", "partition {{1,2},{3}}, chain {f1f2, (f1f2)^2}",
                        ok ? "as claimed" : "differs"});
    }

    // Quasi-constant classification.
    {
        Algebra line{Field(1), 1, {{1}}, std::nullopt, std::nullopt};
        auto qc = quasi_constant_check(line);
        rows.push_back({"31-quasiconstant-f2", qc && qc->first == 1 ? "PASS" : "FAIL",
                        "F_2 idempotent line is quasi-constant of degree 1",
                        qc ? "degree " + std::to_string(qc->first) : "absent"});
        Algebra f4line{Field(2), 1, {{1}}, std::nullopt, std::nullopt};
        auto qc4 = quasi_constant_check(f4line);
        rows.push_back({"32-quasiconstant-f4", !qc4 ? "PASS" : "FAIL",
                        "no quasi-constant structure over F_4", !qc4 ? "absent" : "present"});
    }

    // Evolution-algebra nilpotency criteria.
    rows.push_back({"33-evolution-rule90-4", evolution_nilpotency_check(rule90(4)) ? "PASS" : "FAIL",
                    "V nilpotent for ring size 4", "checked via Hadamard composites"});
    rows.push_back({"34-evolution-cyclic4",
                    !evolution_nilpotency_check(build_A_st({}, {2}, 1, Field(1))) ? "PASS" : "FAIL",
                    "cyclic algebra is not nilpotent", "checked via Hadamard composites"});

    // Weighted canonical form.
    {
        Algebra W = build_weighted_As({1}, Field(1));
        BaricStructure B = check_weight(W);
        auto [nu, e] = baric_quasi_constant(B);
        auto bp = bernstein_profile(B);
        WeightedTrainIdentity id = weighted_train_identity(B);
        fe sum = 0;
        for (fe a : id.alpha) sum ^= a;
        bool ok = nu == 1 && !e.empty() && bp == std::make_pair(1, std::uint64_t{1}) && id.degree == 2 && sum == 1;
        rows.push_back({"35-baric-As1", ok ? "PASS" : "FAIL",
                        "weighted A((1)): degree 1, Bernstein (1,1), train degree 2, sum alpha = 1",
                        ok ? "as claimed" : "differs"});
    }

    std::sort(rows.begin(), rows.end(), [](const CorpusRow& a, const CorpusRow& b) { return a.id < b.id; });
    return rows;
}

std::string corpus_to_json(const std::vector<CorpusRow>& rows) {
    json j;
    j["schema"] = 1;
    j["rows"] = json::array();
    for (const auto& r : rows)
        j["rows"].push_back({{"id", r.id}, {"status", r.status}, {"claim", r.claim}, {"computed", r.computed}});
    return j.dump(2);
}

}  // namespace evo
