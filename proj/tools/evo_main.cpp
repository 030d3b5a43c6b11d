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

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "evo/baric.hpp"
#include "evo/canonical.hpp"
#include "evo/dynamics.hpp"
#include "evo/errors.hpp"
#include "evo/generators.hpp"
#include "evo/report.hpp"

namespace {

using nlohmann::json;

evo::Algebra load_algebra(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw evo::ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return evo::parse_algebra(ss.str());
}

evo::Vec parse_element(const std::string& text, int dim) {
    evo::Vec v;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) v.push_back(static_cast<evo::fe>(std::stoul(tok, nullptr, 0)));
    if (static_cast<int>(v.size()) != dim) throw evo::ParseError("element has wrong number of coordinates");
    return v;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"analysis of squaring operators on characteristic-2 algebras"};
    app.require_subcommand(1);
    bool as_json = false;
    std::uint64_t seed = 1;
    app.add_flag("--json", as_json, "emit JSON (schema 1)");
    app.add_option("--seed", seed, "seed for randomized commands");

    std::string file, file_b, element, poly_text, gen_kind, out_file;
    int gen_n = 5, gen_dim = 4, gen_p = 1, gen_c = 2, gen_m = 13;

    auto* analyze_cmd = app.add_subcommand("analyze", "full report for an algebra file");
    analyze_cmd->add_option("file", file)->required();

    auto* orbit_cmd = app.add_subcommand("orbit", "orbit of one element");
    orbit_cmd->add_option("file", file)->required();
    orbit_cmd->add_option("--element", element, "comma-separated coordinates")->required();

    auto* train_cmd = app.add_subcommand("train", "minimal annihilating polynomial");
    train_cmd->add_option("file", file)->required();

    auto* canon_cmd = app.add_subcommand("canon", "canonical invariants (F_2)");
    canon_cmd->add_option("file", file)->required();

    auto* semi_cmd = app.add_subcommand("semi-iso", "semi-isomorphism test");
    semi_cmd->add_option("fileA", file)->required();
    semi_cmd->add_option("fileB", file_b)->required();

    auto* strict_cmd = app.add_subcommand("striction", "striction of a GF(2) polynomial");
    strict_cmd->add_option("--poly", poly_text, "bitmask (decimal, 0b..., or 0x...)")->required();

    auto* gen_cmd = app.add_subcommand("gen", "generate an example algebra");
    gen_cmd->add_option("kind", gen_kind, "rule90|rule150|quadratic|cyclic|random")->required();
    gen_cmd->add_option("--n", gen_n, "ring size / cycle length");
    gen_cmd->add_option("--dim", gen_dim, "dimension (random)");
    gen_cmd->add_option("--p", gen_p, "field degree (random)");
    gen_cmd->add_option("--c", gen_c, "constant (quadratic)");
    gen_cmd->add_option("--m", gen_m, "modulus (quadratic)");
    gen_cmd->add_option("-o,--output", out_file, "output file (default stdout)");

    auto* baric_cmd = app.add_subcommand("baric", "weighted analysis");
    baric_cmd->add_option("file", file)->required();

    app.add_subcommand("verify-paper", "replay the published example corpus");

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze_cmd->parsed()) {
            evo::AnalysisReport r = evo::analyze(load_algebra(file));
            std::cout << (as_json ? evo::report_to_json(r) + "\n" : evo::render_report(r));
        } else if (orbit_cmd->parsed()) {
            evo::Algebra A = load_algebra(file);
            evo::OrbitReport o = evo::orbit(A, parse_element(element, A.dim));
            if (as_json) {
                json j{{"schema", 1}, {"preperiod", o.preperiod}, {"period", o.period}, {"orbit", o.orbit}};
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "preperiod " << o.preperiod << ", period " << o.period << "\n";
                for (const auto& v : o.orbit) {
                    for (std::size_t i = 0; i < v.size(); ++i) std::cout << (i ? "," : "") << v[i];
                    std::cout << "\n";
                }
            }
        } else if (train_cmd->parsed()) {
            evo::TrainPolynomial t = evo::train_polynomial(load_algebra(file));
            if (as_json) {
                json j{{"schema", 1},
                       {"text", t.T.to_string()},
                       {"coeffs", t.T.coeffs()},
                       {"degree", t.degree},
                       {"valuation", t.valuation},
                       {"striction", t.sigma}};
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << t.T.to_string() << " (degree " << t.degree << ", valuation " << t.valuation
                          << ", striction " << t.sigma << ")\n";
            }
        } else if (canon_cmd->parsed()) {
            evo::Algebra A = load_algebra(file);
            evo::PeriodicityProfile prof = evo::operator_profile(A);
            json j{{"schema", 1}};
            std::ostringstream os;
            if (prof.kind == evo::PeriodicityProfile::Kind::Nilpotent) {
                auto s = evo::nilpotent_invariants(A);
                j["s"] = s;
                os << "nilpotent, s = (";
                for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
                os << ")\n";
            } else {
                auto ci = evo::periodic_invariants(A);
                j["s"] = ci.s;
                j["t"] = ci.t;
                j["q"] = ci.q;
                j["r"] = ci.r;
                os << "ultimately periodic, s = (";
                for (std::size_t i = 0; i < ci.s.size(); ++i) os << (i ? "," : "") << ci.s[i];
                os << "), t = (";
                for (std::size_t i = 0; i < ci.t.size(); ++i) os << (i ? "," : "") << ci.t[i];
                os << "), q = " << ci.q << ", r = " << ci.r << "\n";
            }
            std::cout << (as_json ? j.dump(2) + "\n" : os.str());
        } else if (semi_cmd->parsed()) {
            evo::SemiIso v = evo::semi_isomorphic(load_algebra(file), load_algebra(file_b));
            std::string text;
            switch (v) {
                case evo::SemiIso::Yes: text = "yes"; break;
                case evo::SemiIso::No: text = "no"; break;
                case evo::SemiIso::NecessaryConditionsPass: text = "necessary-conditions-pass"; break;
                case evo::SemiIso::NecessaryConditionsFail: text = "necessary-conditions-fail"; break;
            }
            if (as_json)
                std::cout << json{{"schema", 1}, {"result", text}}.dump(2) << "\n";
            else
                std::cout << text << "\n";
        } else if (strict_cmd->parsed()) {
            evo::StrictionReport s = evo::striction(evo::Poly2::parse(poly_text));
            if (as_json) {
                json j{{"schema", 1},
                       {"sigma", s.sigma},
                       {"exponents", s.exponents},
                       {"valuation", s.valuation},
                       {"degree", s.degree}};
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "sigma = " << s.sigma << ", E = {";
                for (std::size_t i = 0; i < s.exponents.size(); ++i) std::cout << (i ? "," : "") << s.exponents[i];
                std::cout << "}, valuation " << s.valuation << ", degree " << s.degree << "\n";
            }
        } else if (gen_cmd->parsed()) {
            evo::Algebra A = [&] {
                if (gen_kind == "rule90") return evo::rule90(gen_n);
                if (gen_kind == "rule150") return evo::rule150(gen_n);
                if (gen_kind == "quadratic") return evo::dynsys_algebra(evo::quadratic_map(gen_c, gen_m));
                if (gen_kind == "cyclic") return evo::build_cycle_tail(static_cast<std::uint64_t>(gen_n), 0);
                if (gen_kind == "random")
                    return evo::random_algebra(evo::Field(gen_p), gen_dim, seed, evo::RandomKind::Evolution);
                throw evo::InvalidInput("unknown generator kind: " + gen_kind);
            }();
            std::string text = evo::serialize_algebra(A);
            if (out_file.empty()) {
                std::cout << text << "\n";
            } else {
                std::ofstream out(out_file);
                out << text << "\n";
            }
        } else if (baric_cmd->parsed()) {
            evo::Algebra A = load_algebra(file);
            evo::BaricStructure B = evo::check_weight(A);
            auto [nu, e] = evo::baric_quasi_constant(B);
            auto bp = evo::bernstein_profile(B);
            evo::WeightedTrainIdentity id = evo::weighted_train_identity(B);
            if (as_json) {
                json j{{"schema", 1},
                       {"qc_degree", nu},
                       {"idempotent", e},
                       {"bernstein", {bp.first, bp.second}},
                       {"train_degree", id.degree},
                       {"train_alpha", id.alpha}};
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "quasi-constant degree " << nu << ", Bernstein profile (" << bp.first << ","
                          << bp.second << "), weighted train degree " << id.degree << "\n";
            }
        } else {  // verify-paper
            auto rows = evo::verify_paper();
            bool fail = false;
            if (as_json) {
                std::cout << evo::corpus_to_json(rows) << "\n";
            }
            for (const auto& r : rows) {
                fail = fail || r.status == "FAIL";
                if (!as_json)
                    std::cout << r.status << "  " << r.id << "  claim: " << r.claim
                              << (r.status == "PASS" ? "" : "  computed: " + r.computed) << "\n";
            }
            if (fail) return 1;
        }
    } catch (const evo::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const evo::InvariantViolation& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 3;
    } catch (const evo::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
