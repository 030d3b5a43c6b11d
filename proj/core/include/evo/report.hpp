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

#ifndef EVO_REPORT_HPP
#define EVO_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "evo/algebra.hpp"
#include "evo/baric.hpp"
#include "evo/canonical.hpp"
#include "evo/dynamics.hpp"

namespace evo {

/// Aggregated analysis of one algebra.
struct AnalysisReport {
    std::string classification;  // "nilpotent", "quasi-constant", "ultimately-periodic"
    PeriodicityProfile profile;
    std::optional<std::pair<int, Vec>> quasi_constant;
    TrainPolynomial train;
    /// F_2 nilpotent invariants (s-tuple), when applicable.
    std::optional<std::vector<int>> nilpotent_s;
    /// F_2 ultimately periodic invariants, when their shape validates.
    std::optional<CanonicalInvariants> canonical;
    std::optional<std::string> canonical_note;

    struct BaricSection {
        int qc_degree = 0;
        Vec idempotent;
        int bernstein_n = 0;
        std::uint64_t bernstein_p = 1;
        WeightedTrainIdentity train_identity;
        std::optional<std::string> note;  // set when the kernel is not nilpotent
    };
    std::optional<BaricSection> baric;
};

AnalysisReport analyze(const Algebra& A);

/// Human-readable summary (one value per line).
std::string render_report(const AnalysisReport& r);
/// JSON with a top-level {"schema": 1}.
std::string report_to_json(const AnalysisReport& r);

/// One row of the example-corpus replay. PASS: claim confirmed. FLAG:
/// the identity behind the claim holds but the stated minimal values
/// differ from the oracle (both recorded). FAIL: the claim is false.
struct CorpusRow {
    std::string id;
    std::string status;  // "PASS" / "FLAG" / "FAIL"
    std::string claim;
    std::string computed;
};

/// Replays the published example corpus; rows sorted by id.
std::vector<CorpusRow> verify_paper();

std::string corpus_to_json(const std::vector<CorpusRow>& rows);

}  // namespace evo

#endif
