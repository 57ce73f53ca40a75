/*
   Copyright 2026 The toromon authors

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

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "toromon/monomialize.hpp"

namespace toromon {

// Expected outcomes bundled with a scenario; checked after every run.
// Mode-dependent expectations (lambda, per-mode error kinds) are skipped
// when the command line overrides the scenario's declared mode.
struct ScenarioAssertions {
    std::optional<std::string> verdict;  // "smooth" or "not_smooth"
    std::optional<IntMatrix> exponents;
    std::optional<std::vector<ExactScalar>> lambda;
    std::optional<std::string> rational_error;
    std::optional<std::string> root_error;

    bool operator==(const ScenarioAssertions&) const = default;
};

// Declarative description of a morphism germ: monoids, point data, and
// pullbacks as sums of scaled characters with ambient exponent vectors.
// All exact values travel as strings; nothing passes through floating
// point.
struct Scenario {
    std::string name;
    std::string description;
    FieldPtr base_field;
    FieldPtr residue_field;
    AffineMonoid source_monoid;
    std::vector<int> face;
    std::vector<ExactScalar> char_values;
    AffineMonoid target_monoid;
    // Optional weights of the vanishing z-basis characters.
    std::optional<std::vector<Int>> grading;
    int truncation = 12;
    MonomializeMode mode = MonomializeMode::rational_residue;
    std::vector<std::vector<std::pair<std::vector<Int>, ExactScalar>>>
        pullbacks;
    ScenarioAssertions assertions;

    // Builds the germ at the given weight cutoff (0 uses the scenario's
    // own truncation). Runs every module-level validation.
    MorphismGerm instantiate(int cutoff = 0) const;

    bool equivalent(const Scenario& other) const;
};

// Throws Error(ParseError) on malformed documents and propagates the
// module validation errors; a returned Scenario is fully validated.
Scenario parse_scenario(const std::string& text);
Scenario parse_scenario_json(const nlohmann::ordered_json& doc);

nlohmann::ordered_json scenario_to_json(const Scenario& s);
std::string serialize_scenario(const Scenario& s);

// Scalar and series encodings shared by scenarios and reports.
nlohmann::ordered_json scalar_to_json(const ExactScalar& v);
ExactScalar scalar_from_json(const nlohmann::ordered_json& doc,
                             const FieldPtr& field);
nlohmann::ordered_json series_to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const nlohmann::ordered_json& doc,
                                 const ModelPtr& model);

struct RunOptions {
    // 0 keeps the scenario's truncation.
    int order = 0;
    std::optional<MonomializeMode> mode;
    bool timing = false;
};

// Exit status contract: 0 success; 1 mathematically negative verdict
// (not smooth, obstruction certified, verification refuted); 2 input
// error; 3 internal invariant breach or failed scenario assertion.
struct RunOutcome {
    nlohmann::ordered_json report;
    int exit_code = 0;
    std::string summary;
};

RunOutcome run_check(const Scenario& s, const RunOptions& opt);
RunOutcome run_monomialize(const Scenario& s, const RunOptions& opt);
// Re-verifies a stored monomialize report (self-contained: the scenario
// and the full result are embedded).
RunOutcome run_verify(const std::string& report_text);
RunOutcome run_counterexample(const RunOptions& opt);

}  // namespace toromon
