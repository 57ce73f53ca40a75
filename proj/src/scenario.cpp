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

#include "toromon/scenario.hpp"

#include <chrono>
#include <utility>

#include "toromon/error.hpp"

namespace toromon {

using Json = nlohmann::ordered_json;

namespace {

const Json& need(const Json& doc, const char* key) {
    if (!doc.is_object() || !doc.contains(key))
        fail(ErrorKind::ParseError, std::string("missing field '") + key + "'");
    return doc.at(key);
}

long long need_integer(const Json& doc, const char* key) {
    const Json& v = need(doc, key);
    if (!v.is_number_integer())
        fail(ErrorKind::ParseError, std::string("field '") + key +
                                        "' must be an integer");
    return v.get<long long>();
}

std::string need_string(const Json& doc, const char* key) {
    const Json& v = need(doc, key);
    if (!v.is_string())
        fail(ErrorKind::ParseError,
             std::string("field '") + key + "' must be a string");
    return v.get<std::string>();
}

std::vector<Int> int_vector(const Json& arr, const char* what) {
    if (!arr.is_array())
        fail(ErrorKind::ParseError, std::string(what) + " must be an array");
    std::vector<Int> out;
    for (const Json& v : arr) {
        if (!v.is_number_integer())
            fail(ErrorKind::ParseError,
                 std::string(what) + " entries must be integers");
        out.emplace_back(v.get<long long>());
    }
    return out;
}

Json int_vector_to_json(const std::vector<Int>& v) {
    Json arr = Json::array();
    for (const Int& x : v) arr.push_back(x.convert_to<long long>());
    return arr;
}

IntMatrix int_matrix(const Json& arr, const char* what) {
    if (!arr.is_array() || arr.empty())
        fail(ErrorKind::ParseError,
             std::string(what) + " must be a non-empty array of rows");
    std::vector<std::vector<Int>> rows;
    for (const Json& row : arr) rows.push_back(int_vector(row, what));
    for (const auto& row : rows)
        if (row.size() != rows[0].size())
            fail(ErrorKind::ParseError, std::string(what) + " rows are ragged");
    return IntMatrix::from_rows(rows);
}

Json int_matrix_to_json(const IntMatrix& m) {
    Json arr = Json::array();
    for (int i = 0; i < m.rows; ++i) arr.push_back(int_vector_to_json(m.row(i)));
    return arr;
}

Rat rat_from_json(const Json& v, const char* what) {
    if (!v.is_string())
        fail(ErrorKind::ParseError,
             std::string(what) + " values must be strings like \"-3/4\"");
    return rat_from_string(v.get<std::string>());
}

FieldPtr field_from_json(const Json& doc) {
    if (doc.is_string()) {
        if (doc.get<std::string>() == "Q") return FieldSpec::rationals();
        fail(ErrorKind::ParseError,
             "field must be \"Q\" or a min_poly object");
    }
    if (!doc.is_object())
        fail(ErrorKind::ParseError, "field must be \"Q\" or a min_poly object");
    std::vector<Int> poly;
    for (const Json& c : need(doc, "min_poly")) {
        Rat r = rat_from_json(c, "min_poly");
        if (boost::multiprecision::denominator(r) != 1)
            fail(ErrorKind::ParseError, "min_poly coefficients must be integers");
        poly.push_back(boost::multiprecision::numerator(r));
    }
    bool trusted = doc.contains("trusted_irreducible") &&
                   doc.at("trusted_irreducible").is_boolean() &&
                   doc.at("trusted_irreducible").get<bool>();
    return FieldSpec::number_field(std::move(poly), need_string(doc, "label"),
                                   trusted);
}

Json field_to_json(const FieldPtr& f) {
    if (f->kind == FieldSpec::Kind::rationals) return Json("Q");
    Json doc = Json::object();
    Json poly = Json::array();
    for (const Int& c : f->min_poly) poly.push_back(c.str());
    doc["min_poly"] = std::move(poly);
    doc["label"] = f->generator_label;
    if (f->trusted_irreducible) doc["trusted_irreducible"] = true;
    return doc;
}

AffineMonoid monoid_from_json(const Json& doc, const char* what) {
    int rank = static_cast<int>(need_integer(doc, "rank"));
    std::vector<std::vector<Int>> gens;
    for (const Json& g : need(doc, "generators")) gens.push_back(int_vector(g, what));
    std::optional<std::vector<Int>> grading;
    if (doc.contains("grading"))
        grading = int_vector(doc.at("grading"), "monoid grading");
    return AffineMonoid::create(rank, std::move(gens), std::move(grading));
}

Json monoid_to_json(const AffineMonoid& m) {
    Json doc = Json::object();
    doc["rank"] = m.ambient_rank;
    Json gens = Json::array();
    for (const auto& g : m.generators) gens.push_back(int_vector_to_json(g));
    doc["generators"] = std::move(gens);
    doc["grading"] = int_vector_to_json(m.grading);
    return doc;
}

bool monoid_equal(const AffineMonoid& a, const AffineMonoid& b) {
    return a.ambient_rank == b.ambient_rank && a.generators == b.generators &&
           a.grading == b.grading;
}

std::vector<ExactScalar> scalar_list(const Json& arr, const FieldPtr& field,
                                     const char* what) {
    if (!arr.is_array())
        fail(ErrorKind::ParseError, std::string(what) + " must be an array");
    std::vector<ExactScalar> out;
    for (const Json& v : arr) out.push_back(scalar_from_json(v, field));
    return out;
}

Json scalar_list_to_json(const std::vector<ExactScalar>& values) {
    Json arr = Json::array();
    for (const ExactScalar& v : values) arr.push_back(scalar_to_json(v));
    return arr;
}

std::string mode_name(MonomializeMode mode) {
    return mode == MonomializeMode::rational_residue ? "rational"
                                                     : "root-capable";
}

MonomializeMode mode_from_name(const std::string& name) {
    if (name == "rational") return MonomializeMode::rational_residue;
    if (name == "root-capable") return MonomializeMode::root_capable;
    fail(ErrorKind::ParseError,
         "mode must be \"rational\" or \"root-capable\", got \"" + name + "\"");
}

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NotLogSmooth:
        case ErrorKind::NotMonomialTimesUnit:
        case ErrorKind::ResidueFieldHypothesisViolated:
        case ErrorKind::RootExtractionFailed:
        case ErrorKind::Condition1Violated:
        case ErrorKind::SearchExhausted:
            return 1;
        case ErrorKind::InternalError:
            return 3;
        default:
            return 2;
    }
}

Json error_to_json(const Error& e) {
    Json doc = Json::object();
    doc["kind"] = to_string(e.kind());
    doc["message"] = e.what();
    if (!e.witness().empty()) doc["witness"] = e.witness();
    return doc;
}

Json matrix_of_scalars(const std::vector<std::vector<ExactScalar>>& m) {
    Json arr = Json::array();
    for (const auto& row : m) arr.push_back(scalar_list_to_json(row));
    return arr;
}

Json series_list_to_json(const std::vector<TruncatedSeries>& list) {
    Json arr = Json::array();
    for (const TruncatedSeries& s : list) arr.push_back(series_to_json(s));
    return arr;
}

std::vector<TruncatedSeries> series_list_from_json(const Json& arr,
                                                   const ModelPtr& model,
                                                   const char* what) {
    if (!arr.is_array())
        fail(ErrorKind::ParseError, std::string(what) + " must be an array");
    std::vector<TruncatedSeries> out;
    for (const Json& s : arr) out.push_back(series_from_json(s, model));
    return out;
}

Json verification_to_json(const DiagramReport& rep) {
    Json doc = Json::object();
    doc["all_pass"] = rep.all_pass;
    doc["max_weight"] = rep.max_weight.convert_to<long long>();
    Json checks = Json::array();
    for (const DiagramCheck& c : rep.checks) {
        Json entry = Json::object();
        entry["index"] = c.character_index;
        entry["pass"] = c.pass;
        entry["weight"] = c.weight_checked.convert_to<long long>();
        checks.push_back(std::move(entry));
    }
    doc["checks"] = std::move(checks);
    return doc;
}

// Collected outcomes of the scenario's bundled expectations.
struct AssertionLog {
    int checked = 0;
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& message) {
        ++checked;
        if (!ok) failures.push_back(message);
    }

    Json to_json() const {
        Json doc = Json::object();
        doc["checked"] = checked;
        Json f = Json::array();
        for (const std::string& msg : failures) f.push_back(msg);
        doc["failures"] = std::move(f);
        return doc;
    }
};

const std::optional<std::string>& expected_error(const Scenario& s,
                                                 MonomializeMode mode) {
    return mode == MonomializeMode::rational_residue ? s.assertions.rational_error
                                                     : s.assertions.root_error;
}

class Stopwatch {
  public:
    long long elapsed_ms() const {
        auto now = std::chrono::steady_clock::now();
        return std::chrono::duration_cast<std::chrono::milliseconds>(now -
                                                                     start_)
            .count();
    }

  private:
    std::chrono::steady_clock::time_point start_ =
        std::chrono::steady_clock::now();
};

}  // namespace

ExactScalar scalar_from_json(const Json& doc, const FieldPtr& field) {
    if (doc.is_string())
        return ExactScalar(field, rat_from_json(doc, "scalar"));
    if (doc.is_array()) {
        std::vector<Rat> coeffs;
        for (const Json& c : doc) coeffs.push_back(rat_from_json(c, "scalar"));
        if (static_cast<int>(coeffs.size()) > field->degree())
            fail(ErrorKind::ParseError,
                 "scalar has more coefficients than the field degree");
        coeffs.resize(field->degree(), Rat(0));
        return ExactScalar(field, std::move(coeffs));
    }
    fail(ErrorKind::ParseError,
         "scalar must be a string or an array of strings");
}

Json scalar_to_json(const ExactScalar& v) {
    if (v.field()->kind == FieldSpec::Kind::rationals)
        return Json(rat_to_string(v.coeffs()[0]));
    Json arr = Json::array();
    std::vector<Rat> coeffs = v.coeffs();
    coeffs.resize(v.field()->degree(), Rat(0));
    for (const Rat& c : coeffs) arr.push_back(rat_to_string(c));
    return arr;
}

Json series_to_json(const TruncatedSeries& s) {
    Json arr = Json::array();
    for (const auto& [key, coeff] : s.terms()) {
        Json term = Json::object();
        term["sharp"] = int_vector_to_json(key.sharp);
        term["sdeg"] = int_vector_to_json(key.sdeg);
        term["coeff"] = scalar_to_json(coeff);
        arr.push_back(std::move(term));
    }
    return arr;
}

TruncatedSeries series_from_json(const Json& doc, const ModelPtr& model) {
    if (!doc.is_array())
        fail(ErrorKind::ParseError, "series must be an array of terms");
    TruncatedSeries out = TruncatedSeries::zero(model);
    int r = model->vanishing_count();
    int u = model->unit_count();
    for (const Json& term : doc) {
        std::vector<Int> sharp = int_vector(need(term, "sharp"), "sharp");
        std::vector<Int> sdeg = int_vector(need(term, "sdeg"), "sdeg");
        if (static_cast<int>(sharp.size()) != r ||
            static_cast<int>(sdeg.size()) != u)
            fail(ErrorKind::ParseError,
                 "series term exponents do not match the model split");
        out.accumulate(sharp, sdeg,
                       scalar_from_json(need(term, "coeff"), model->field()));
    }
    return out;
}

MorphismGerm Scenario::instantiate(int cutoff) const {
    int n = cutoff > 0 ? cutoff : truncation;
    ToricPoint point =
        ToricPoint::create(source_monoid, face, char_values, residue_field);
    ModelPtr model = LocalModel::create(std::move(point), n, grading);
    std::vector<TruncatedSeries> series;
    for (const auto& terms : pullbacks) {
        TruncatedSeries y = TruncatedSeries::zero(model);
        for (const auto& [exponent, coeff] : terms)
            y = y + TruncatedSeries::character(model, exponent, coeff);
        series.push_back(std::move(y));
    }
    return MorphismGerm::create(model, target_monoid, std::move(series),
                                base_field);
}

bool Scenario::equivalent(const Scenario& other) const {
    return name == other.name && description == other.description &&
           base_field->same_field(*other.base_field) &&
           residue_field->same_field(*other.residue_field) &&
           monoid_equal(source_monoid, other.source_monoid) &&
           face == other.face && char_values == other.char_values &&
           monoid_equal(target_monoid, other.target_monoid) &&
           grading == other.grading && truncation == other.truncation &&
           mode == other.mode && pullbacks == other.pullbacks &&
           assertions == other.assertions;
}

Scenario parse_scenario_json(const Json& doc) {
    if (!doc.is_object())
        fail(ErrorKind::ParseError, "scenario must be a JSON object");
    if (need_integer(doc, "schema") != 1)
        fail(ErrorKind::ParseError, "unsupported scenario schema version");
    Scenario s;
    s.name = need_string(doc, "name");
    if (s.name.empty())
        fail(ErrorKind::ParseError, "scenario name must be non-empty");
    if (doc.contains("description"))
        s.description = need_string(doc, "description");
    s.base_field = field_from_json(need(doc, "base_field"));
    s.residue_field = field_from_json(need(doc, "residue_field"));
    s.source_monoid = monoid_from_json(need(doc, "source_monoid"),
                                       "source_monoid generators");
    const Json& point = need(doc, "point");
    for (const Json& v : need(point, "face")) {
        if (!v.is_number_integer())
            fail(ErrorKind::ParseError, "face entries must be integers");
        s.face.push_back(static_cast<int>(v.get<long long>()));
    }
    s.char_values =
        scalar_list(need(point, "char_values"), s.residue_field, "char_values");
    s.target_monoid = monoid_from_json(need(doc, "target_monoid"),
                                       "target_monoid generators");
    if (doc.contains("grading"))
        s.grading = int_vector(doc.at("grading"), "grading");
    long long truncation = need_integer(doc, "truncation");
    if (truncation < 1 || truncation > 1000)
        fail(ErrorKind::ParseError, "truncation must be between 1 and 1000");
    s.truncation = static_cast<int>(truncation);
    s.mode = mode_from_name(need_string(doc, "mode"));
    if (!doc.contains("pullbacks") || !doc.at("pullbacks").is_array() ||
        doc.at("pullbacks").empty())
        fail(ErrorKind::ValidationError, "scenario has no pullbacks");
    for (const Json& pb : doc.at("pullbacks")) {
        if (!pb.is_array() || pb.empty())
            fail(ErrorKind::ValidationError,
                 "each pullback needs at least one term");
        std::vector<std::pair<std::vector<Int>, ExactScalar>> terms;
        for (const Json& term : pb)
            terms.emplace_back(
                int_vector(need(term, "exponent"), "pullback exponent"),
                scalar_from_json(need(term, "coeff"), s.residue_field));
        s.pullbacks.push_back(std::move(terms));
    }
    if (doc.contains("assertions")) {
        const Json& a = doc.at("assertions");
        if (a.contains("verdict")) {
            std::string v = need_string(a, "verdict");
            if (v != "smooth" && v != "not_smooth")
                fail(ErrorKind::ParseError,
                     "assertion verdict must be smooth or not_smooth");
            s.assertions.verdict = v;
        }
        if (a.contains("exponents"))
            s.assertions.exponents =
                int_matrix(a.at("exponents"), "assertion exponents");
        if (a.contains("lambda"))
            s.assertions.lambda =
                scalar_list(a.at("lambda"), s.residue_field, "assertion lambda");
        if (a.contains("rational_error"))
            s.assertions.rational_error = need_string(a, "rational_error");
        if (a.contains("root_error"))
            s.assertions.root_error = need_string(a, "root_error");
    }
    // Force every module-level validation before the scenario is used.
    s.instantiate();
    return s;
}

Scenario parse_scenario(const std::string& text) {
    Json doc = Json::parse(text, nullptr, false);
    if (doc.is_discarded())
        fail(ErrorKind::ParseError, "scenario is not well-formed JSON");
    return parse_scenario_json(doc);
}

Json scenario_to_json(const Scenario& s) {
    Json doc = Json::object();
    doc["schema"] = 1;
    doc["name"] = s.name;
    doc["description"] = s.description;
    doc["base_field"] = field_to_json(s.base_field);
    doc["residue_field"] = field_to_json(s.residue_field);
    doc["source_monoid"] = monoid_to_json(s.source_monoid);
    Json point = Json::object();
    Json face = Json::array();
    for (int i : s.face) face.push_back(i);
    point["face"] = std::move(face);
    point["char_values"] = scalar_list_to_json(s.char_values);
    doc["point"] = std::move(point);
    doc["target_monoid"] = monoid_to_json(s.target_monoid);
    if (s.grading) doc["grading"] = int_vector_to_json(*s.grading);
    doc["truncation"] = s.truncation;
    doc["mode"] = mode_name(s.mode);
    Json pullbacks = Json::array();
    for (const auto& pb : s.pullbacks) {
        Json terms = Json::array();
        for (const auto& [exponent, coeff] : pb) {
            Json term = Json::object();
            term["exponent"] = int_vector_to_json(exponent);
            term["coeff"] = scalar_to_json(coeff);
            terms.push_back(std::move(term));
        }
        pullbacks.push_back(std::move(terms));
    }
    doc["pullbacks"] = std::move(pullbacks);
    const ScenarioAssertions& a = s.assertions;
    if (a.verdict || a.exponents || a.lambda || a.rational_error ||
        a.root_error) {
        Json asrt = Json::object();
        if (a.verdict) asrt["verdict"] = *a.verdict;
        if (a.exponents) asrt["exponents"] = int_matrix_to_json(*a.exponents);
        if (a.lambda) asrt["lambda"] = scalar_list_to_json(*a.lambda);
        if (a.rational_error) asrt["rational_error"] = *a.rational_error;
        if (a.root_error) asrt["root_error"] = *a.root_error;
        doc["assertions"] = std::move(asrt);
    }
    return doc;
}

std::string serialize_scenario(const Scenario& s) {
    return scenario_to_json(s).dump(2) + "\n";
}

RunOutcome run_check(const Scenario& s, const RunOptions& opt) {
    Stopwatch watch;
    int order = opt.order > 0 ? opt.order : s.truncation;
    Json j = Json::object();
    j["schema"] = 1;
    j["command"] = "check";
    j["scenario"] = scenario_to_json(s);
    j["order"] = order;
    RunOutcome out;
    AssertionLog log;
    try {
        MorphismGerm f = s.instantiate(order);
        LogJacobian jac = log_jacobian(f);
        LogSmoothResult res = is_log_smooth(f);
        j["verdict"] = res.smooth ? "smooth" : "not_smooth";
        j["rank"] = res.rank;
        j["target_rank"] = f.target_rank;
        j["jacobian_at_point"] = matrix_of_scalars(jac.at_point);
        Json rows = Json::array();
        for (int r : res.minor_rows) rows.push_back(r);
        Json cols = Json::array();
        for (int c : res.minor_cols) cols.push_back(c);
        j["minor_rows"] = std::move(rows);
        j["minor_cols"] = std::move(cols);
        if (res.minor_det) j["minor_det"] = scalar_to_json(*res.minor_det);
        if (s.assertions.verdict)
            log.expect(*s.assertions.verdict ==
                           (res.smooth ? "smooth" : "not_smooth"),
                       "verdict: expected " + *s.assertions.verdict);
        out.exit_code = res.smooth ? 0 : 1;
        out.summary = s.name + ": " +
                      (res.smooth ? "log smooth (rank " +
                                        std::to_string(res.rank) + ")"
                                  : "NOT log smooth (rank " +
                                        std::to_string(res.rank) + " < " +
                                        std::to_string(f.target_rank) + ")");
    } catch (const Error& e) {
        j["verdict"] = "error";
        j["error"] = error_to_json(e);
        if (s.assertions.verdict)
            log.expect(false, "verdict: expected " + *s.assertions.verdict +
                                  " but the run failed");
        out.exit_code = exit_code_for(e.kind());
        out.summary = s.name + ": error " + std::string(to_string(e.kind()));
    }
    j["assertions_checked"] = log.to_json();
    if (!log.failures.empty()) {
        out.exit_code = 3;
        out.summary += " [scenario assertions FAILED]";
    }
    if (opt.timing) j["timing_ms"] = watch.elapsed_ms();
    out.report = std::move(j);
    return out;
}

RunOutcome run_monomialize(const Scenario& s, const RunOptions& opt) {
    Stopwatch watch;
    int order = opt.order > 0 ? opt.order : s.truncation;
    MonomializeMode mode = opt.mode.value_or(s.mode);
    Json j = Json::object();
    j["schema"] = 1;
    j["command"] = "monomialize";
    j["scenario"] = scenario_to_json(s);
    j["order"] = order;
    j["mode"] = mode_name(mode);
    RunOutcome out;
    AssertionLog log;
    try {
        MorphismGerm f = s.instantiate(order);
        MonomializationResult res = monomialize_pipeline(f, mode);
        j["verdict"] =
            res.verification.all_pass ? "monomialized" : "verification_failed";
        j["jacobian_at_point"] =
            matrix_of_scalars(log_jacobian(res.augmented).at_point);
        j["exponents"] = int_matrix_to_json(res.exponents);
        j["lambda"] = scalar_list_to_json(res.lambda);
        j["translation"] = scalar_list_to_json(res.t.values);
        j["w"] = series_list_to_json(res.w);
        j["epsilon"] = series_list_to_json(res.epsilon);
        j["monomial_map"] = int_matrix_to_json(res.g.lattice_map);
        j["g_regular_on_chart"] = res.g_regular_on_chart;
        j["augmented_target"] = monoid_to_json(res.augmented.target_monoid);
        j["augmented_pullbacks"] = series_list_to_json(res.augmented.pullbacks);
        j["verification"] = verification_to_json(res.verification);

        if (s.assertions.verdict)
            log.expect(*s.assertions.verdict == "smooth",
                       "verdict: expected not_smooth but the pipeline ran");
        if (const auto& err = expected_error(s, mode); err)
            log.expect(false,
                       "expected error " + *err + " but the pipeline ran");
        if (s.assertions.exponents)
            log.expect(res.exponents == *s.assertions.exponents,
                       "exponent matrix differs from the scenario assertion");
        if (s.assertions.lambda && mode == s.mode)
            log.expect(res.lambda == *s.assertions.lambda,
                       "lambda differs from the scenario assertion");
        out.exit_code = res.verification.all_pass ? 0 : 3;
        out.summary =
            s.name + ": " +
            (res.verification.all_pass
                 ? "monomialized; diagram verified to weight " +
                       std::to_string(order)
                 : "monomialized but diagram verification FAILED");
    } catch (const Error& e) {
        j["verdict"] = "error";
        j["error"] = error_to_json(e);
        if (const auto& err = expected_error(s, mode); err)
            log.expect(*err == to_string(e.kind()),
                       "expected error " + *err + " but got " +
                           to_string(e.kind()));
        else if (s.assertions.verdict && *s.assertions.verdict == "smooth" &&
                 e.kind() == ErrorKind::NotLogSmooth)
            log.expect(false, "expected a smooth germ but got NotLogSmooth");
        out.exit_code = exit_code_for(e.kind());
        out.summary = s.name + ": error " + std::string(to_string(e.kind()));
    }
    j["assertions_checked"] = log.to_json();
    if (!log.failures.empty()) {
        out.exit_code = 3;
        out.summary += " [scenario assertions FAILED]";
    }
    if (opt.timing) j["timing_ms"] = watch.elapsed_ms();
    out.report = std::move(j);
    return out;
}

RunOutcome run_verify(const std::string& report_text) {
    RunOutcome out;
    Json j = Json::object();
    j["schema"] = 1;
    j["command"] = "verify";
    try {
        Json doc = Json::parse(report_text, nullptr, false);
        if (doc.is_discarded())
            fail(ErrorKind::ParseError, "report is not well-formed JSON");
        if (need_string(doc, "command") != "monomialize")
            fail(ErrorKind::ParseError, "verify expects a monomialize report");
        std::string verdict = need_string(doc, "verdict");
        if (verdict == "error")
            fail(ErrorKind::ParseError,
                 "report carries an error, not a result");
        Scenario s = parse_scenario_json(need(doc, "scenario"));
        int order = static_cast<int>(need_integer(doc, "order"));
        j["scenario_name"] = s.name;
        j["order"] = order;
        j["mode"] = need_string(doc, "mode");

        MorphismGerm f = s.instantiate(order);
        const ModelPtr& model = f.source_model;
        MonomializationResult res;
        res.exponents = int_matrix(need(doc, "exponents"), "exponents");
        res.lambda =
            scalar_list(need(doc, "lambda"), s.residue_field, "lambda");
        res.w = series_list_from_json(need(doc, "w"), model, "w");
        res.epsilon =
            series_list_from_json(need(doc, "epsilon"), model, "epsilon");
        IntMatrix gmap = int_matrix(need(doc, "monomial_map"), "monomial_map");
        res.g = ToricMorphismData::create(model->ambient_rank(), gmap.rows,
                                          gmap);
        res.t = TranslationPoint::create(scalar_list(
            need(doc, "translation"), s.residue_field, "translation"));
        AffineMonoid aug_target =
            monoid_from_json(need(doc, "augmented_target"), "augmented_target");
        std::vector<TruncatedSeries> aug_pullbacks = series_list_from_json(
            need(doc, "augmented_pullbacks"), model, "augmented_pullbacks");
        res.augmented = MorphismGerm::create(model, std::move(aug_target),
                                             std::move(aug_pullbacks),
                                             s.base_field);
        DiagramReport rep = verify_diagram(f, res);
        j["verdict"] = rep.all_pass ? "verified" : "refuted";
        j["verification"] = verification_to_json(rep);
        out.exit_code = rep.all_pass ? 0 : 1;
        out.summary = s.name + ": stored result " +
                      (rep.all_pass ? "verified to weight " +
                                          std::to_string(order)
                                    : "REFUTED");
    } catch (const Error& e) {
        j["verdict"] = "error";
        j["error"] = error_to_json(e);
        out.exit_code = exit_code_for(e.kind());
        out.summary = std::string("verify: error ") + to_string(e.kind());
    }
    out.report = std::move(j);
    return out;
}

RunOutcome run_counterexample(const RunOptions& opt) {
    Stopwatch watch;
    int order = opt.order > 0 ? opt.order : 12;
    Json j = Json::object();
    j["schema"] = 1;
    j["command"] = "counterexample";
    j["order"] = order;
    RunOutcome out;
    try {
        CounterexampleCertificate cert = certify_counterexample(order);
        j["verdict"] = cert.certified ? "certified" : "not_certified";
        j["jacobian_value"] = scalar_to_json(cert.jacobian_value);
        j["smooth"] = cert.smooth;
        j["series_oracle_agrees"] = cert.series_oracle_agrees;
        j["quartic_polynomial_identity"] = cert.quartic_polynomial_identity;
        j["real_axis_excluded"] = cert.real_axis_excluded;
        j["imaginary_axis_excluded"] = cert.imaginary_axis_excluded;
        j["no_rational_root"] = cert.no_rational_root;
        j["rational_mode_rejected"] = cert.rational_mode_rejected;
        j["root_mode_rejected"] = cert.root_mode_rejected;
        j["summary"] = cert.summary;
        // A certified obstruction is a negative mathematical verdict.
        out.exit_code = cert.certified ? 1 : 3;
        out.summary = cert.certified
                          ? "counterexample certified: " + cert.summary
                          : "counterexample certification FAILED";
    } catch (const Error& e) {
        j["verdict"] = "error";
        j["error"] = error_to_json(e);
        out.exit_code = exit_code_for(e.kind());
        out.summary = std::string("counterexample: error ") +
                      to_string(e.kind());
    }
    if (opt.timing) j["timing_ms"] = watch.elapsed_ms();
    out.report = std::move(j);
    return out;
}

}  // namespace toromon
