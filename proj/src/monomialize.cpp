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

#include "toromon/monomialize.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "toromon/error.hpp"

namespace toromon {

MonomialUnitForm extract_monomial_unit(const TruncatedSeries& y) {
    const ModelPtr& model = y.model();
    if (!model)
        fail(ErrorKind::ValidationError, "series without a model");
    if (y.is_zero())
        fail(ErrorKind::NotMonomialTimesUnit,
             "the zero series is not a monomial times a unit");
    int r = model->vanishing_count();
    int m = model->ambient_rank();

    // A valid exponent is contributed by the unit's constant term, so it
    // occurs in the support with s-degree zero and minimal sharp weight;
    // every other support sharp must exceed it by a sharp monoid element.
    std::optional<Int> min_sharp_weight;
    for (const auto& [key, coeff] : y.terms()) {
        Int sw = model->sharp.weight(key.sharp);
        if (!min_sharp_weight || sw < *min_sharp_weight) min_sharp_weight = sw;
    }
    for (const auto& [key, coeff] : y.terms()) {
        bool sdeg_zero = std::all_of(key.sdeg.begin(), key.sdeg.end(),
                                     [](const Int& d) { return d == 0; });
        if (!sdeg_zero || model->sharp.weight(key.sharp) != *min_sharp_weight)
            continue;
        const std::vector<Int>& alpha = key.sharp;
        bool divides_all = true;
        for (const auto& [other, c2] : y.terms()) {
            std::vector<Int> diff(r);
            for (int i = 0; i < r; ++i) diff[i] = other.sharp[i] - alpha[i];
            if (!model->sharp.contains(diff)) {
                divides_all = false;
                break;
            }
        }
        if (!divides_all) continue;
        MonomialUnitForm form;
        form.exponent.assign(m, Int(0));
        for (int i = 0; i < r; ++i) form.exponent[i] = alpha[i];
        form.unit = TruncatedSeries::zero(model);
        for (const auto& [other, c2] : y.terms()) {
            std::vector<Int> diff(r);
            for (int i = 0; i < r; ++i) diff[i] = other.sharp[i] - alpha[i];
            form.unit.accumulate(diff, other.sdeg, c2);
        }
        return form;
    }
    fail(ErrorKind::NotMonomialTimesUnit,
         "no character divides every term of the series", y.to_string());
}

std::vector<TruncatedSeries> hensel_units(const IntMatrix& e,
                                          const std::vector<TruncatedSeries>& w) {
    int k = e.rows;
    if (e.cols != k || static_cast<int>(w.size()) != k)
        fail(ErrorKind::ValidationError,
             "exponent matrix and unit list sizes do not match");
    if (k == 0) return {};
    const ModelPtr& model = w[0].model();
    if (!model) fail(ErrorKind::ValidationError, "series without a model");
    for (const TruncatedSeries& wj : w) {
        if (!wj.model() || !wj.model()->equivalent(*model))
            fail(ErrorKind::ValidationError, "units over different models");
        if (!wj.value_at_point().is_one())
            fail(ErrorKind::BadConstantTerm,
                 "multiplicative lifting requires units with constant term one");
    }
    DetInverse inv = det_and_inverse(e);
    if (inv.det == 0)
        fail(ErrorKind::SingularMatrix, "exponent matrix is singular");

    // log turns prod_i eps_i^{E_{j,i}} = w_j into the linear system
    // E . log eps = log w, solved exactly by the rational inverse.
    std::vector<TruncatedSeries> logs;
    logs.reserve(w.size());
    for (const TruncatedSeries& wj : w) logs.push_back(wj.log());
    const FieldPtr& field = model->field();
    std::vector<TruncatedSeries> eps;
    eps.reserve(w.size());
    for (int i = 0; i < k; ++i) {
        TruncatedSeries sum = TruncatedSeries::zero(model);
        for (int j = 0; j < k; ++j) {
            const Rat& c = inv.inverse->at(i, j);
            if (c != 0) sum = sum + logs[j].scaled(ExactScalar(field, c));
        }
        eps.push_back(sum.exp());
    }
    return eps;
}

namespace {

// prod_j values_j^{M_{k,j}} for one row k of an integer matrix.
ExactScalar mono_power_row(const std::vector<ExactScalar>& values,
                           const IntMatrix& m, int k, const FieldPtr& field) {
    ExactScalar out(field, Rat(1));
    for (int j = 0; j < m.cols; ++j) {
        long e = m.at(k, j).convert_to<long>();
        if (e != 0) out *= values[j].pow(e);
    }
    return out;
}

bool in_base_field(const ExactScalar& v, const FieldPtr& base) {
    if (base->kind == FieldSpec::Kind::rationals)
        return v.as_rational().has_value();
    // Germ validation pins any non-rational base to the residue field.
    return true;
}

}  // namespace

MonomializationResult monomialize_pipeline(const MorphismGerm& f,
                                           MonomializeMode mode) {
    MorphismGerm aug = augment_to_equal_dim(f);
    const ModelPtr& model = aug.source_model;
    const FieldPtr& field = model->field();
    int m = aug.source_rank();
    int r = model->vanishing_count();
    ExactScalar one(field, Rat(1));

    std::vector<MonomialUnitForm> forms;
    forms.reserve(m);
    for (int j = 0; j < m; ++j)
        forms.push_back(extract_monomial_unit(aug.pullbacks[j]));

    // The sharp block has full column rank because the log Jacobian is
    // invertible at the point; complete it to a nonsingular square matrix.
    IntMatrix sharp_block(m, r);
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < r; ++i) sharp_block.at(j, i) = forms[j].exponent[i];
    IntMatrix e_mat = complete_columns(sharp_block);

    // Fold the completion's unit characters out of each unit cofactor, so
    // that pullback_j = z^{E_j} . u_tilde_j exactly.
    std::vector<TruncatedSeries> u_tilde;
    u_tilde.reserve(m);
    for (int j = 0; j < m; ++j) {
        std::vector<Int> c(m, Int(0));
        bool any = false;
        for (int i = r; i < m; ++i) {
            c[i] = -e_mat.at(j, i);
            any = any || c[i] != 0;
        }
        TruncatedSeries adjusted = forms[j].unit;
        if (any) {
            std::vector<Int> ambient =
                apply_matrix(model->point.split.full_basis, c);
            adjusted = adjusted * TruncatedSeries::character(model, ambient, one);
        }
        u_tilde.push_back(std::move(adjusted));
    }

    std::vector<ExactScalar> lambda;
    std::vector<TruncatedSeries> w;
    std::vector<TruncatedSeries> epsilon;
    if (mode == MonomializeMode::rational_residue) {
        for (int j = 0; j < m; ++j) {
            ExactScalar value = u_tilde[j].value_at_point();
            if (!in_base_field(value, aug.base_field))
                fail(ErrorKind::ResidueFieldHypothesisViolated,
                     "unit constant of pullback " + std::to_string(j) + " is " +
                         value.to_string() + ", outside the base field",
                     value.to_string());
            lambda.push_back(std::move(value));
        }
        for (int j = 0; j < m; ++j)
            w.push_back(u_tilde[j].scaled(lambda[j].inverse()));
        epsilon = hensel_units(e_mat, w);
    } else {
        // Absorb the unit constants a_j into epsilon: solve
        // prod_i c_i^{E_{j,i}} = a_j by diagonalizing E with unimodular
        // row and column operations, extracting roots along the diagonal.
        std::vector<ExactScalar> a;
        for (int j = 0; j < m; ++j) a.push_back(u_tilde[j].value_at_point());
        SnfResult s = snf(e_mat);
        std::vector<ExactScalar> y;
        for (int k = 0; k < m; ++k) {
            ExactScalar b = mono_power_row(a, s.u, k, field);
            require_internal(s.d.at(k, k) > 0, "degenerate diagonal exponent");
            unsigned dk = s.d.at(k, k).convert_to<unsigned>();
            RootResult root = nth_root(b, dk);
            if (!root.root)
                fail(ErrorKind::RootExtractionFailed,
                     "no " + std::to_string(dk) + "-th root of " + b.to_string() +
                         " in the residue field" +
                         (root.certified ? "" : " (bounded search inconclusive)"),
                     b.to_string());
            y.push_back(std::move(*root.root));
        }
        std::vector<ExactScalar> constants;
        for (int i = 0; i < m; ++i)
            constants.push_back(mono_power_row(y, s.v, i, field));
        for (int j = 0; j < m; ++j) {
            ExactScalar check = mono_power_row(constants, e_mat, j, field);
            require_internal(check == a[j], "constant lifting solve failed");
        }
        lambda.assign(m, one);
        w = u_tilde;
        std::vector<TruncatedSeries> normalized;
        for (int j = 0; j < m; ++j)
            normalized.push_back(u_tilde[j].scaled(a[j].inverse()));
        epsilon = hensel_units(e_mat, normalized);
        for (int i = 0; i < m; ++i) epsilon[i] = epsilon[i].scaled(constants[i]);
    }

    IntMatrix gmap(m, m);
    bool regular = true;
    for (int j = 0; j < m; ++j) {
        std::vector<Int> zrow = e_mat.row(j);
        std::vector<Int> ambient =
            apply_matrix(model->point.split.full_basis, zrow);
        for (int i = 0; i < m; ++i) gmap.at(j, i) = ambient[i];
        std::vector<Int> sharp(zrow.begin(), zrow.begin() + r);
        regular = regular && model->sharp.contains(sharp);
    }

    MonomializationResult res;
    res.exponents = e_mat;
    res.lambda = std::move(lambda);
    res.w = std::move(w);
    res.epsilon = std::move(epsilon);
    res.g = ToricMorphismData::create(m, m, gmap);
    res.t = translation_from_lambda(res.lambda);
    res.augmented = std::move(aug);
    res.g_regular_on_chart = regular;
    res.verification = verify_diagram(f, res);
    return res;
}

DiagramReport verify_diagram(const MorphismGerm& f,
                             const MonomializationResult& res) {
    const MorphismGerm& aug = res.augmented;
    if (!f.source_model || !aug.source_model ||
        !aug.source_model->equivalent(*f.source_model))
        fail(ErrorKind::ValidationError, "result does not belong to the germ");
    if (aug.target_rank < f.target_rank)
        fail(ErrorKind::ValidationError,
             "result has fewer characters than the germ");
    for (int j = 0; j < f.target_rank; ++j)
        if (!(aug.pullbacks[j] == f.pullbacks[j]))
            fail(ErrorKind::ValidationError,
                 "result does not extend the germ's pullbacks");
    const ModelPtr& model = aug.source_model;
    int m = aug.source_rank();
    if (res.exponents.rows != aug.target_rank || res.exponents.cols != m ||
        static_cast<int>(res.lambda.size()) != aug.target_rank ||
        static_cast<int>(res.epsilon.size()) != m ||
        res.g.lattice_map.rows != aug.target_rank)
        fail(ErrorKind::ValidationError, "result shape does not match the germ");

    ExactScalar one(model->field(), Rat(1));
    DiagramReport report;
    report.max_weight = Int(model->cutoff);
    report.all_pass = true;
    for (int j = 0; j < aug.target_rank; ++j) {
        TruncatedSeries lhs = aug.pullbacks[j].scaled(res.lambda[j].inverse());
        TruncatedSeries rhs =
            TruncatedSeries::character(model, res.g.lattice_map.row(j), one);
        for (int i = 0; i < m; ++i) {
            long k = res.exponents.at(j, i).convert_to<long>();
            if (k != 0) rhs = rhs * res.epsilon[i].pow(k);
        }
        DiagramCheck check;
        check.character_index = j;
        check.pass = lhs == rhs;
        if (check.pass) {
            check.weight_checked = Int(model->cutoff);
        } else {
            TruncatedSeries diff = lhs - rhs;
            check.weight_checked = diff.terms().begin()->first.weight;
            report.all_pass = false;
        }
        report.checks.push_back(std::move(check));
    }
    return report;
}

EtaleResult etale_check(const MorphismGerm& psi) {
    const ModelPtr& model = psi.source_model;
    int m = psi.source_rank();
    int r = model->vanishing_count();
    if (psi.target_rank != m)
        fail(ErrorKind::ValidationError,
             "etale check requires one pullback per source direction");

    // Condition 1: each vanishing character pulls back to itself times a
    // unit; each unit character pulls back to a unit.
    std::vector<MonomialUnitForm> forms;
    forms.reserve(m);
    for (int i = 0; i < m; ++i)
        forms.push_back(extract_monomial_unit(psi.pullbacks[i]));
    for (int i = 0; i < m; ++i) {
        std::vector<Int> want(m, Int(0));
        if (i < r) want[i] = 1;
        if (forms[i].exponent != want) {
            std::string found = "(";
            for (int k = 0; k < m; ++k)
                found += (k ? "," : "") + forms[i].exponent[k].str();
            found += ")";
            fail(ErrorKind::Condition1Violated,
                 "pullback of direction " + std::to_string(i) +
                     " carries the character exponent " + found,
                 found);
        }
    }

    LogJacobian jac = log_jacobian(psi);
    const FieldPtr& field = model->field();
    EtaleResult out;
    out.full_det = scalar_det(jac.at_point, field);
    out.vanishing_block_zero = true;
    for (int i = r; i < m; ++i)
        for (int k = 0; k < r; ++k)
            if (!jac.at_point[i][k].is_zero()) out.vanishing_block_zero = false;
    std::vector<std::vector<ExactScalar>> unit_block;
    for (int i = r; i < m; ++i) {
        std::vector<ExactScalar> row(jac.at_point[i].begin() + r,
                                     jac.at_point[i].end());
        unit_block.push_back(std::move(row));
    }
    out.unit_block_det = scalar_det(unit_block, field);

    // Classical derivative at the point, taken from raw s-linear
    // coefficients rather than the logarithmic machinery: the map on the
    // normalized unit coordinates has derivative coeff / z_i(x).
    std::vector<Int> zero_sharp(r, Int(0));
    std::vector<std::vector<ExactScalar>> classical;
    for (int i = r; i < m; ++i) {
        std::vector<ExactScalar> row;
        for (int j = r; j < m; ++j) {
            std::vector<Int> sdeg(m - r, Int(0));
            sdeg[j - r] = 1;
            ExactScalar coeff = psi.pullbacks[i].coefficient(zero_sharp, sdeg);
            row.push_back(coeff / model->unit_value(i - r));
        }
        classical.push_back(std::move(row));
    }
    ExactScalar rescale(field, Rat(1));
    for (int i = r; i < m; ++i) {
        rescale *= model->unit_value(i - r);
        rescale *= psi.pullbacks[i].value_at_point().inverse();
    }
    out.rescaled_classical_det = scalar_det(classical, field) * rescale;
    out.classical_agrees = out.rescaled_classical_det == out.unit_block_det;
    out.etale = !out.full_det.is_zero();
    return out;
}

CounterexampleCertificate certify_counterexample(int cutoff) {
    if (cutoff < 5)
        fail(ErrorKind::ValidationError,
             "unit obstruction certificate needs cutoff >= 5");
    FieldPtr qi =
        FieldSpec::number_field({Int(1), Int(0), Int(1)}, "i");
    FieldPtr q = FieldSpec::rationals();
    AffineMonoid line = AffineMonoid::create(1, {{Int(1)}});
    ToricPoint origin = ToricPoint::create(line, {}, {}, qi);
    ModelPtr model = LocalModel::create(origin, cutoff);
    ExactScalar imag = ExactScalar::generator(qi);

    CounterexampleCertificate cert;

    // sqrt(1 - x) by the binomial recurrence, checked against the frozen
    // leading coefficients.
    std::vector<Rat> coeff{Rat(1)};
    for (int k = 1; k + 4 <= cutoff; ++k)
        coeff.push_back(coeff.back() * Rat(-1) * (Rat(3, 2) - Rat(k)) / Rat(k));
    const std::vector<Rat> frozen{
        Rat(1),         Rat(-1, 2),     Rat(-1, 8),      Rat(-1, 16),
        Rat(-5, 128),   Rat(-7, 256),   Rat(-21, 1024),  Rat(-33, 2048),
        Rat(-429, 32768)};
    cert.series_oracle_agrees = true;
    for (std::size_t k = 0; k < coeff.size() && k < frozen.size(); ++k)
        if (coeff[k] != frozen[k]) cert.series_oracle_agrees = false;

    // Pullback i x^4 sqrt(1 - x): log smooth with log Jacobian [4].
    TruncatedSeries pullback = TruncatedSeries::zero(model);
    for (std::size_t k = 0; k < coeff.size(); ++k)
        pullback.accumulate({Int(4 + static_cast<long>(k))}, {},
                            imag * ExactScalar(qi, coeff[k]));
    AffineMonoid target = AffineMonoid::create(1, {{Int(1)}});
    MorphismGerm germ = MorphismGerm::create(model, target, {pullback}, q);
    LogJacobian jac = log_jacobian(germ);
    cert.jacobian_value = jac.at_point[0][0];
    cert.smooth = is_log_smooth(germ).smooth;
    bool jacobian_is_four = cert.jacobian_value == ExactScalar(qi, Rat(4));

    // A monomial normal form over Q forces alpha beta^4 = i with alpha a
    // nonzero rational and beta in Q(i). Certify that no such pair exists.
    bool i_not_rational = !imag.as_rational().has_value();
    const std::vector<Rat> samples{Rat(1),     Rat(-1),    Rat(2), Rat(-2),
                                   Rat(3),     Rat(1, 2),  Rat(-2, 3),
                                   Rat(5, 4)};
    cert.quartic_polynomial_identity = true;
    for (const Rat& p : samples) {
        for (const Rat& qq : samples) {
            ExactScalar beta =
                ExactScalar(qi, p) + imag * ExactScalar(qi, qq);
            Rat re = p * p * p * p - 6 * p * p * qq * qq + qq * qq * qq * qq;
            Rat im = 4 * p * p * p * qq - 4 * p * qq * qq * qq;
            if (beta.pow(4) != ExactScalar(qi, std::vector<Rat>{re, im}))
                cert.quartic_polynomial_identity = false;
        }
    }
    cert.real_axis_excluded = i_not_rational;
    cert.imaginary_axis_excluded = i_not_rational;
    for (const Rat& p : samples) {
        if (!ExactScalar(qi, p).pow(4).as_rational())
            cert.real_axis_excluded = false;
        if (!(imag * ExactScalar(qi, p)).pow(4).as_rational())
            cert.imaginary_axis_excluded = false;
    }
    // Off the axes, Re(alpha beta^4) = 0 forces t^2 - 6t + 1 = 0 with
    // t = (p/q)^2 rational; a monic integer quadratic has only the
    // divisors of its constant term as rational root candidates.
    cert.no_rational_root = true;
    for (const Rat& t : {Rat(1), Rat(-1)})
        if (t * t - 6 * t + 1 == 0) cert.no_rational_root = false;

    cert.rational_mode_rejected = false;
    try {
        monomialize_pipeline(germ, MonomializeMode::rational_residue);
    } catch (const Error& e) {
        cert.rational_mode_rejected =
            e.kind() == ErrorKind::ResidueFieldHypothesisViolated;
    }
    cert.root_mode_rejected = false;
    try {
        monomialize_pipeline(germ, MonomializeMode::root_capable);
    } catch (const Error& e) {
        cert.root_mode_rejected = e.kind() == ErrorKind::RootExtractionFailed;
    }

    cert.certified = jacobian_is_four && cert.smooth &&
                     cert.series_oracle_agrees && i_not_rational &&
                     cert.quartic_polynomial_identity &&
                     cert.real_axis_excluded && cert.imaginary_axis_excluded &&
                     cert.no_rational_root && cert.rational_mode_rejected &&
                     cert.root_mode_rejected;
    cert.summary =
        "log smooth germ over Q(i) with log Jacobian [4]; i admits no "
        "factorization alpha beta^4 with alpha rational, so no monomial "
        "normal form over Q exists and both pipeline modes reject";
    return cert;
}

}  // namespace toromon
