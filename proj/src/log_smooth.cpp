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

#include "toromon/log_smooth.hpp"

#include <algorithm>
#include <utility>

#include "toromon/error.hpp"
#include "toromon/monomialize.hpp"

namespace toromon {

MorphismGerm MorphismGerm::create(ModelPtr source_model,
                                  AffineMonoid target_monoid,
                                  std::vector<TruncatedSeries> pullbacks,
                                  FieldPtr base_field) {
    if (!source_model)
        fail(ErrorKind::ValidationError, "germ requires a source local model");
    int n = static_cast<int>(pullbacks.size());
    int m = source_model->ambient_rank();
    if (n < 1)
        fail(ErrorKind::ValidationError, "germ requires at least one pullback");
    if (n > m)
        fail(ErrorKind::ValidationError,
             "target rank exceeds source rank: " + std::to_string(n) + " > " +
                 std::to_string(m));
    if (target_monoid.ambient_rank != n)
        fail(ErrorKind::ValidationError,
             "target monoid rank does not match the pullback count");
    for (int j = 0; j < n; ++j) {
        const TruncatedSeries& y = pullbacks[j];
        if (!y.model() || !y.model()->equivalent(*source_model))
            fail(ErrorKind::ValidationError,
                 "pullback " + std::to_string(j) +
                     " is not a series over the source model");
        if (y.is_zero())
            fail(ErrorKind::ValidationError,
                 "pullback " + std::to_string(j) + " vanishes identically");
    }
    if (!base_field)
        fail(ErrorKind::ValidationError, "germ requires a base field");
    if (base_field->kind != FieldSpec::Kind::rationals &&
        !base_field->same_field(*source_model->field()))
        fail(ErrorKind::ValidationError,
             "base field must be Q or the residue field itself");
    return MorphismGerm{std::move(source_model), n, std::move(target_monoid),
                        std::move(pullbacks), std::move(base_field)};
}

LogJacobian log_jacobian(const MorphismGerm& f) {
    const ModelPtr& model = f.source_model;
    int m = f.source_rank();
    LogJacobian jac;
    jac.entries.reserve(f.target_rank);
    jac.at_point.reserve(f.target_rank);
    for (int j = 0; j < f.target_rank; ++j) {
        // dlog is multiplicative, so split off the monomial: the character
        // contributes its exponent as a constant and the unit cofactor
        // contributes a series with no constant term in the first r columns.
        MonomialUnitForm form = extract_monomial_unit(f.pullbacks[j]);
        TruncatedSeries unit_inverse = form.unit.inverse();
        LogDerivativeVector dw = dlog_coefficients(form.unit);
        std::vector<TruncatedSeries> row;
        std::vector<ExactScalar> row_values;
        row.reserve(m);
        row_values.reserve(m);
        for (int i = 0; i < m; ++i) {
            ExactScalar exponent(model->field(), Rat(form.exponent[i]));
            TruncatedSeries entry = TruncatedSeries::constant(model, exponent) +
                                    dw.entries[i] * unit_inverse;
            row_values.push_back(entry.value_at_point());
            row.push_back(std::move(entry));
        }
        jac.entries.push_back(std::move(row));
        jac.at_point.push_back(std::move(row_values));
    }
    return jac;
}

namespace {

void check_rectangular(const std::vector<std::vector<ExactScalar>>& m,
                       const FieldPtr& field) {
    for (const auto& row : m) {
        if (m[0].size() != row.size())
            fail(ErrorKind::ValidationError, "ragged scalar matrix");
        for (const auto& e : row)
            if (!e.field()->same_field(*field))
                fail(ErrorKind::FieldMismatch,
                     "scalar matrix entry over a different field");
    }
}

}  // namespace

ScalarRank scalar_rank(const std::vector<std::vector<ExactScalar>>& m,
                       const FieldPtr& field) {
    check_rectangular(m, field);
    int rows = static_cast<int>(m.size());
    int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
    std::vector<std::vector<ExactScalar>> a = m;
    std::vector<bool> used(rows, false);
    ScalarRank out;
    for (int c = 0; c < cols; ++c) {
        int pivot = -1;
        for (int r = 0; r < rows; ++r)
            if (!used[r] && !a[r][c].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        used[pivot] = true;
        out.pivot_rows.push_back(pivot);
        out.pivot_cols.push_back(c);
        ExactScalar inv = a[pivot][c].inverse();
        for (int r = 0; r < rows; ++r) {
            if (used[r] || a[r][c].is_zero()) continue;
            ExactScalar factor = a[r][c] * inv;
            for (int k = c; k < cols; ++k) a[r][k] -= factor * a[pivot][k];
        }
    }
    out.rank = static_cast<int>(out.pivot_rows.size());
    return out;
}

ExactScalar scalar_det(const std::vector<std::vector<ExactScalar>>& m,
                       const FieldPtr& field) {
    check_rectangular(m, field);
    int n = static_cast<int>(m.size());
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != n)
            fail(ErrorKind::ValidationError, "determinant of a non-square matrix");
    std::vector<std::vector<ExactScalar>> a = m;
    ExactScalar det(field, Rat(1));
    for (int c = 0; c < n; ++c) {
        int pivot = -1;
        for (int r = c; r < n; ++r)
            if (!a[r][c].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) return ExactScalar(field, Rat(0));
        if (pivot != c) {
            std::swap(a[pivot], a[c]);
            det = -det;
        }
        det *= a[c][c];
        ExactScalar inv = a[c][c].inverse();
        for (int r = c + 1; r < n; ++r) {
            if (a[r][c].is_zero()) continue;
            ExactScalar factor = a[r][c] * inv;
            for (int k = c; k < n; ++k) a[r][k] -= factor * a[c][k];
        }
    }
    return det;
}

LogSmoothResult is_log_smooth(const MorphismGerm& f) {
    LogJacobian jac = log_jacobian(f);
    const FieldPtr& field = f.source_model->field();
    ScalarRank rk = scalar_rank(jac.at_point, field);
    LogSmoothResult out;
    out.rank = rk.rank;
    out.smooth = rk.rank == f.target_rank;
    out.minor_rows = rk.pivot_rows;
    out.minor_cols = rk.pivot_cols;
    std::sort(out.minor_rows.begin(), out.minor_rows.end());
    if (rk.rank > 0) {
        std::vector<std::vector<ExactScalar>> sub;
        for (int r : out.minor_rows) {
            std::vector<ExactScalar> row;
            for (int c : out.minor_cols) row.push_back(jac.at_point[r][c]);
            sub.push_back(std::move(row));
        }
        out.minor_det = scalar_det(sub, field);
        require_internal(!out.minor_det->is_zero(),
                         "certifying minor of the log Jacobian vanished");
    }
    return out;
}

namespace {

// Lexicographic odometer over [-h, h]^m starting at the all -h corner.
bool next_vector(std::vector<long>& v, long h) {
    for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i) {
        if (v[i] < h) {
            ++v[i];
            std::fill(v.begin() + i + 1, v.end(), -h);
            return true;
        }
    }
    return false;
}

bool on_shell(const std::vector<long>& v, long h) {
    for (long x : v)
        if (x == h || x == -h) return true;
    return false;
}

constexpr long kMaxHeight = 10;
constexpr long kSearchBudget = 200000;

}  // namespace

MorphismGerm augment_to_equal_dim(const MorphismGerm& f) {
    LogSmoothResult base = is_log_smooth(f);
    if (!base.smooth)
        fail(ErrorKind::NotLogSmooth,
             "cannot augment: log Jacobian rank " + std::to_string(base.rank) +
                 " is below the target rank " + std::to_string(f.target_rank));
    const ModelPtr& model = f.source_model;
    int m = f.source_rank();
    int n = f.target_rank;
    if (n == m) return f;

    LogJacobian jac = log_jacobian(f);
    const FieldPtr& field = model->field();
    int r = model->vanishing_count();

    std::vector<std::vector<ExactScalar>> rows = jac.at_point;
    std::vector<std::vector<Int>> appended;
    int rank = scalar_rank(rows, field).rank;
    long budget = kSearchBudget;

    // Grow the row space with pure characters chi^c, scanned by height in
    // the z-basis; the new Jacobian row of such a character is c itself.
    for (long h = 1; h <= kMaxHeight && rank < m; ++h) {
        std::vector<long> v(m, -h);
        bool more = true;
        while (more && rank < m) {
            if (--budget < 0)
                fail(ErrorKind::SearchExhausted,
                     "augmentation scan exceeded its candidate budget");
            if (!on_shell(v, h)) {
                more = next_vector(v, h);
                continue;
            }
            std::vector<Int> c(v.begin(), v.end());
            std::vector<Int> sharp(c.begin(), c.begin() + r);
            Int weight(0);
            for (int i = 0; i < r; ++i) weight += model->grading[i] * c[i];
            if (weight <= Int(model->cutoff) && model->sharp.contains(sharp)) {
                std::vector<ExactScalar> row;
                row.reserve(m);
                for (const Int& ci : c)
                    row.emplace_back(field, Rat(ci));
                rows.push_back(std::move(row));
                int next_rank = scalar_rank(rows, field).rank;
                if (next_rank > rank) {
                    rank = next_rank;
                    appended.push_back(std::move(c));
                } else {
                    rows.pop_back();
                }
            }
            more = next_vector(v, h);
        }
    }
    if (rank < m)
        fail(ErrorKind::SearchExhausted,
             "no pure-character completion found up to height " +
                 std::to_string(kMaxHeight));

    std::vector<TruncatedSeries> pullbacks = f.pullbacks;
    ExactScalar one(field, Rat(1));
    for (const auto& c : appended) {
        std::vector<Int> ambient =
            apply_matrix(model->point.split.full_basis, c);
        pullbacks.push_back(TruncatedSeries::character(model, ambient, one));
    }

    // The target picks up one affine coordinate per appended character.
    std::vector<std::vector<Int>> gens;
    for (const auto& g : f.target_monoid.generators) {
        std::vector<Int> padded = g;
        padded.resize(m, Int(0));
        gens.push_back(std::move(padded));
    }
    for (int k = n; k < m; ++k) {
        std::vector<Int> e(m, Int(0));
        e[k] = 1;
        gens.push_back(std::move(e));
    }
    std::vector<Int> grading = f.target_monoid.grading;
    grading.resize(m, Int(1));
    AffineMonoid target = AffineMonoid::create(m, std::move(gens), grading);

    return MorphismGerm::create(model, std::move(target), std::move(pullbacks),
                                f.base_field);
}

}  // namespace toromon
