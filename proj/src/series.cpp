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

#include "toromon/series.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "toromon/error.hpp"

namespace toromon {

namespace {

// Term-pair count beyond which the product switches to the partitioned
// path. Both paths accumulate the same exact sums, so results agree.
constexpr std::size_t kParallelThreshold = 4096;

std::string vec_to_string(const std::vector<Int>& v) {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << ",";
        out << v[i];
    }
    out << ")";
    return out.str();
}

long to_long(const Int& v) {
    require_internal(v >= std::numeric_limits<long>::min() &&
                         v <= std::numeric_limits<long>::max(),
                     "exponent out of machine range");
    return v.convert_to<long>();
}

}  // namespace

std::shared_ptr<const LocalModel> LocalModel::create(
    ToricPoint point, int cutoff, std::optional<std::vector<Int>> grading) {
    if (cutoff < 0)
        fail(ErrorKind::ValidationError, "series cutoff must be nonnegative");
    auto model = std::make_shared<LocalModel>();
    model->point = std::move(point);
    model->cutoff = cutoff;
    int r = model->vanishing_count();
    model->grading = grading ? std::move(*grading)
                             : std::vector<Int>(r, Int(1));
    if (static_cast<int>(model->grading.size()) != r)
        fail(ErrorKind::ValidationError,
             "grading must weight each vanishing direction");

    std::set<std::vector<Int>> sharp_gens;
    for (const auto& g : model->point.monoid.generators) {
        std::vector<Int> coords = model->z_coordinates(g);
        std::vector<Int> sharp_part(coords.begin(), coords.begin() + r);
        bool zero = std::all_of(sharp_part.begin(), sharp_part.end(),
                                [](const Int& e) { return e == 0; });
        if (zero) continue;
        Int w(0);
        for (int i = 0; i < r; ++i) w += model->grading[i] * sharp_part[i];
        if (w <= 0)
            fail(ErrorKind::NoPositiveGrading,
                 "grading is not positive on a sharp generator",
                 vec_to_string(sharp_part));
        sharp_gens.insert(std::move(sharp_part));
    }
    model->sharp.ambient_rank = r;
    model->sharp.generators = {sharp_gens.begin(), sharp_gens.end()};
    model->sharp.grading = model->grading;
    return model;
}

std::vector<Int> LocalModel::z_coordinates(
    const std::vector<Int>& ambient) const {
    auto coords = lattice_coordinates(point.split.full_basis, ambient);
    require_internal(coords.has_value(),
                     "ambient vector escapes the unimodular z-basis");
    return *coords;
}

Int LocalModel::term_weight(const std::vector<Int>& sharp_exp,
                            const std::vector<Int>& sdeg) const {
    require_internal(static_cast<int>(sharp_exp.size()) == vanishing_count() &&
                         static_cast<int>(sdeg.size()) == unit_count(),
                     "term exponents have wrong dimensions");
    Int w(0);
    for (std::size_t i = 0; i < sharp_exp.size(); ++i)
        w += grading[i] * sharp_exp[i];
    for (const auto& d : sdeg) w += d;
    return w;
}

bool LocalModel::equivalent(const LocalModel& other) const {
    if (this == &other) return true;
    return point.monoid.generators == other.point.monoid.generators &&
           point.face == other.point.face &&
           point.split.full_basis == other.point.split.full_basis &&
           point.char_values == other.point.char_values &&
           point.residue_field->same_field(*other.point.residue_field) &&
           grading == other.grading && cutoff == other.cutoff;
}

TruncatedSeries TruncatedSeries::zero(ModelPtr model) {
    TruncatedSeries s;
    s.model_ = std::move(model);
    return s;
}

TruncatedSeries TruncatedSeries::constant(ModelPtr model,
                                          const ExactScalar& c) {
    int r = model->vanishing_count();
    int u = model->unit_count();
    TruncatedSeries s = zero(std::move(model));
    s.accumulate(std::vector<Int>(r, Int(0)), std::vector<Int>(u, Int(0)), c);
    return s;
}

TruncatedSeries TruncatedSeries::monomial(ModelPtr model,
                                          const std::vector<Int>& sharp_exp,
                                          const std::vector<Int>& sdeg,
                                          const ExactScalar& c) {
    for (const auto& d : sdeg)
        if (d < 0)
            fail(ErrorKind::ValidationError, "negative unit-variable degree");
    TruncatedSeries s = zero(std::move(model));
    s.accumulate(sharp_exp, sdeg, c);
    return s;
}

TruncatedSeries TruncatedSeries::character(ModelPtr model,
                                           const std::vector<Int>& ambient_exp,
                                           const ExactScalar& c) {
    std::vector<Int> coords = model->z_coordinates(ambient_exp);
    int r = model->vanishing_count();
    std::vector<Int> sharp_exp(coords.begin(), coords.begin() + r);
    if (!model->sharp.contains(sharp_exp))
        fail(ErrorKind::ValidationError,
             "character is not regular at the point",
             vec_to_string(ambient_exp));

    ExactScalar scale = c.promoted_to(model->field());
    for (int j = 0; j < model->unit_count(); ++j)
        scale = scale * model->unit_value(j).pow(to_long(coords[r + j]));

    TruncatedSeries result =
        monomial(model, sharp_exp, std::vector<Int>(model->unit_count(), Int(0)),
                 scale);
    // Each unit factor z_i^k becomes z_i(x)^k (1+s_i)^k; the scalar part is
    // already in scale, the series part is a generalized binomial expansion.
    for (int j = 0; j < model->unit_count(); ++j) {
        Int k = coords[r + j];
        if (k == 0) continue;
        TruncatedSeries factor = zero(model);
        Rat binom(1);
        std::vector<Int> sdeg(model->unit_count(), Int(0));
        for (long t = 0; t <= model->cutoff; ++t) {
            if (t > 0) {
                binom *= Rat(k - (t - 1), t);
                if (binom == 0) break;
            }
            sdeg[j] = t;
            factor.accumulate(std::vector<Int>(r, Int(0)), sdeg,
                              ExactScalar(model->field(), binom));
        }
        result = result * factor;
    }
    return result;
}

void TruncatedSeries::accumulate(const std::vector<Int>& sharp_exp,
                                 const std::vector<Int>& sdeg,
                                 const ExactScalar& c) {
    require_internal(model_ != nullptr, "series without a model");
    if (c.is_zero()) return;
    Int w = model_->term_weight(sharp_exp, sdeg);
    if (w > model_->cutoff) return;
    SeriesKey key{std::move(w), sharp_exp, sdeg};
    auto it = coeffs_.find(key);
    if (it == coeffs_.end()) {
        coeffs_.emplace(std::move(key), c.promoted_to(model_->field()));
        return;
    }
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
}

ExactScalar TruncatedSeries::value_at_point() const {
    require_internal(model_ != nullptr, "series without a model");
    return coefficient(std::vector<Int>(model_->vanishing_count(), Int(0)),
                       std::vector<Int>(model_->unit_count(), Int(0)));
}

ExactScalar TruncatedSeries::coefficient(const std::vector<Int>& sharp_exp,
                                         const std::vector<Int>& sdeg) const {
    SeriesKey key{model_->term_weight(sharp_exp, sdeg), sharp_exp, sdeg};
    auto it = coeffs_.find(key);
    if (it == coeffs_.end()) return ExactScalar(model_->field(), Rat(0));
    return it->second;
}

void TruncatedSeries::require_same_model(const TruncatedSeries& b) const {
    require_internal(model_ != nullptr && b.model_ != nullptr,
                     "series without a model");
    if (model_ == b.model_) return;
    if (!model_->equivalent(*b.model_))
        fail(ErrorKind::ModelMismatch,
             "series arithmetic across different local models");
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& b) const {
    require_same_model(b);
    TruncatedSeries out = *this;
    for (const auto& [key, c] : b.coeffs_) {
        auto it = out.coeffs_.find(key);
        if (it == out.coeffs_.end()) {
            out.coeffs_.emplace(key, c);
            continue;
        }
        it->second += c;
        if (it->second.is_zero()) out.coeffs_.erase(it);
    }
    return out;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& b) const {
    return *this + b.scaled(ExactScalar(b.model_->field(), Rat(-1)));
}

TruncatedSeries TruncatedSeries::scaled(const ExactScalar& c) const {
    TruncatedSeries out = zero(model_);
    if (c.is_zero()) return out;
    for (const auto& [key, v] : coeffs_) {
        ExactScalar scaled_coeff = v * c;
        if (!scaled_coeff.is_zero())
            out.coeffs_.emplace(key, std::move(scaled_coeff));
    }
    return out;
}

TruncatedSeries TruncatedSeries::mul_serial(const TruncatedSeries& b) const {
    require_same_model(b);
    TruncatedSeries out = zero(model_);
    const Int cutoff(model_->cutoff);
    for (const auto& [ka, ca] : coeffs_) {
        if (ka.weight > cutoff) continue;
        for (const auto& [kb, cb] : b.coeffs_) {
            if (ka.weight + kb.weight > cutoff) continue;
            std::vector<Int> sharp_exp = ka.sharp;
            for (std::size_t i = 0; i < sharp_exp.size(); ++i)
                sharp_exp[i] += kb.sharp[i];
            std::vector<Int> sdeg = ka.sdeg;
            for (std::size_t i = 0; i < sdeg.size(); ++i) sdeg[i] += kb.sdeg[i];
            out.accumulate(sharp_exp, sdeg, ca * cb);
        }
    }
    return out;
}

TruncatedSeries TruncatedSeries::mul_parallel(const TruncatedSeries& b) const {
    require_same_model(b);
    std::vector<const std::pair<const SeriesKey, ExactScalar>*> left;
    left.reserve(coeffs_.size());
    for (const auto& term : coeffs_) left.push_back(&term);

    int max_threads = 1;
#ifdef _OPENMP
    max_threads = omp_get_max_threads();
#endif
    std::vector<TruncatedSeries> partial(max_threads, zero(model_));
    const Int cutoff(model_->cutoff);
#ifdef _OPENMP
#pragma omp parallel num_threads(max_threads)
#endif
    {
        int tid = 0;
#ifdef _OPENMP
        tid = omp_get_thread_num();
#endif
        TruncatedSeries& mine = partial[tid];
        for (std::size_t idx = tid; idx < left.size();
             idx += static_cast<std::size_t>(max_threads)) {
            const auto& [ka, ca] = *left[idx];
            for (const auto& [kb, cb] : b.coeffs_) {
                if (ka.weight + kb.weight > cutoff) continue;
                std::vector<Int> sharp_exp = ka.sharp;
                for (std::size_t i = 0; i < sharp_exp.size(); ++i)
                    sharp_exp[i] += kb.sharp[i];
                std::vector<Int> sdeg = ka.sdeg;
                for (std::size_t i = 0; i < sdeg.size(); ++i)
                    sdeg[i] += kb.sdeg[i];
                mine.accumulate(sharp_exp, sdeg, ca * cb);
            }
        }
    }
    // Exact coefficient sums, so the merge order cannot change the result.
    TruncatedSeries out = zero(model_);
    for (const auto& part : partial) out = out + part;
    return out;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& b) const {
    require_same_model(b);
    if (coeffs_.size() * b.coeffs_.size() >= kParallelThreshold)
        return mul_parallel(b);
    return mul_serial(b);
}

TruncatedSeries TruncatedSeries::inverse() const {
    ExactScalar c0 = value_at_point();
    if (c0.is_zero())
        fail(ErrorKind::NotAUnit,
             "series with zero constant term has no inverse");
    ExactScalar c0_inv = c0.inverse();
    TruncatedSeries one = constant(model_, ExactScalar(model_->field(), Rat(1)));
    TruncatedSeries t = scaled(c0_inv) - one;
    TruncatedSeries inv = one;
    for (int k = 0; k < model_->cutoff; ++k) inv = one - t * inv;
    return inv.scaled(c0_inv);
}

TruncatedSeries TruncatedSeries::pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    TruncatedSeries acc =
        constant(model_, ExactScalar(model_->field(), Rat(1)));
    TruncatedSeries base = *this;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return acc;
}

TruncatedSeries TruncatedSeries::exp() const {
    if (!value_at_point().is_zero())
        fail(ErrorKind::BadConstantTerm,
             "exponential needs a zero constant term");
    TruncatedSeries one = constant(model_, ExactScalar(model_->field(), Rat(1)));
    TruncatedSeries e = one;
    for (int k = model_->cutoff; k >= 1; --k)
        e = one + (*this * e).scaled(ExactScalar(model_->field(), Rat(1, k)));
    return e;
}

TruncatedSeries TruncatedSeries::log() const {
    ExactScalar c0 = value_at_point();
    if (!(c0 == ExactScalar(model_->field(), Rat(1))))
        fail(ErrorKind::BadConstantTerm, "logarithm needs constant term one");
    TruncatedSeries one = constant(model_, ExactScalar(model_->field(), Rat(1)));
    TruncatedSeries t = *this - one;
    if (t.is_zero() || model_->cutoff == 0) return zero(model_);
    int n = model_->cutoff;
    TruncatedSeries l = constant(model_, ExactScalar(model_->field(), Rat(1, n)));
    for (int k = n - 1; k >= 1; --k)
        l = constant(model_, ExactScalar(model_->field(), Rat(1, k))) - t * l;
    return t * l;
}

TruncatedSeries TruncatedSeries::orbit_restriction() const {
    TruncatedSeries out = zero(model_);
    for (const auto& [key, c] : coeffs_) {
        bool sharp_zero = std::all_of(key.sharp.begin(), key.sharp.end(),
                                      [](const Int& e) { return e == 0; });
        if (sharp_zero) out.coeffs_.emplace(key, c);
    }
    return out;
}

bool TruncatedSeries::operator==(const TruncatedSeries& b) const {
    require_same_model(b);
    return coeffs_ == b.coeffs_;
}

std::string TruncatedSeries::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [key, c] : coeffs_) {
        if (!first) out << " + ";
        first = false;
        out << "(" << c.to_string() << ")";
        bool sharp_zero = std::all_of(key.sharp.begin(), key.sharp.end(),
                                      [](const Int& e) { return e == 0; });
        if (!sharp_zero) out << " z^" << vec_to_string(key.sharp);
        bool s_zero = std::all_of(key.sdeg.begin(), key.sdeg.end(),
                                  [](const Int& e) { return e == 0; });
        if (!s_zero) out << " s^" << vec_to_string(key.sdeg);
    }
    return out.str();
}

LogDerivativeVector dlog_coefficients(const TruncatedSeries& y) {
    const ModelPtr& model = y.model();
    int r = model->vanishing_count();
    int m = model->ambient_rank();
    LogDerivativeVector a;
    a.entries.assign(m, TruncatedSeries::zero(model));
    for (const auto& [key, c] : y.terms()) {
        for (int i = 0; i < r; ++i) {
            if (key.sharp[i] == 0) continue;
            a.entries[i].accumulate(
                key.sharp, key.sdeg,
                c * ExactScalar(model->field(), Rat(key.sharp[i])));
        }
        for (int j = 0; j < model->unit_count(); ++j) {
            if (key.sdeg[j] == 0) continue;
            ExactScalar factor =
                c * ExactScalar(model->field(), Rat(key.sdeg[j]));
            std::vector<Int> lowered = key.sdeg;
            lowered[j] -= 1;
            a.entries[r + j].accumulate(key.sharp, lowered, factor);
            a.entries[r + j].accumulate(key.sharp, key.sdeg, factor);
        }
    }
    return a;
}

}  // namespace toromon
