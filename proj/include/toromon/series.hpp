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

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "toromon/toric.hpp"

namespace toromon {

// Completed local ring at a toric point, truncated at a weight cutoff.
//
// The ambient lattice is rebased along the point's split: characters
// z_1 .. z_r vanish at the point and z_{r+1} .. z_m are units there. Unit
// directions are rewritten as z_i = z_i(x)(1+s_i), so a series lives in
// the monoid algebra of the sharp monoid (exponents of z_1..z_r) tensored
// with polynomials in s_{r+1}..s_m, cut off at weight > cutoff. The weight
// of a term is grading . sharp_exponent + total s-degree.
struct LocalModel {
    ToricPoint point;
    // Sharp exponents of the monoid generators, expressed in the z-basis
    // with the unit coordinates dropped; lives in Z^r.
    AffineMonoid sharp;
    // Weights of z_1 .. z_r; every s_i weighs 1.
    std::vector<Int> grading;
    int cutoff = 0;

    // Validates and constructs. The grading defaults to all ones and must
    // be positive on every nonzero sharp generator exponent.
    static std::shared_ptr<const LocalModel> create(
        ToricPoint point, int cutoff,
        std::optional<std::vector<Int>> grading = {});

    int ambient_rank() const { return point.ambient_rank(); }
    int vanishing_count() const { return point.split.r; }
    int unit_count() const { return ambient_rank() - vanishing_count(); }
    const FieldPtr& field() const { return point.residue_field; }

    // Exact coordinates of an ambient exponent vector in the z-basis.
    std::vector<Int> z_coordinates(const std::vector<Int>& ambient) const;

    // Value of the unit character z_{r+1+j} at the point.
    const ExactScalar& unit_value(int j) const { return point.char_values[j]; }

    Int term_weight(const std::vector<Int>& sharp_exp,
                    const std::vector<Int>& sdeg) const;

    bool equivalent(const LocalModel& other) const;
};

using ModelPtr = std::shared_ptr<const LocalModel>;

// Term exponent: sharp part in Z^r and s-multidegree in N^(m-r); ordered by
// weight, then lexicographically, so maps iterate in a canonical order.
struct SeriesKey {
    Int weight;
    std::vector<Int> sharp;
    std::vector<Int> sdeg;

    bool operator<(const SeriesKey& o) const {
        if (weight != o.weight) return weight < o.weight;
        if (sharp != o.sharp) return sharp < o.sharp;
        return sdeg < o.sdeg;
    }
    bool operator==(const SeriesKey& o) const = default;
};

class TruncatedSeries {
public:
    TruncatedSeries() = default;

    static TruncatedSeries zero(ModelPtr model);
    static TruncatedSeries constant(ModelPtr model, const ExactScalar& c);
    // Single term; the caller warrants that sharp_exp lies in the sharp
    // monoid. Terms beyond the cutoff truncate to zero.
    static TruncatedSeries monomial(ModelPtr model,
                                    const std::vector<Int>& sharp_exp,
                                    const std::vector<Int>& sdeg,
                                    const ExactScalar& c);
    // The character with the given ambient exponent vector, scaled by c,
    // rewritten into the model: unit directions contribute their value at
    // the point and a binomial expansion of (1+s_i)^k. Rejects characters
    // whose sharp part escapes the sharp monoid (not regular at the point).
    static TruncatedSeries character(ModelPtr model,
                                     const std::vector<Int>& ambient_exp,
                                     const ExactScalar& c);

    const ModelPtr& model() const { return model_; }
    const std::map<SeriesKey, ExactScalar>& terms() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    // Adds c at the given exponents (internal building block of the
    // arithmetic; same caller warranty as monomial).
    void accumulate(const std::vector<Int>& sharp_exp,
                    const std::vector<Int>& sdeg, const ExactScalar& c);

    ExactScalar value_at_point() const;
    ExactScalar coefficient(const std::vector<Int>& sharp_exp,
                            const std::vector<Int>& sdeg) const;

    TruncatedSeries operator+(const TruncatedSeries& b) const;
    TruncatedSeries operator-(const TruncatedSeries& b) const;
    TruncatedSeries operator*(const TruncatedSeries& b) const;
    TruncatedSeries scaled(const ExactScalar& c) const;

    // Reference product, single-threaded; operator* must agree with it.
    TruncatedSeries mul_serial(const TruncatedSeries& b) const;
    // Partitioned product used for large term counts.
    TruncatedSeries mul_parallel(const TruncatedSeries& b) const;

    // Multiplicative inverse; requires a unit (nonzero constant term).
    TruncatedSeries inverse() const;
    // Integer powers, negative through the inverse.
    TruncatedSeries pow(long k) const;
    // Exponential of a series with zero constant term.
    TruncatedSeries exp() const;
    // Logarithm of a series with constant term one.
    TruncatedSeries log() const;

    // Drops every term with a nonzero sharp part (restriction to the
    // closure of the orbit through the point).
    TruncatedSeries orbit_restriction() const;

    bool operator==(const TruncatedSeries& b) const;

    std::string to_string() const;

private:
    ModelPtr model_;
    std::map<SeriesKey, ExactScalar> coeffs_;

    void require_same_model(const TruncatedSeries& b) const;
};

// Coefficients a_1 .. a_m of dy = sum a_i dz_i / z_i.
struct LogDerivativeVector {
    std::vector<TruncatedSeries> entries;
};

// Logarithmic differential of y with respect to the z-basis: a term
// c z^a s^d contributes c a_i z^a s^d to entry i <= r; in a unit direction
// dz_i/z_i = ds_i/(1+s_i), so the same term contributes
// c d_i (z^a s^(d-e_i) + z^a s^d) to entry i > r.
LogDerivativeVector dlog_coefficients(const TruncatedSeries& y);

}  // namespace toromon
