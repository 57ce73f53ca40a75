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
#include <vector>

#include "toromon/series.hpp"

namespace toromon {

// Germ of a morphism at the source point: the target is described by a
// monoid with a chosen character basis c_1 .. c_n, and the germ by the n
// pulled-back series f*(c_j) in the source local model.
struct MorphismGerm {
    ModelPtr source_model;
    int target_rank = 0;
    AffineMonoid target_monoid;
    std::vector<TruncatedSeries> pullbacks;
    // Field of definition of the morphism; the residue field of the source
    // point may be an extension of it.
    FieldPtr base_field;

    // Validates and constructs: n <= m, pullbacks nonzero and over the
    // source model, base field either the residue field itself or the
    // rationals underneath it.
    static MorphismGerm create(ModelPtr source_model, AffineMonoid target_monoid,
                               std::vector<TruncatedSeries> pullbacks,
                               FieldPtr base_field);

    int source_rank() const { return source_model->ambient_rank(); }
};

// Matrix of the pulled-back logarithmic differentials: row j holds the
// series J_{j,1} .. J_{j,m} with f*(dc_j/c_j) = sum_i J_{j,i} dz_i/z_i,
// together with its evaluation at the point.
struct LogJacobian {
    std::vector<std::vector<TruncatedSeries>> entries;
    std::vector<std::vector<ExactScalar>> at_point;
};

// Computes the logarithmic Jacobian; requires every pullback to factor as
// a character monomial times a unit (NotMonomialTimesUnit otherwise).
LogJacobian log_jacobian(const MorphismGerm& f);

// Exact Gaussian elimination over the coefficient field.
struct ScalarRank {
    int rank = 0;
    std::vector<int> pivot_rows;
    std::vector<int> pivot_cols;
};
ScalarRank scalar_rank(const std::vector<std::vector<ExactScalar>>& m,
                       const FieldPtr& field);
ExactScalar scalar_det(const std::vector<std::vector<ExactScalar>>& m,
                       const FieldPtr& field);

struct LogSmoothResult {
    bool smooth = false;
    int rank = 0;
    // Rows and columns of a maximal nonvanishing minor of J(x); when smooth
    // this is an n x n minor and minor_det certifies its nonvanishing.
    std::vector<int> minor_rows;
    std::vector<int> minor_cols;
    std::optional<ExactScalar> minor_det;
};

// The germ is logarithmically smooth iff J(x) has full row rank over the
// residue field.
LogSmoothResult is_log_smooth(const MorphismGerm& f);

// Extends a smooth germ with m-n pure-character pullbacks, enumerated by
// increasing height in the z-basis, until J(x) becomes invertible; the
// target monoid gains one affine coordinate per appended character.
// Throws NotLogSmooth on a non-smooth input and SearchExhausted when no
// completion is found within the height bound.
MorphismGerm augment_to_equal_dim(const MorphismGerm& f);

}  // namespace toromon
