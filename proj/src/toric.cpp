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

#include "toromon/toric.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "toromon/error.hpp"

namespace toromon {

namespace {

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

ToricPoint ToricPoint::create(AffineMonoid monoid, std::vector<int> face,
                              std::vector<ExactScalar> values, FieldPtr field) {
    int gen_count = static_cast<int>(monoid.generators.size());
    std::set<int> seen;
    for (int idx : face) {
        if (idx < 0 || idx >= gen_count)
            fail(ErrorKind::ValidationError, "face index out of range");
        if (!seen.insert(idx).second)
            fail(ErrorKind::ValidationError, "duplicate face index");
    }
    std::sort(face.begin(), face.end());

    std::vector<std::vector<Int>> face_gens;
    for (int idx : face) face_gens.push_back(monoid.generators[idx]);

    // Face condition: a sum of generators landing in the face submonoid
    // forces both summands onto the face.
    for (int i = 0; i < gen_count; ++i)
        for (int j = i; j < gen_count; ++j) {
            std::vector<Int> sum = monoid.generators[i];
            for (std::size_t t = 0; t < sum.size(); ++t)
                sum[t] += monoid.generators[j][t];
            if (!monoid_membership(face_gens, monoid.grading, sum)) continue;
            if (!seen.count(i) || !seen.count(j))
                fail(ErrorKind::ValidationError,
                     "face condition fails for a generator pair",
                     vec_to_string(monoid.generators[i]) + "+" +
                         vec_to_string(monoid.generators[j]));
        }

    IntMatrix face_cols(monoid.ambient_rank, static_cast<int>(face.size()));
    for (int j = 0; j < face_cols.cols; ++j)
        for (int i = 0; i < face_cols.rows; ++i)
            face_cols.at(i, j) = face_gens[j][i];

    ToricPoint p;
    p.split = split_basis(saturate_span(face_cols));
    p.monoid = std::move(monoid);
    p.face = std::move(face);
    p.residue_field = std::move(field);

    int unit_count = p.ambient_rank() - p.split.r;
    if (static_cast<int>(values.size()) != unit_count)
        fail(ErrorKind::ValidationError,
             "expected one character value per face basis vector");
    for (auto& v : values) {
        ExactScalar promoted = v.promoted_to(p.residue_field);
        if (promoted.is_zero())
            fail(ErrorKind::ValidationError, "character value is zero");
        p.char_values.push_back(std::move(promoted));
    }
    return p;
}

IntMatrix ToricPoint::face_basis() const {
    int m = ambient_rank();
    IntMatrix basis(m, m - split.r);
    for (int j = 0; j < basis.cols; ++j)
        for (int i = 0; i < m; ++i)
            basis.at(i, j) = split.full_basis.at(i, split.r + j);
    return basis;
}

CharEval eval_character(const ToricPoint& p, const std::vector<Int>& exponent) {
    if (static_cast<int>(exponent.size()) != p.ambient_rank())
        fail(ErrorKind::ValidationError, "character has wrong dimension");
    if (auto coords = lattice_coordinates(p.face_basis(), exponent)) {
        ExactScalar value(p.residue_field, Rat(1));
        for (std::size_t i = 0; i < coords->size(); ++i)
            value = value * p.char_values[i].pow(to_long((*coords)[i]));
        return {CharEvalKind::Value, std::move(value)};
    }
    if (p.monoid.contains(exponent)) return {CharEvalKind::Zero, std::nullopt};
    return {CharEvalKind::Undefined, std::nullopt};
}

ToricMorphismData ToricMorphismData::create(int source_rank, int target_rank,
                                            IntMatrix lattice_map) {
    if (lattice_map.rows != target_rank || lattice_map.cols != source_rank)
        fail(ErrorKind::ValidationError,
             "lattice map shape does not match the declared ranks");
    return {source_rank, target_rank, std::move(lattice_map)};
}

std::vector<Int> ToricMorphismData::pullback_exponent(
    const std::vector<Int>& target_vec) const {
    require_internal(static_cast<int>(target_vec.size()) == target_rank,
                     "target exponent has wrong dimension");
    return apply_matrix(lattice_map.transposed(), target_vec);
}

RegularityResult is_regular_toric_morphism(const ToricMorphismData& g,
                                           const AffineMonoid& source,
                                           const AffineMonoid& target) {
    require_internal(g.source_rank == source.ambient_rank &&
                         g.target_rank == target.ambient_rank,
                     "morphism ranks do not match the monoids");
    for (const auto& gen : target.generators) {
        std::vector<Int> e = g.pullback_exponent(gen);
        if (!source.contains(e)) return {false, std::move(e)};
    }
    return {true, std::nullopt};
}

TranslationPoint TranslationPoint::create(std::vector<ExactScalar> values) {
    for (const auto& v : values)
        if (v.is_zero())
            fail(ErrorKind::NotInBaseField,
                 "translation coordinate must be a nonzero base field value");
    return {std::move(values)};
}

TranslationPoint translation_from_lambda(
    const std::vector<ExactScalar>& lambda) {
    std::vector<ExactScalar> values;
    values.reserve(lambda.size());
    for (const auto& l : lambda) {
        if (l.is_zero())
            fail(ErrorKind::NotInBaseField,
                 "translation coordinate must be a nonzero base field value");
        values.push_back(l.inverse());
    }
    return TranslationPoint::create(std::move(values));
}

}  // namespace toromon
