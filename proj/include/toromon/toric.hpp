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

#include "toromon/field.hpp"
#include "toromon/intmat.hpp"
#include "toromon/monoid.hpp"

namespace toromon {

// Point of the affine toric variety of a monoid, described by the orbit it
// lies on (the face of generators that stay invertible there) and a
// character on the saturated span of that face.
//
// split.full_basis columns z_1 .. z_m are a basis of the ambient lattice;
// the last m-r columns span the face sublattice and char_values[i] is the
// value of the character on column r+i. The first r columns are transverse
// to the orbit, so their characters vanish at the point.
struct ToricPoint {
    AffineMonoid monoid;
    std::vector<int> face;
    BasisSplit split;
    std::vector<ExactScalar> char_values;
    FieldPtr residue_field;

    // Validates and constructs. Requirements:
    //   - face indices are distinct and in range;
    //   - face condition: whenever a sum of two generators lies in the
    //     monoid generated by the face, both summands are face generators;
    //   - one nonzero value per basis vector of the face sublattice.
    static ToricPoint create(AffineMonoid monoid, std::vector<int> face,
                             std::vector<ExactScalar> values, FieldPtr field);

    int ambient_rank() const { return monoid.ambient_rank; }
    int vanishing_count() const { return split.r; }

    // Basis of the face sublattice, m x (m-r).
    IntMatrix face_basis() const;
};

enum class CharEvalKind { Value, Zero, Undefined };

struct CharEval {
    CharEvalKind kind = CharEvalKind::Undefined;
    std::optional<ExactScalar> value;
};

// Evaluates the character with the given exponent vector at the point:
// a Value on the face sublattice, Zero on the rest of the monoid, and
// Undefined outside both.
CharEval eval_character(const ToricPoint& p, const std::vector<Int>& exponent);

// Monomial map between ambient character lattices; row j is the exponent
// vector of the pullback of the j-th target coordinate character.
struct ToricMorphismData {
    int source_rank = 0;
    int target_rank = 0;
    IntMatrix lattice_map;

    static ToricMorphismData create(int source_rank, int target_rank,
                                    IntMatrix lattice_map);

    // Exponent vector of the pullback of the character with the given
    // target exponent vector.
    std::vector<Int> pullback_exponent(const std::vector<Int>& target_vec) const;
};

struct RegularityResult {
    bool regular = false;
    std::optional<std::vector<Int>> witness;
};

// The monomial map is a morphism of affine varieties iff the pullback of
// every target generator has exponent vector inside the source monoid;
// the witness reports the first generator that fails.
RegularityResult is_regular_toric_morphism(const ToricMorphismData& g,
                                           const AffineMonoid& source,
                                           const AffineMonoid& target);

// Rational point of the target torus, stored as the coordinate values of
// the target characters c_1 .. c_n.
struct TranslationPoint {
    std::vector<ExactScalar> values;

    static TranslationPoint create(std::vector<ExactScalar> values);
};

// Translation that rescales the j-th target coordinate by 1/lambda_j.
TranslationPoint translation_from_lambda(const std::vector<ExactScalar>& lambda);

}  // namespace toromon
