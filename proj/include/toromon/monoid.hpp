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

#include "toromon/intmat.hpp"

namespace toromon {

// Finitely generated submonoid of Z^m together with a positive grading that
// bounds all membership searches. The grading h must satisfy h.g > 0 for
// every generator g; the default is the all-ones vector.
struct AffineMonoid {
    int ambient_rank = 0;
    std::vector<std::vector<Int>> generators;
    std::vector<Int> grading;

    // Validates and constructs. Requirements:
    //   - every generator lies in Z^ambient_rank, is nonzero, and no two
    //     generators coincide;
    //   - the generators span Q^ambient_rank;
    //   - h.g > 0 for every generator g (NoPositiveGrading otherwise);
    //   - saturation spot-check: every q in the monoid of bounded grading
    //     that is divisible by k <= 3 inside the generated group must have
    //     q/k in the monoid (NotSaturated otherwise).
    static AffineMonoid create(int ambient_rank,
                               std::vector<std::vector<Int>> generators,
                               std::optional<std::vector<Int>> grading = {});

    IntMatrix generator_columns() const;

    // Canonical basis of the group generated by the monoid, m x m.
    IntMatrix group_basis() const;

    Int weight(const std::vector<Int>& v) const;

    // Decides membership by exhaustive search over nonnegative generator
    // combinations; the positive grading bounds the recursion.
    bool contains(const std::vector<Int>& v) const;
};

// Membership of v in the monoid generated by gens, searched with the given
// positive grading. Exposed separately so that face submonoids can be
// queried without re-validating them as standalone monoids.
bool monoid_membership(const std::vector<std::vector<Int>>& gens,
                       const std::vector<Int>& grading,
                       const std::vector<Int>& v);

// All monoid elements of grading value <= max_weight, capped at node_cap
// entries (the cap keeps validation spot-checks bounded).
std::vector<std::vector<Int>> enumerate_monoid(
    const std::vector<std::vector<Int>>& gens, const std::vector<Int>& grading,
    const Int& max_weight, std::size_t node_cap);

}  // namespace toromon
