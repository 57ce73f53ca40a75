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

#include "toromon/monoid.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <sstream>

#include "toromon/error.hpp"

namespace toromon {

namespace {

Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
    Int s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

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

// Bound on the spot-check enumeration so validation stays cheap.
constexpr std::size_t kSpotCheckNodeCap = 20000;

}  // namespace

bool monoid_membership(const std::vector<std::vector<Int>>& gens,
                       const std::vector<Int>& grading,
                       const std::vector<Int>& v) {
    std::set<std::vector<Int>> dead;
    std::function<bool(const std::vector<Int>&)> search =
        [&](const std::vector<Int>& w) -> bool {
        bool zero = std::all_of(w.begin(), w.end(),
                                [](const Int& e) { return e == 0; });
        if (zero) return true;
        Int wt = dot(grading, w);
        if (wt <= 0) return false;
        if (dead.count(w)) return false;
        for (const auto& g : gens) {
            if (dot(grading, g) > wt) continue;
            std::vector<Int> next = w;
            for (std::size_t i = 0; i < next.size(); ++i) next[i] -= g[i];
            if (search(next)) return true;
        }
        dead.insert(w);
        return false;
    };
    return search(v);
}

std::vector<std::vector<Int>> enumerate_monoid(
    const std::vector<std::vector<Int>>& gens, const std::vector<Int>& grading,
    const Int& max_weight, std::size_t node_cap) {
    std::set<std::vector<Int>> seen;
    std::deque<std::vector<Int>> frontier;
    std::vector<Int> zero(grading.size(), Int(0));
    seen.insert(zero);
    frontier.push_back(zero);
    while (!frontier.empty() && seen.size() < node_cap) {
        std::vector<Int> w = frontier.front();
        frontier.pop_front();
        for (const auto& g : gens) {
            std::vector<Int> next = w;
            for (std::size_t i = 0; i < next.size(); ++i) next[i] += g[i];
            if (dot(grading, next) > max_weight) continue;
            if (seen.insert(next).second) frontier.push_back(next);
        }
    }
    return {seen.begin(), seen.end()};
}

AffineMonoid AffineMonoid::create(int ambient_rank,
                                  std::vector<std::vector<Int>> generators,
                                  std::optional<std::vector<Int>> grading) {
    if (ambient_rank <= 0)
        fail(ErrorKind::ValidationError, "monoid ambient rank must be positive");
    for (const auto& g : generators) {
        if (static_cast<int>(g.size()) != ambient_rank)
            fail(ErrorKind::ValidationError,
                 "monoid generator has wrong dimension", vec_to_string(g));
        if (std::all_of(g.begin(), g.end(), [](const Int& e) { return e == 0; }))
            fail(ErrorKind::ValidationError, "monoid generator is zero");
    }
    for (std::size_t i = 0; i < generators.size(); ++i)
        for (std::size_t j = i + 1; j < generators.size(); ++j)
            if (generators[i] == generators[j])
                fail(ErrorKind::ValidationError, "duplicate monoid generator",
                     vec_to_string(generators[i]));

    AffineMonoid s;
    s.ambient_rank = ambient_rank;
    s.generators = std::move(generators);
    s.grading = grading ? std::move(*grading)
                        : std::vector<Int>(ambient_rank, Int(1));
    if (static_cast<int>(s.grading.size()) != ambient_rank)
        fail(ErrorKind::ValidationError, "grading has wrong dimension");
    for (const auto& g : s.generators)
        if (dot(s.grading, g) <= 0)
            fail(ErrorKind::NoPositiveGrading,
                 "grading is not positive on generator", vec_to_string(g));

    if (rank_over_q(s.generator_columns()) != ambient_rank)
        fail(ErrorKind::ValidationError,
             "monoid generators do not span the ambient space");

    // Saturation spot-check relative to the generated group: points of the
    // group whose small multiple lands in the monoid must already belong to
    // it. Coarse but catches the common authoring mistakes.
    Int max_gen_weight(0);
    for (const auto& g : s.generators)
        max_gen_weight = std::max(max_gen_weight, dot(s.grading, g));
    IntMatrix group = s.group_basis();
    for (int k = 2; k <= 3; ++k) {
        Int bound = Int(2 * k) * max_gen_weight;
        auto elements =
            enumerate_monoid(s.generators, s.grading, bound, kSpotCheckNodeCap);
        for (const auto& q : elements) {
            std::vector<Int> p(q.size());
            bool divisible = true;
            for (std::size_t i = 0; i < q.size() && divisible; ++i) {
                if (q[i] % k != 0) divisible = false;
                else p[i] = q[i] / k;
            }
            if (!divisible) continue;
            if (!lattice_coordinates(group, p)) continue;
            if (!s.contains(p))
                fail(ErrorKind::NotSaturated,
                     "monoid fails the saturation spot-check",
                     vec_to_string(p));
        }
    }
    return s;
}

IntMatrix AffineMonoid::generator_columns() const {
    IntMatrix cols(ambient_rank, static_cast<int>(generators.size()));
    for (int j = 0; j < cols.cols; ++j)
        for (int i = 0; i < cols.rows; ++i) cols.at(i, j) = generators[j][i];
    return cols;
}

IntMatrix AffineMonoid::group_basis() const {
    return lattice_basis(generator_columns());
}

Int AffineMonoid::weight(const std::vector<Int>& v) const {
    require_internal(v.size() == grading.size(), "weight of wrong-size vector");
    return dot(grading, v);
}

bool AffineMonoid::contains(const std::vector<Int>& v) const {
    if (static_cast<int>(v.size()) != ambient_rank)
        fail(ErrorKind::ValidationError, "membership query has wrong dimension");
    return monoid_membership(generators, grading, v);
}

}  // namespace toromon
