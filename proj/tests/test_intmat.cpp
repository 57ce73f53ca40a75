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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>

#include "toromon/error.hpp"
#include "toromon/intmat.hpp"

using namespace toromon;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected a toromon::Error");
    return ErrorKind::InternalError;
}

IntMatrix random_matrix(std::mt19937& rng, int max_dim = 6, long height = 20) {
    std::uniform_int_distribution<int> dim(1, max_dim);
    std::uniform_int_distribution<long> entry(-height, height);
    IntMatrix m(dim(rng), dim(rng));
    for (auto& e : m.entries) e = entry(rng);
    return m;
}

// Random unimodular matrix: shear the identity with random integer row ops.
IntMatrix random_unimodular(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> idx(0, n - 1);
    std::uniform_int_distribution<long> coef(-3, 3);
    IntMatrix m = IntMatrix::identity(n);
    for (int step = 0; step < 4 * n; ++step) {
        int a = idx(rng), b = idx(rng);
        if (a == b) continue;
        Int c(coef(rng));
        for (int j = 0; j < n; ++j) m.at(a, j) += c * m.at(b, j);
    }
    return m;
}

bool is_unimodular(const IntMatrix& m) {
    Int det = det_and_inverse(m).det;
    return det == 1 || det == -1;
}

// Upper echelon with positive pivots and entries above each pivot reduced.
bool is_row_hnf(const IntMatrix& h) {
    int prev_col = -1;
    bool seen_zero_row = false;
    for (int i = 0; i < h.rows; ++i) {
        int lead = -1;
        for (int j = 0; j < h.cols; ++j)
            if (h.at(i, j) != 0) {
                lead = j;
                break;
            }
        if (lead < 0) {
            seen_zero_row = true;
            continue;
        }
        if (seen_zero_row) return false;
        if (lead <= prev_col) return false;
        if (h.at(i, lead) <= 0) return false;
        for (int k = 0; k < i; ++k)
            if (h.at(k, lead) < 0 || h.at(k, lead) >= h.at(i, lead)) return false;
        prev_col = lead;
    }
    return true;
}

bool is_snf_diagonal(const IntMatrix& d) {
    for (int i = 0; i < d.rows; ++i)
        for (int j = 0; j < d.cols; ++j)
            if (i != j && d.at(i, j) != 0) return false;
    int n = std::min(d.rows, d.cols);
    for (int i = 0; i < n; ++i)
        if (d.at(i, i) < 0) return false;
    for (int i = 0; i + 1 < n; ++i) {
        if (d.at(i, i) == 0 && d.at(i + 1, i + 1) != 0) return false;
        if (d.at(i, i) != 0 && d.at(i + 1, i + 1) % d.at(i, i) != 0) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("hnf on simple matrices") {
    IntMatrix id = IntMatrix::identity(2);
    auto res = hnf(id);
    CHECK(res.h == id);
    CHECK(res.u == id);

    // Exhaustively derivable 2x2 case: the column lattice of [[2,1],[0,1]]
    // has Hermite basis rows (2,0) and (0,1).
    IntMatrix a = IntMatrix::from_rows({{Int(2), Int(1)}, {Int(0), Int(1)}});
    auto res2 = hnf(a);
    CHECK(res2.h == IntMatrix::from_rows({{Int(2), Int(0)}, {Int(0), Int(1)}}));
    CHECK(res2.u * a == res2.h);
    CHECK(is_unimodular(res2.u));

    IntMatrix zero(2, 2);
    auto res3 = hnf(zero);
    CHECK(res3.h == zero);
    CHECK(res3.u == IntMatrix::identity(2));
}

TEST_CASE("snf on simple matrices") {
    // gcd-of-minors oracle: d1 = gcd of entries = 1, d1*d2 = |det| = 6.
    IntMatrix a = IntMatrix::from_rows({{Int(2), Int(0)}, {Int(0), Int(3)}});
    auto res = snf(a);
    CHECK(res.d == IntMatrix::from_rows({{Int(1), Int(0)}, {Int(0), Int(6)}}));
    CHECK(res.u * a * res.v == res.d);

    // gcd of entries 2; |det| = 8, so the second invariant factor is 4.
    IntMatrix b = IntMatrix::from_rows({{Int(2), Int(4)}, {Int(6), Int(8)}});
    auto res2 = snf(b);
    CHECK(res2.d == IntMatrix::from_rows({{Int(2), Int(0)}, {Int(0), Int(4)}}));

    IntMatrix zero(3, 2);
    auto res3 = snf(zero);
    CHECK(res3.d == zero);
}

TEST_CASE("determinant and inverse") {
    IntMatrix a = IntMatrix::from_rows({{Int(1), Int(1)}, {Int(1), Int(2)}});
    auto res = det_and_inverse(a);
    CHECK(res.det == 1);
    REQUIRE(res.inverse.has_value());
    // Adjugate oracle for 2x2: inverse = [[d,-b],[-c,a]] / det.
    RatMatrix expected(2, 2);
    expected.at(0, 0) = 2;
    expected.at(0, 1) = -1;
    expected.at(1, 0) = -1;
    expected.at(1, 1) = 1;
    CHECK(*res.inverse == expected);

    CHECK(det_and_inverse(IntMatrix::identity(3)).det == 1);

    IntMatrix sing = IntMatrix::from_rows({{Int(1), Int(2)}, {Int(2), Int(4)}});
    auto res2 = det_and_inverse(sing);
    CHECK(res2.det == 0);
    CHECK(!res2.inverse.has_value());
}

TEST_CASE("hnf and snf transformation identities on random matrices") {
    std::mt19937 rng(20260814);
    for (int trial = 0; trial < 500; ++trial) {
        IntMatrix a = random_matrix(rng);
        auto hr = hnf(a);
        REQUIRE(hr.u * a == hr.h);
        REQUIRE(is_unimodular(hr.u));
        REQUIRE(is_row_hnf(hr.h));

        auto sr = snf(a);
        REQUIRE(sr.u * a * sr.v == sr.d);
        REQUIRE(is_unimodular(sr.u));
        REQUIRE(is_unimodular(sr.v));
        REQUIRE(is_snf_diagonal(sr.d));

        if (a.rows == a.cols) {
            auto di = det_and_inverse(a);
            Int prod(1);
            for (int i = 0; i < a.rows; ++i) prod *= sr.d.at(i, i);
            REQUIRE(abs(di.det) == prod);
            if (di.det != 0) {
                RatMatrix check = RatMatrix(a) * *di.inverse;
                REQUIRE(check == RatMatrix::identity(a.rows));
            }
        }
    }
}

TEST_CASE("column completion") {
    IntMatrix one_col = IntMatrix::from_columns({{Int(1), Int(1)}});
    IntMatrix done = complete_columns(one_col);
    CHECK(done == IntMatrix::from_rows({{Int(1), Int(1)}, {Int(1), Int(0)}}));
    CHECK(det_and_inverse(done).det != 0);

    CHECK(complete_columns(IntMatrix(2, 0)) == IntMatrix::identity(2));

    IntMatrix scalar = IntMatrix::from_columns({{Int(4)}});
    CHECK(complete_columns(scalar) == scalar);

    IntMatrix dependent =
        IntMatrix::from_columns({{Int(1), Int(2)}, {Int(2), Int(4)}});
    CHECK(kind_of([&] { complete_columns(dependent); }) ==
          ErrorKind::RankDeficient);
}

TEST_CASE("column completion properties on random input") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> mdist(1, 6);
    std::uniform_int_distribution<long> entry(-10, 10);
    for (int trial = 0; trial < 200; ++trial) {
        int m = mdist(rng);
        std::uniform_int_distribution<int> rdist(0, m);
        int r = rdist(rng);
        IntMatrix cols(m, r);
        for (auto& e : cols.entries) e = entry(rng);
        if (rank_over_q(cols) < r) continue;
        IntMatrix full = complete_columns(cols);
        REQUIRE(det_and_inverse(full).det != 0);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < r; ++j) REQUIRE(full.at(i, j) == cols.at(i, j));
    }
}

TEST_CASE("basis split on simple sublattices") {
    // Sublattice spanned by (1,1): frozen deterministic output; the required
    // properties (unimodularity, exact span) are checked alongside.
    IntMatrix diag = IntMatrix::from_columns({{Int(1), Int(1)}});
    BasisSplit split = split_basis(diag);
    CHECK(split.r == 1);
    CHECK(split.full_basis ==
          IntMatrix::from_rows({{Int(0), Int(1)}, {Int(1), Int(1)}}));
    CHECK(is_unimodular(split.full_basis));

    BasisSplit full = split_basis(IntMatrix::identity(2));
    CHECK(full.r == 0);
    CHECK(full.full_basis == IntMatrix::identity(2));

    BasisSplit empty = split_basis(IntMatrix(2, 0));
    CHECK(empty.r == 2);
    CHECK(empty.full_basis == IntMatrix::identity(2));

    IntMatrix doubled = IntMatrix::from_columns({{Int(2), Int(0)}});
    CHECK(kind_of([&] { split_basis(doubled); }) == ErrorKind::NotSaturated);
}

TEST_CASE("basis split spans the sublattice exactly") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> mdist(1, 5);
    for (int trial = 0; trial < 200; ++trial) {
        int m = mdist(rng);
        std::uniform_int_distribution<int> kdist(0, m);
        int k = kdist(rng);
        IntMatrix uni = random_unimodular(rng, m);
        IntMatrix gens(m, k);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < k; ++j) gens.at(i, j) = uni.at(i, j);
        BasisSplit split = split_basis(gens);
        REQUIRE(split.r == m - k);
        REQUIRE(is_unimodular(split.full_basis));
        IntMatrix tail(m, k);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < k; ++j)
                tail.at(i, j) = split.full_basis.at(i, split.r + j);
        // Both inclusions via exact integer solves.
        for (int j = 0; j < k; ++j)
            REQUIRE(lattice_coordinates(tail, gens.column(j)).has_value());
        for (int j = 0; j < k; ++j)
            REQUIRE(lattice_coordinates(gens, tail.column(j)).has_value());
    }
}

TEST_CASE("saturation of a column span") {
    IntMatrix doubled = IntMatrix::from_columns({{Int(2), Int(0)}});
    IntMatrix sat = saturate_span(doubled);
    CHECK(sat == IntMatrix::from_columns({{Int(1), Int(0)}}));

    // Index-two sublattice of Z^2 spanned by (2,0),(1,1): saturation is Z^2.
    IntMatrix cone =
        IntMatrix::from_columns({{Int(2), Int(0)}, {Int(1), Int(1)}});
    IntMatrix sat2 = saturate_span(cone);
    CHECK(sat2.cols == 2);
    CHECK(lattice_coordinates(sat2, {Int(1), Int(0)}).has_value());
    CHECK(lattice_coordinates(sat2, {Int(0), Int(1)}).has_value());
}

TEST_CASE("lattice coordinate solve") {
    IntMatrix basis = IntMatrix::from_columns({{Int(1), Int(1)}});
    auto in = lattice_coordinates(basis, {Int(3), Int(3)});
    REQUIRE(in.has_value());
    CHECK((*in)[0] == 3);
    CHECK(!lattice_coordinates(basis, {Int(1), Int(2)}).has_value());
    CHECK(!lattice_coordinates(IntMatrix::from_columns({{Int(2), Int(0)}}),
                               {Int(1), Int(0)})
               .has_value());
}
