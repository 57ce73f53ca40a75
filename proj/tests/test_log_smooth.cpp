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
#include "toromon/log_smooth.hpp"
#include "toromon/monomialize.hpp"

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

std::vector<Int> vec(std::initializer_list<long> entries) {
    std::vector<Int> v;
    for (long e : entries) v.emplace_back(e);
    return v;
}

ExactScalar q(long num, long den = 1) {
    return ExactScalar(FieldSpec::rationals(), Rat(num, den));
}

AffineMonoid nn(int m) {
    std::vector<std::vector<Int>> gens;
    for (int i = 0; i < m; ++i) {
        std::vector<Int> e(m, Int(0));
        e[i] = 1;
        gens.push_back(e);
    }
    return AffineMonoid::create(m, gens);
}

AffineMonoid quadric_cone() {
    return AffineMonoid::create(2, {vec({2, 0}), vec({1, 1}), vec({0, 2})});
}

ModelPtr plane_origin(int cutoff) {
    ToricPoint x = ToricPoint::create(nn(2), {}, {}, FieldSpec::rationals());
    return LocalModel::create(std::move(x), cutoff);
}

ModelPtr axis_point(int cutoff, const ExactScalar& value) {
    ToricPoint x =
        ToricPoint::create(nn(2), {0}, {value}, FieldSpec::rationals());
    return LocalModel::create(std::move(x), cutoff);
}

ModelPtr quadric_vertex(int cutoff) {
    ToricPoint x =
        ToricPoint::create(quadric_cone(), {}, {}, FieldSpec::rationals());
    return LocalModel::create(std::move(x), cutoff);
}

// Random unit with constant term one.
TruncatedSeries random_unit(const ModelPtr& model, std::mt19937& rng,
                            int terms) {
    std::uniform_int_distribution<int> pick(0, 100);
    std::uniform_int_distribution<long> num(-5, 5);
    std::uniform_int_distribution<long> den(1, 3);
    int r = model->vanishing_count();
    int u = model->unit_count();
    TruncatedSeries out = TruncatedSeries::constant(model, q(1));
    for (int t = 0; t < terms; ++t) {
        std::vector<Int> sharp(r, Int(0));
        std::vector<Int> sdeg(u, Int(0));
        int gens = static_cast<int>(model->sharp.generators.size());
        for (int rep = 0; rep < 2 && gens > 0; ++rep) {
            if (pick(rng) < 50) continue;
            const auto& g = model->sharp.generators[pick(rng) % gens];
            for (int i = 0; i < r; ++i) sharp[i] += g[i];
        }
        for (int i = 0; i < u; ++i) sdeg[i] = pick(rng) % 3;
        bool constant_key =
            std::all_of(sharp.begin(), sharp.end(),
                        [](const Int& x) { return x == 0; }) &&
            std::all_of(sdeg.begin(), sdeg.end(),
                        [](const Int& x) { return x == 0; });
        if (constant_key) continue;
        out.accumulate(sharp, sdeg, q(num(rng), den(rng)));
    }
    return out;
}

// Random sharp monoid element reached by at most two generators.
std::vector<Int> random_sharp(const ModelPtr& model, std::mt19937& rng) {
    std::uniform_int_distribution<int> pick(0, 100);
    int r = model->vanishing_count();
    std::vector<Int> sharp(r, Int(0));
    int gens = static_cast<int>(model->sharp.generators.size());
    for (int rep = 0; rep < 2 && gens > 0; ++rep) {
        if (pick(rng) < 40) continue;
        const auto& g = model->sharp.generators[pick(rng) % gens];
        for (int i = 0; i < r; ++i) sharp[i] += g[i];
    }
    return sharp;
}

MorphismGerm single_germ(const ModelPtr& model, TruncatedSeries y) {
    return MorphismGerm::create(model, nn(1), {std::move(y)},
                                FieldSpec::rationals());
}

}  // namespace

TEST_CASE("germ validation") {
    ModelPtr m = plane_origin(4);
    TruncatedSeries z1 = TruncatedSeries::monomial(m, vec({1, 0}), {}, q(1));
    TruncatedSeries z2 = TruncatedSeries::monomial(m, vec({0, 1}), {}, q(1));

    CHECK(kind_of([&] {
              MorphismGerm::create(m, nn(3), {z1, z2, z1},
                                   FieldSpec::rationals());
          }) == ErrorKind::ValidationError);
    CHECK(kind_of([&] {
              MorphismGerm::create(m, nn(2), {z1, TruncatedSeries::zero(m)},
                                   FieldSpec::rationals());
          }) == ErrorKind::ValidationError);
    CHECK(kind_of([&] {
              MorphismGerm::create(m, nn(2), {z1}, FieldSpec::rationals());
          }) == ErrorKind::ValidationError);
    FieldPtr qi = FieldSpec::number_field({Int(1), Int(0), Int(1)}, "i");
    CHECK(kind_of([&] { MorphismGerm::create(m, nn(2), {z1, z2}, qi); }) ==
          ErrorKind::ValidationError);

    MorphismGerm ok = MorphismGerm::create(m, nn(2), {z1, z2},
                                           FieldSpec::rationals());
    CHECK(ok.target_rank == 2);
    CHECK(ok.source_rank() == 2);
}

TEST_CASE("log jacobian of a monomial times unit on the plane") {
    ModelPtr m = plane_origin(6);
    TruncatedSeries one = TruncatedSeries::constant(m, q(1));
    TruncatedSeries z1 = TruncatedSeries::monomial(m, vec({1, 0}), {}, q(1));
    TruncatedSeries z1z2 = TruncatedSeries::monomial(m, vec({1, 1}), {}, q(1));
    TruncatedSeries y = (one + z1) * z1z2;

    LogJacobian jac = log_jacobian(single_germ(m, y));
    REQUIRE(jac.at_point.size() == 1);
    CHECK(jac.at_point[0][0] == q(1));
    CHECK(jac.at_point[0][1] == q(1));

    // First entry is 1 + z1/(1+z1) = 1 + z1 - z1^2 + z1^3 - ...
    TruncatedSeries expected = one;
    for (long k = 1; k <= 6; ++k)
        expected.accumulate(vec({k, 0}), {}, q(k % 2 == 1 ? 1 : -1));
    CHECK(jac.entries[0][0] == expected);
    CHECK(jac.entries[0][1] == one);

    // A sum of coordinates admits no monomial-unit split.
    TruncatedSeries z2 = TruncatedSeries::monomial(m, vec({0, 1}), {}, q(1));
    CHECK(kind_of([&] { log_jacobian(single_germ(m, z1 + z2)); }) ==
          ErrorKind::NotMonomialTimesUnit);
}

TEST_CASE("identity germ has the identity jacobian") {
    ModelPtr m = plane_origin(5);
    TruncatedSeries z1 = TruncatedSeries::monomial(m, vec({1, 0}), {}, q(1));
    TruncatedSeries z2 = TruncatedSeries::monomial(m, vec({0, 1}), {}, q(1));
    MorphismGerm f =
        MorphismGerm::create(m, nn(2), {z1, z2}, FieldSpec::rationals());

    LogJacobian jac = log_jacobian(f);
    for (int j = 0; j < 2; ++j)
        for (int i = 0; i < 2; ++i)
            CHECK(jac.at_point[j][i] == (i == j ? q(1) : q(0)));

    LogSmoothResult res = is_log_smooth(f);
    CHECK(res.smooth);
    CHECK(res.rank == 2);
    CHECK(res.minor_rows == std::vector<int>{0, 1});
    CHECK(res.minor_cols == std::vector<int>{0, 1});
    REQUIRE(res.minor_det.has_value());
    CHECK(*res.minor_det == q(1));
}

TEST_CASE("dependent rows are not log smooth") {
    ModelPtr m = plane_origin(5);
    TruncatedSeries one = TruncatedSeries::constant(m, q(1));
    TruncatedSeries z1 = TruncatedSeries::monomial(m, vec({1, 0}), {}, q(1));
    TruncatedSeries z1z2 = TruncatedSeries::monomial(m, vec({1, 1}), {}, q(1));
    MorphismGerm f = MorphismGerm::create(m, nn(2), {z1z2, z1z2 * (one + z1)},
                                          FieldSpec::rationals());

    LogSmoothResult res = is_log_smooth(f);
    CHECK_FALSE(res.smooth);
    CHECK(res.rank == 1);
    CHECK(res.minor_rows.size() == 1);
    REQUIRE(res.minor_det.has_value());
    CHECK_FALSE(res.minor_det->is_zero());
}

TEST_CASE("jacobian rows satisfy the defining identity on fuzzed germs") {
    std::mt19937 rng(20260814);
    std::vector<ModelPtr> models = {plane_origin(6), axis_point(6, q(3)),
                                    quadric_vertex(6)};
    for (const ModelPtr& m : models) {
        int r = m->vanishing_count();
        for (int trial = 0; trial < 60; ++trial) {
            std::vector<Int> sharp = random_sharp(m, rng);
            std::vector<Int> sdeg(m->unit_count(), Int(0));
            TruncatedSeries y =
                TruncatedSeries::monomial(m, sharp, sdeg, q(1)) *
                random_unit(m, rng, 5);
            REQUIRE_FALSE(y.is_zero());
            LogJacobian jac = log_jacobian(single_germ(m, y));
            LogDerivativeVector dy = dlog_coefficients(y);
            for (int i = 0; i < m->ambient_rank(); ++i) {
                // dy = sum_i J_i y dz_i/z_i termwise.
                CHECK(jac.entries[0][i] * y == dy.entries[i]);
                // The first r columns of J(x) are the monomial exponents.
                if (i < r)
                    CHECK(jac.at_point[0][i] ==
                          ExactScalar(m->field(), Rat(sharp[i])));
            }
        }
    }
}

TEST_CASE("scalar rank and determinant") {
    FieldPtr qq = FieldSpec::rationals();
    std::vector<std::vector<ExactScalar>> a = {{q(1), q(2)}, {q(2), q(4)}};
    ScalarRank rk = scalar_rank(a, qq);
    CHECK(rk.rank == 1);
    CHECK(scalar_det(a, qq) == q(0));

    std::vector<std::vector<ExactScalar>> b = {{q(0), q(3)}, {q(2), q(7)}};
    CHECK(scalar_rank(b, qq).rank == 2);
    CHECK(scalar_det(b, qq) == q(-6));

    FieldPtr qi = FieldSpec::number_field({Int(1), Int(0), Int(1)}, "i");
    ExactScalar i = ExactScalar::generator(qi);
    ExactScalar one(qi, Rat(1));
    std::vector<std::vector<ExactScalar>> c = {{i, one}, {one, -i}};
    CHECK(scalar_rank(c, qi).rank == 1);
    std::vector<std::vector<ExactScalar>> d = {{i, one}, {one, i}};
    CHECK(scalar_det(d, qi) == ExactScalar(qi, Rat(-2)));

    // Cross-check against the integer determinant on random matrices.
    std::mt19937 rng(77);
    std::uniform_int_distribution<long> entry(-9, 9);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 1 + trial % 4;
        IntMatrix im(n, n);
        std::vector<std::vector<ExactScalar>> sm(
            n, std::vector<ExactScalar>(n, q(0)));
        for (int r = 0; r < n; ++r)
            for (int col = 0; col < n; ++col) {
                long v = entry(rng);
                im.at(r, col) = v;
                sm[r][col] = q(v);
            }
        CHECK(scalar_det(sm, qq) ==
              ExactScalar(qq, Rat(det_and_inverse(im).det)));
    }
}

TEST_CASE("augmentation appends the missing coordinate character") {
    ModelPtr m = plane_origin(6);
    TruncatedSeries one = TruncatedSeries::constant(m, q(1));
    TruncatedSeries z1z2 = TruncatedSeries::monomial(m, vec({1, 1}), {}, q(1));
    MorphismGerm f = single_germ(m, (one + TruncatedSeries::monomial(
                                               m, vec({1, 0}), {}, q(1))) *
                                        z1z2);

    MorphismGerm g = augment_to_equal_dim(f);
    REQUIRE(g.target_rank == 2);
    CHECK(g.pullbacks[0] == f.pullbacks[0]);
    CHECK(g.pullbacks[1] ==
          TruncatedSeries::monomial(m, vec({0, 1}), {}, q(1)));
    CHECK(g.target_monoid.ambient_rank == 2);
    CHECK(g.target_monoid.generators ==
          std::vector<std::vector<Int>>{vec({1, 0}), vec({0, 1})});

    LogJacobian jac = log_jacobian(g);
    CHECK(jac.at_point[0][0] == q(1));
    CHECK(jac.at_point[0][1] == q(1));
    CHECK(jac.at_point[1][0] == q(0));
    CHECK(jac.at_point[1][1] == q(1));
    CHECK(is_log_smooth(g).smooth);

    // Already equal-dimensional germs pass through unchanged.
    MorphismGerm h = augment_to_equal_dim(g);
    CHECK(h.target_rank == 2);
    CHECK(h.pullbacks[0] == g.pullbacks[0]);
    CHECK(h.pullbacks[1] == g.pullbacks[1]);
}

TEST_CASE("augmentation requires log smoothness") {
    ModelPtr m = plane_origin(5);
    // J(x) row (2,2) twice: rank 1 < 2.
    TruncatedSeries y =
        TruncatedSeries::monomial(m, vec({2, 2}), {}, q(1));
    MorphismGerm f = MorphismGerm::create(m, nn(2), {y, y.scaled(q(3))},
                                          FieldSpec::rationals());
    CHECK(kind_of([&] { augment_to_equal_dim(f); }) == ErrorKind::NotLogSmooth);
}

TEST_CASE("augmentation completes fuzzed single-character germs") {
    std::mt19937 rng(424242);
    std::vector<ModelPtr> models = {plane_origin(6), axis_point(6, q(2)),
                                    quadric_vertex(6)};
    for (const ModelPtr& m : models) {
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<Int> sharp = random_sharp(m, rng);
            bool zero = std::all_of(sharp.begin(), sharp.end(),
                                    [](const Int& x) { return x == 0; });
            if (zero) sharp = m->sharp.generators.empty()
                                  ? sharp
                                  : m->sharp.generators[0];
            std::vector<Int> sdeg(m->unit_count(), Int(0));
            TruncatedSeries y =
                TruncatedSeries::monomial(m, sharp, sdeg, q(1)) *
                random_unit(m, rng, 4);
            MorphismGerm f = single_germ(m, y);
            if (!is_log_smooth(f).smooth) continue;
            MorphismGerm g = augment_to_equal_dim(f);
            CHECK(g.target_rank == m->ambient_rank());
            CHECK(g.pullbacks[0] == f.pullbacks[0]);
            LogSmoothResult res = is_log_smooth(g);
            CHECK(res.smooth);
            CHECK(res.rank == m->ambient_rank());
        }
    }
}
