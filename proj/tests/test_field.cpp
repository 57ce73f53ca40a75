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
#include "toromon/field.hpp"

using namespace toromon;

namespace {

FieldPtr gaussian() {
    return FieldSpec::number_field({Int(1), Int(0), Int(1)}, "i");
}

FieldPtr root_two() {
    return FieldSpec::number_field({Int(-2), Int(0), Int(1)}, "w");
}

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected a toromon::Error");
    return ErrorKind::InternalError;
}

Rat random_rat(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-20, 20);
    std::uniform_int_distribution<long> den(1, 10);
    return Rat(num(rng), den(rng));
}

ExactScalar random_scalar(const FieldPtr& f, std::mt19937& rng) {
    std::vector<Rat> coeffs;
    for (int i = 0; i < f->degree(); ++i) coeffs.push_back(random_rat(rng));
    return ExactScalar(f, std::move(coeffs));
}

// Trial-division oracle: p/q (reduced) has a rational n-th root iff every
// prime exponent of p and of q is divisible by n, with the usual sign rule.
bool has_root_by_factoring(const Rat& a, unsigned n) {
    if (a == 0) return true;
    if (a < 0 && n % 2 == 0) return false;
    auto exponents_divisible = [&](Int v) {
        if (v < 0) v = -v;
        for (Int p = 2; p * p <= v; ++p) {
            unsigned e = 0;
            while (v % p == 0) {
                v /= p;
                e++;
            }
            if (e % n != 0) return false;
        }
        // Leftover prime appears once.
        return v == 1 || n == 1;
    };
    return exponents_divisible(numerator(a)) &&
           exponents_divisible(denominator(a));
}

}  // namespace

TEST_CASE("rational arithmetic basics") {
    auto q = FieldSpec::rationals();
    ExactScalar half(q, Rat(1, 2));
    ExactScalar third(q, Rat(1, 3));
    CHECK((half + third) == ExactScalar(q, Rat(5, 6)));
    CHECK((half * third) == ExactScalar(q, Rat(1, 6)));
    CHECK((half - half).is_zero());
    CHECK((half / half).is_one());
}

TEST_CASE("gaussian generator squares to minus one") {
    auto qi = gaussian();
    ExactScalar i = ExactScalar::generator(qi);
    CHECK((i * i) == ExactScalar(qi, Rat(-1)));
}

TEST_CASE("division matches the conjugate oracle") {
    auto qi = gaussian();
    ExactScalar one(qi, Rat(1));
    ExactScalar i = ExactScalar::generator(qi);
    ExactScalar num = one + i;
    ExactScalar den = one - i;
    // Oracle: multiply numerator and denominator by the conjugate 1+i, so the
    // denominator becomes the rational norm (1-i)(1+i) = 2.
    ExactScalar conj = one + i;
    ExactScalar oracle = (num * conj) * ExactScalar(qi, Rat(1, 2));
    CHECK((num / den) == oracle);
    CHECK((num / den) == i);
}

TEST_CASE("division by zero is rejected") {
    auto q = FieldSpec::rationals();
    ExactScalar one(q, Rat(1));
    ExactScalar zero(q, Rat(0));
    CHECK(kind_of([&] { (void)(one / zero); }) == ErrorKind::DivisionByZero);
}

TEST_CASE("cross-field arithmetic embeds rationals and rejects the rest") {
    auto qi = gaussian();
    auto qw = root_two();
    ExactScalar five(FieldSpec::rationals(), Rat(5));
    ExactScalar i = ExactScalar::generator(qi);
    CHECK((five + i) == (ExactScalar(qi, Rat(5)) + i));
    CHECK(kind_of([&] {
              (void)(i + ExactScalar::generator(qw));
          }) == ErrorKind::FieldMismatch);
    CHECK(five.promoted_to(qi) == ExactScalar(qi, Rat(5)));
}

TEST_CASE("field axioms hold on random triples") {
    std::mt19937 rng(20260814);
    for (const FieldPtr& f : {FieldSpec::rationals(), gaussian(), root_two()}) {
        for (int trial = 0; trial < 500; ++trial) {
            ExactScalar a = random_scalar(f, rng);
            ExactScalar b = random_scalar(f, rng);
            ExactScalar c = random_scalar(f, rng);
            REQUIRE(((a + b) + c) == (a + (b + c)));
            REQUIRE(((a * b) * c) == (a * (b * c)));
            REQUIRE((a * (b + c)) == (a * b + a * c));
            REQUIRE((a + (-a)).is_zero());
            if (!a.is_zero()) {
                REQUIRE((a * a.inverse()).is_one());
            }
        }
    }
}

TEST_CASE("rational value extraction") {
    auto qi = gaussian();
    CHECK(ExactScalar(qi, std::vector<Rat>{Rat(5, 6), Rat(0)}).as_rational() == Rat(5, 6));
    CHECK(!ExactScalar::generator(qi).as_rational().has_value());
    CHECK(ExactScalar(qi, std::vector<Rat>{Rat(3), Rat(0)}).as_rational() == Rat(3));
}

TEST_CASE("nth_root on rationals") {
    auto q = FieldSpec::rationals();
    auto r = nth_root(ExactScalar(q, Rat(4)), 2);
    REQUIRE(r.root.has_value());
    CHECK(*r.root == ExactScalar(q, Rat(2)));
    CHECK(nth_root(ExactScalar(q, Rat(-8)), 3).root == ExactScalar(q, Rat(-2)));
    auto none = nth_root(ExactScalar(q, Rat(2)), 2);
    CHECK(!none.root.has_value());
    CHECK(none.certified);
}

TEST_CASE("nth_root agrees with the factorization oracle over Q") {
    std::mt19937 rng(7);
    auto q = FieldSpec::rationals();
    std::uniform_int_distribution<long> value(1, 1000000);
    std::uniform_int_distribution<unsigned> degree(1, 5);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int trial = 0; trial < 500; ++trial) {
        Rat a(value(rng), value(rng));
        if (coin(rng)) a = -a;
        unsigned n = degree(rng);
        auto res = nth_root(ExactScalar(q, a), n);
        CHECK(res.certified);
        CHECK(res.root.has_value() == has_root_by_factoring(a, n));
        if (res.root) CHECK(res.root->pow(static_cast<long>(n)) == ExactScalar(q, a));
    }
}

TEST_CASE("square root of -1 in the gaussian field") {
    auto qi = gaussian();
    auto r = nth_root(ExactScalar(qi, Rat(-1)), 2);
    REQUIRE(r.root.has_value());
    ExactScalar i = ExactScalar::generator(qi);
    CHECK((*r.root == i || *r.root == -i));
    CHECK(r.root->pow(2) == ExactScalar(qi, Rat(-1)));
}

TEST_CASE("fourth root of the gaussian generator does not exist") {
    auto qi = gaussian();
    auto r = nth_root(ExactScalar::generator(qi), 4);
    CHECK(!r.root.has_value());
    CHECK(r.certified);
}

TEST_CASE("roots in a real quadratic field") {
    auto qw = root_two();
    ExactScalar w = ExactScalar::generator(qw);
    ExactScalar one(qw, Rat(1));
    // (1+w)^2 = 3 + 2w.
    ExactScalar square = (one + w) * (one + w);
    auto r = nth_root(square, 2);
    REQUIRE(r.root.has_value());
    CHECK(r.root->pow(2) == square);
}

TEST_CASE("nth_root finds constructed roots in quadratic fields") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<unsigned> degree(1, 4);
    for (const FieldPtr& f : {gaussian(), root_two()}) {
        for (int trial = 0; trial < 60; ++trial) {
            ExactScalar b = random_scalar(f, rng);
            if (b.is_zero()) continue;
            unsigned n = degree(rng);
            ExactScalar a = b.pow(static_cast<long>(n));
            auto r = nth_root(a, n);
            REQUIRE(r.root.has_value());
            CHECK(r.root->pow(static_cast<long>(n)) == a);
        }
    }
}

TEST_CASE("nth_root never fabricates roots") {
    std::mt19937 rng(1234);
    std::uniform_int_distribution<unsigned> degree(2, 5);
    for (const FieldPtr& f : {FieldSpec::rationals(), gaussian(), root_two()}) {
        for (int trial = 0; trial < 60; ++trial) {
            ExactScalar a = random_scalar(f, rng);
            if (a.is_zero()) continue;
            unsigned n = degree(rng);
            auto r = nth_root(a, n);
            if (r.root) CHECK(r.root->pow(static_cast<long>(n)) == a);
        }
    }
}

TEST_CASE("minimal polynomial validation") {
    CHECK_NOTHROW(FieldSpec::number_field({Int(1), Int(0), Int(1)}, "i"));
    CHECK_NOTHROW(FieldSpec::number_field({Int(-2), Int(0), Int(0), Int(1)}, "c"));
    CHECK(kind_of([] {
              FieldSpec::number_field({Int(-1), Int(0), Int(1)}, "t");
          }) == ErrorKind::ValidationError);
    CHECK(kind_of([] {
              FieldSpec::number_field({Int(2), Int(0), Int(2)}, "t");
          }) == ErrorKind::ValidationError);
    // Degree 4 needs the trusted flag, and the factor search still rejects
    // declared-irreducible products like (t^2-2)(t^2+2).
    CHECK(kind_of([] {
              FieldSpec::number_field({Int(1), Int(0), Int(0), Int(0), Int(1)},
                                      "z");
          }) == ErrorKind::ValidationError);
    CHECK_NOTHROW(FieldSpec::number_field(
        {Int(1), Int(0), Int(0), Int(0), Int(1)}, "z", true));
    CHECK(kind_of([] {
              FieldSpec::number_field({Int(-4), Int(0), Int(0), Int(0), Int(1)},
                                      "z", true);
          }) == ErrorKind::ValidationError);
}

TEST_CASE("higher-degree fields search roots within a bounded box") {
    auto qc = FieldSpec::number_field({Int(-2), Int(0), Int(0), Int(1)}, "c");
    ExactScalar c = ExactScalar::generator(qc);
    auto found = nth_root(ExactScalar(qc, Rat(2)), 3);
    REQUIRE(found.root.has_value());
    CHECK(*found.root == c);
    // Out of reach of the bounded search: reported uncertified.
    auto missed = nth_root(ExactScalar(qc, Rat(31, 7)), 5);
    if (!missed.root) CHECK(!missed.certified);
}

TEST_CASE("scalar printing") {
    auto qi = gaussian();
    ExactScalar v(qi, std::vector<Rat>{Rat(1, 2), Rat(-3)});
    CHECK(v.to_string() == "1/2 + -3*i");
    CHECK(ExactScalar(qi, Rat(7)).to_string() == "7");
    CHECK(ExactScalar(FieldSpec::rationals(), Rat(-5, 6)).to_string() == "-5/6");
}
