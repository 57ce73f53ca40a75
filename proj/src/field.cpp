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

#include "toromon/field.hpp"

#include <algorithm>
#include <iterator>

#include "toromon/error.hpp"

namespace toromon {

namespace {

// Dense rational polynomials, ascending coefficients, no trailing zeros.
using Poly = std::vector<Rat>;

void poly_normalize(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int poly_degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly poly_add(const Poly& a, const Poly& b) {
    Poly out(std::max(a.size(), b.size()), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    poly_normalize(out);
    return out;
}

Poly poly_scale(const Poly& a, const Rat& c) {
    if (c == 0) return {};
    Poly out = a;
    for (auto& x : out) x *= c;
    return out;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    poly_normalize(out);
    return out;
}

// a = q*b + r with deg r < deg b; b nonzero.
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b) {
    require_internal(!b.empty(), "polynomial division by zero");
    Poly q;
    while (!a.empty() && a.size() >= b.size()) {
        Rat c = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        if (q.size() < shift + 1) q.resize(shift + 1, Rat(0));
        q[shift] += c;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        poly_normalize(a);
    }
    poly_normalize(q);
    return {q, a};
}

Rat poly_eval(const Poly& p, const Rat& x) {
    Rat v(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * x + *it;
    return v;
}

Poly min_poly_as_poly(const FieldSpec& f) {
    Poly p;
    p.reserve(f.min_poly.size());
    for (const Int& c : f.min_poly) p.emplace_back(c);
    return p;
}

// Inverse of a modulo m (m irreducible, a nonzero mod m) via extended Euclid.
Poly poly_inverse_mod(Poly a, const Poly& m) {
    Poly r0 = m, r1 = std::move(a);
    Poly s0 = {}, s1 = {Rat(1)};
    while (!r1.empty()) {
        auto [q, r] = poly_divmod(r0, r1);
        Poly s = poly_add(s0, poly_scale(poly_mul(q, s1), Rat(-1)));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    require_internal(poly_degree(r0) == 0,
                     "gcd with the minimal polynomial is not constant");
    return poly_scale(s0, Rat(1) / r0[0]);
}

// All rational roots of a nonzero rational polynomial.
std::vector<Rat> rational_roots(Poly p) {
    poly_normalize(p);
    require_internal(!p.empty(), "rational_roots of the zero polynomial");
    std::vector<Rat> roots;
    std::size_t low = 0;
    while (low < p.size() && p[low] == 0) low++;
    if (low == p.size()) return roots;
    if (low > 0) {
        roots.push_back(Rat(0));
        p.erase(p.begin(), p.begin() + static_cast<long>(low));
    }
    if (p.size() == 1) return roots;
    Int den(1);
    for (const Rat& c : p) den = boost::multiprecision::lcm(den, denominator(c));
    std::vector<Int> ip;
    ip.reserve(p.size());
    for (const Rat& c : p) ip.push_back(numerator(c * Rat(den)));
    for (const Int& num : signed_divisors(ip.front())) {
        for (const Int& d : signed_divisors(ip.back())) {
            if (d <= 0) continue;
            Rat cand(num, d);
            if (poly_eval(p, cand) == 0 &&
                std::find(roots.begin(), roots.end(), cand) == roots.end())
                roots.push_back(cand);
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

// Monic integer polynomial division; returns true when the division is exact.
bool divides_exactly(const std::vector<Int>& factor,
                     const std::vector<Int>& poly) {
    std::vector<Int> rem = poly;
    while (rem.size() >= factor.size()) {
        Int c = rem.back();
        std::size_t shift = rem.size() - factor.size();
        for (std::size_t i = 0; i < factor.size(); ++i)
            rem[shift + i] -= c * factor[i];
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
    }
    return rem.empty();
}

}  // namespace

FieldPtr FieldSpec::rationals() {
    static FieldPtr q = std::make_shared<FieldSpec>();
    return q;
}

FieldPtr FieldSpec::number_field(std::vector<Int> min_poly,
                                 std::string generator_label,
                                 bool trusted_irreducible) {
    auto f = std::make_shared<FieldSpec>();
    f->kind = Kind::number_field;
    f->min_poly = std::move(min_poly);
    f->generator_label = std::move(generator_label);
    f->trusted_irreducible = trusted_irreducible;
    f->validate();
    return f;
}

void FieldSpec::validate() const {
    if (kind == Kind::rationals) {
        if (!min_poly.empty())
            fail(ErrorKind::ValidationError, "rationals carry no minimal polynomial");
        return;
    }
    int deg = static_cast<int>(min_poly.size()) - 1;
    if (deg < 2)
        fail(ErrorKind::ValidationError, "minimal polynomial must have degree >= 2");
    if (min_poly.back() != 1)
        fail(ErrorKind::ValidationError, "minimal polynomial must be monic");
    if (generator_label.empty())
        fail(ErrorKind::ValidationError, "number field needs a generator label");

    // Rational roots of a monic integer polynomial are integer divisors of
    // the constant term; for degree 2 and 3 their absence proves
    // irreducibility over Q.
    if (min_poly.front() == 0)
        fail(ErrorKind::ValidationError,
             "minimal polynomial is divisible by its variable", "root 0");
    Poly p = min_poly_as_poly(*this);
    for (const Int& d : signed_divisors(min_poly.front())) {
        if (poly_eval(p, Rat(d)) == 0)
            fail(ErrorKind::ValidationError, "minimal polynomial has a rational root",
                 d.str());
    }
    if (deg <= 3) return;

    if (!trusted_irreducible)
        fail(ErrorKind::ValidationError,
             "degree >= 4 minimal polynomial requires trusted_irreducible");
    // Cross-check the declaration: search monic integer factors of degree
    // 2 .. deg/2 with coefficient height <= 8 (complete up to that height by
    // Gauss's lemma).
    const long kHeight = 8;
    for (int fd = 2; fd <= deg / 2; ++fd) {
        std::vector<long> idx(fd, -kHeight);
        while (true) {
            std::vector<Int> factor;
            factor.reserve(fd + 1);
            for (long v : idx) factor.emplace_back(v);
            factor.emplace_back(1);
            if (factor.front() != 0 && divides_exactly(factor, min_poly)) {
                std::string witness;
                for (std::size_t i = 0; i < factor.size(); ++i)
                    witness += (i ? "," : "") + factor[i].str();
                fail(ErrorKind::ValidationError,
                     "declared-irreducible polynomial has a monic factor", witness);
            }
            int pos = 0;
            while (pos < fd && idx[pos] == kHeight) idx[pos++] = -kHeight;
            if (pos == fd) break;
            idx[pos]++;
        }
    }
}

ExactScalar::ExactScalar(FieldPtr field, Rat value) : field_(std::move(field)) {
    coeffs_.assign(static_cast<std::size_t>(field_->degree()), Rat(0));
    coeffs_[0] = std::move(value);
}

ExactScalar::ExactScalar(FieldPtr field, std::vector<Rat> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    reduce();
}

ExactScalar ExactScalar::generator(const FieldPtr& field) {
    require_internal(field->kind == FieldSpec::Kind::number_field,
                     "the rationals have no generator");
    std::vector<Rat> c(static_cast<std::size_t>(field->degree()), Rat(0));
    c[1] = 1;
    return ExactScalar(field, std::move(c));
}

void ExactScalar::reduce() {
    std::size_t deg = static_cast<std::size_t>(field_->degree());
    if (coeffs_.size() > deg) {
        Poly m = min_poly_as_poly(*field_);
        Poly p = coeffs_;
        poly_normalize(p);
        auto [q, r] = poly_divmod(std::move(p), m);
        (void)q;
        coeffs_ = std::move(r);
    }
    coeffs_.resize(deg, Rat(0));
}

bool ExactScalar::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rat& c) { return c == 0; });
}

bool ExactScalar::is_one() const {
    if (coeffs_[0] != 1) return false;
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(),
                       [](const Rat& c) { return c == 0; });
}

std::optional<Rat> ExactScalar::as_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return std::nullopt;
    return coeffs_[0];
}

ExactScalar ExactScalar::promoted_to(const FieldPtr& field) const {
    if (field_->same_field(*field)) {
        ExactScalar out = *this;
        out.field_ = field;
        return out;
    }
    auto rational = as_rational();
    if (!rational)
        fail(ErrorKind::FieldMismatch,
             "cannot move a non-rational value between fields", to_string());
    return ExactScalar(field, *rational);
}

#define TOROMON_ALIGN_FIELDS(rhs, op)                                       \
    if (!field_->same_field(*(rhs).field_)) {                               \
        if (field_->kind == FieldSpec::Kind::rationals)                     \
            return promoted_to((rhs).field_) op(rhs);                       \
        if ((rhs).field_->kind == FieldSpec::Kind::rationals)               \
            return *this op(rhs).promoted_to(field_);                       \
        fail(ErrorKind::FieldMismatch, "operands live in different fields", \
             to_string() + " vs " + (rhs).to_string());                     \
    }

ExactScalar ExactScalar::operator-() const {
    ExactScalar out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

ExactScalar ExactScalar::operator+(const ExactScalar& rhs) const {
    TOROMON_ALIGN_FIELDS(rhs, +)
    ExactScalar out = *this;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        out.coeffs_[i] += rhs.coeffs_[i];
    return out;
}

ExactScalar ExactScalar::operator-(const ExactScalar& rhs) const {
    TOROMON_ALIGN_FIELDS(rhs, -)
    ExactScalar out = *this;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        out.coeffs_[i] -= rhs.coeffs_[i];
    return out;
}

ExactScalar ExactScalar::operator*(const ExactScalar& rhs) const {
    TOROMON_ALIGN_FIELDS(rhs, *)
    if (field_->kind == FieldSpec::Kind::rationals)
        return ExactScalar(field_, coeffs_[0] * rhs.coeffs_[0]);
    Poly a = coeffs_, b = rhs.coeffs_;
    poly_normalize(a);
    poly_normalize(b);
    return ExactScalar(field_, poly_mul(a, b));
}

ExactScalar ExactScalar::operator/(const ExactScalar& rhs) const {
    TOROMON_ALIGN_FIELDS(rhs, /)
    return *this * rhs.inverse();
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& rhs) {
    *this = *this + rhs;
    return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& rhs) {
    *this = *this - rhs;
    return *this;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& rhs) {
    *this = *this * rhs;
    return *this;
}

bool ExactScalar::operator==(const ExactScalar& rhs) const {
    if (!field_->same_field(*rhs.field_)) {
        auto a = as_rational();
        auto b = rhs.as_rational();
        return a && b && *a == *b;
    }
    return coeffs_ == rhs.coeffs_;
}

ExactScalar ExactScalar::inverse() const {
    if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero");
    if (field_->kind == FieldSpec::Kind::rationals)
        return ExactScalar(field_, Rat(1) / coeffs_[0]);
    Poly a = coeffs_;
    poly_normalize(a);
    return ExactScalar(field_, poly_inverse_mod(a, min_poly_as_poly(*field_)));
}

ExactScalar ExactScalar::pow(long exponent) const {
    if (exponent < 0) return inverse().pow(-exponent);
    ExactScalar base = *this;
    ExactScalar out(field_, Rat(1));
    unsigned long e = static_cast<unsigned long>(exponent);
    while (e > 0) {
        if (e & 1) out *= base;
        base *= base;
        e >>= 1;
    }
    return out;
}

std::string ExactScalar::to_string() const {
    auto rational = as_rational();
    if (rational) return rat_to_string(*rational);
    std::string out;
    const std::string& g = field_->generator_label;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        if (!out.empty()) out += " + ";
        out += rat_to_string(coeffs_[i]);
        if (i == 1) out += "*" + g;
        if (i > 1) out += "*" + g + "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

namespace {

// rho^k = alpha_k(T)*rho + beta_k(T) where rho^2 = T*rho - nu; alpha_n is
// monic of degree n-1, so the trace equation below always has degree n.
std::pair<Poly, Poly> power_coordinates(unsigned n, const Rat& nu) {
    Poly alpha = {Rat(1)};
    Poly beta = {};
    for (unsigned k = 1; k < n; ++k) {
        Poly next_alpha(alpha.size() + 1, Rat(0));
        for (std::size_t i = 0; i < alpha.size(); ++i) next_alpha[i + 1] = alpha[i];
        next_alpha = poly_add(next_alpha, beta);
        beta = poly_scale(alpha, -nu);
        alpha = std::move(next_alpha);
    }
    return {alpha, beta};
}

// sqrt of a rational inside a quadratic field: either a rational square or a
// rational multiple of (2*theta + c1), whose square is the discriminant.
std::optional<ExactScalar> sqrt_in_quadratic(const FieldPtr& field,
                                             const Rat& value) {
    if (auto s = rational_nth_root(value, 2)) return ExactScalar(field, *s);
    Rat c1(field->min_poly[1]);
    Rat c0(field->min_poly[0]);
    Rat disc = c1 * c1 - 4 * c0;
    if (disc == 0 || value == 0) return std::nullopt;
    if (auto s = rational_nth_root(value / disc, 2)) {
        std::vector<Rat> coeffs = {*s * c1, *s * 2};
        return ExactScalar(field, std::move(coeffs));
    }
    return std::nullopt;
}

RootResult quadratic_field_root(const ExactScalar& a, unsigned n) {
    const FieldPtr& field = a.field();
    Rat c1(field->min_poly[1]);
    Rat c0(field->min_poly[0]);
    Rat a0 = a.coeffs()[0];
    Rat a1 = a.coeffs()[1];
    Rat norm = a0 * a0 - c1 * a0 * a1 + c0 * a1 * a1;
    Rat trace = 2 * a0 - c1 * a1;

    // Any root rho is itself quadratic-or-rational, so its norm nu satisfies
    // nu^n = N(a) and its trace is a rational zero of the trace equation.
    std::vector<Rat> nu_candidates;
    if (auto nu = rational_nth_root(norm, n)) {
        nu_candidates.push_back(*nu);
        if (n % 2 == 0 && *nu != 0) nu_candidates.push_back(-*nu);
    }
    for (const Rat& nu : nu_candidates) {
        auto [alpha, beta] = power_coordinates(n, nu);
        Poly trace_eq(alpha.size() + 1, Rat(0));
        for (std::size_t i = 0; i < alpha.size(); ++i) trace_eq[i + 1] = alpha[i];
        trace_eq = poly_add(trace_eq, poly_scale(beta, Rat(2)));
        trace_eq = poly_add(trace_eq, {-trace});
        for (const Rat& t : rational_roots(trace_eq)) {
            Rat alpha_t = poly_eval(alpha, t);
            Rat beta_t = poly_eval(beta, t);
            std::vector<ExactScalar> candidates;
            if (alpha_t != 0) {
                candidates.push_back(
                    (a - ExactScalar(field, beta_t)) *
                    ExactScalar(field, Rat(1) / alpha_t));
            } else {
                if (auto s = sqrt_in_quadratic(field, t * t - 4 * nu)) {
                    ExactScalar half(field, Rat(1, 2));
                    ExactScalar tt(field, t);
                    candidates.push_back((tt + *s) * half);
                    candidates.push_back((tt - *s) * half);
                }
            }
            for (const ExactScalar& rho : candidates)
                if (rho.pow(n) == a) return {rho, true};
        }
    }
    return {std::nullopt, true};
}

RootResult bounded_search_root(const ExactScalar& a, unsigned n) {
    static const Rat kValues[] = {Rat(0),     Rat(1),  Rat(-1), Rat(2),
                                  Rat(-2),    Rat(3),  Rat(-3), Rat(1, 2),
                                  Rat(-1, 2), Rat(3, 2), Rat(-3, 2)};
    const std::size_t base = std::size(kValues);
    std::size_t deg = static_cast<std::size_t>(a.field()->degree());
    std::vector<std::size_t> idx(deg, 0);
    while (true) {
        std::vector<Rat> coeffs;
        coeffs.reserve(deg);
        bool all_zero = true;
        for (std::size_t i : idx) {
            coeffs.push_back(kValues[i]);
            all_zero = all_zero && kValues[i] == 0;
        }
        if (!all_zero) {
            ExactScalar cand(a.field(), std::move(coeffs));
            if (cand.pow(n) == a) return {cand, true};
        }
        std::size_t pos = 0;
        while (pos < deg && idx[pos] == base - 1) idx[pos++] = 0;
        if (pos == deg) break;
        idx[pos]++;
    }
    return {std::nullopt, false};
}

}  // namespace

RootResult nth_root(const ExactScalar& a, unsigned n) {
    require_internal(n >= 1, "nth_root needs n >= 1");
    if (a.is_zero()) return {a, true};
    if (n == 1) return {a, true};

    if (auto value = a.as_rational()) {
        if (auto r = rational_nth_root(*value, n))
            return {ExactScalar(a.field(), *r), true};
        if (a.field()->kind == FieldSpec::Kind::rationals)
            return {std::nullopt, true};
        // The root may still exist with a nonzero generator part.
    }
    if (a.field()->degree() == 2) return quadratic_field_root(a, n);
    return bounded_search_root(a, n);
}

}  // namespace toromon
