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

#ifndef TOROMON_FIELD_HPP
#define TOROMON_FIELD_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "toromon/numeric.hpp"

namespace toromon {

// Q or a simple number field Q(theta) with monic integer minimal polynomial.
// Towers are not supported; flatten to a single generator.
struct FieldSpec {
    enum class Kind { rationals, number_field };

    Kind kind = Kind::rationals;
    // Ascending coefficients, size degree+1, monic; empty for Q.
    std::vector<Int> min_poly;
    std::string generator_label;
    // Degree >= 4 irreducibility cannot be decided by the rational root
    // test; the author must vouch and a bounded factor search cross-checks.
    bool trusted_irreducible = false;

    static std::shared_ptr<const FieldSpec> rationals();
    static std::shared_ptr<const FieldSpec> number_field(
        std::vector<Int> min_poly, std::string generator_label,
        bool trusted_irreducible = false);

    int degree() const {
        return kind == Kind::rationals ? 1
                                       : static_cast<int>(min_poly.size()) - 1;
    }

    // Checks monicity, degree >= 2, and irreducibility over Q (rational root
    // test for degree <= 3, trusted flag plus bounded monic factor search
    // beyond). Throws Error(ValidationError).
    void validate() const;

    bool same_field(const FieldSpec& other) const {
        return kind == other.kind && min_poly == other.min_poly;
    }
};

using FieldPtr = std::shared_ptr<const FieldSpec>;

// Element of the field in canonical form: reduced rational coefficients of a
// polynomial in theta of degree < deg(min_poly); length 1 over Q. Equality is
// coefficient-wise.
class ExactScalar {
  public:
    ExactScalar() : ExactScalar(FieldSpec::rationals(), Rat(0)) {}
    ExactScalar(FieldPtr field, Rat value);
    ExactScalar(FieldPtr field, std::vector<Rat> coeffs);

    static ExactScalar generator(const FieldPtr& field);

    const FieldPtr& field() const { return field_; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;

    // The rational value if all theta-coefficients beyond degree 0 vanish.
    std::optional<Rat> as_rational() const;

    ExactScalar operator-() const;
    ExactScalar operator+(const ExactScalar& rhs) const;
    ExactScalar operator-(const ExactScalar& rhs) const;
    ExactScalar operator*(const ExactScalar& rhs) const;
    ExactScalar operator/(const ExactScalar& rhs) const;
    ExactScalar& operator+=(const ExactScalar& rhs);
    ExactScalar& operator-=(const ExactScalar& rhs);
    ExactScalar& operator*=(const ExactScalar& rhs);

    bool operator==(const ExactScalar& rhs) const;
    bool operator!=(const ExactScalar& rhs) const { return !(*this == rhs); }

    ExactScalar inverse() const;
    ExactScalar pow(long exponent) const;

    // Rebuilds the scalar over another field; the value must be rational
    // unless the fields agree. Throws Error(FieldMismatch) otherwise.
    ExactScalar promoted_to(const FieldPtr& field) const;

    std::string to_string() const;

  private:
    FieldPtr field_;
    std::vector<Rat> coeffs_;

    void reduce();
};

struct RootResult {
    // Engaged iff an n-th root exists and was found.
    std::optional<ExactScalar> root;
    // True when the no-root answer is proven (always true when a root is
    // returned; complete for Q and quadratic fields, bounded search above).
    bool certified = true;
};

// Partial n-th root: complete over Q (sign plus integer root extraction of
// numerator and denominator) and over quadratic fields (norm/trace candidate
// enumeration); bounded-height search for higher degree.
RootResult nth_root(const ExactScalar& a, unsigned n);

}  // namespace toromon

#endif
