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

#include <string>
#include <vector>

#include "toromon/log_smooth.hpp"

namespace toromon {

// Factorization of a series as character monomial times unit. The exponent
// is in z-basis coordinates with zero entries in the unit directions (unit
// characters are absorbed into the unit factor).
struct MonomialUnitForm {
    std::vector<Int> exponent;
    TruncatedSeries unit;
};

// Factors y as a character monomial times a unit; the sharp part of the
// exponent is the unique support key dividing every other support key.
// Throws NotMonomialTimesUnit when no factorization exists to the cutoff.
MonomialUnitForm extract_monomial_unit(const TruncatedSeries& y);

enum class MonomializeMode { rational_residue, root_capable };

struct DiagramCheck {
    int character_index = 0;
    bool pass = false;
    // Weight of the first discrepancy, or the cutoff on pass.
    Int weight_checked;
};

struct DiagramReport {
    bool all_pass = false;
    Int max_weight;
    std::vector<DiagramCheck> checks;
};

struct MonomializationResult {
    // Exponent matrix in z-basis coordinates, m x m after augmentation;
    // row j is the monomial exponent of the j-th pullback.
    IntMatrix exponents;
    std::vector<ExactScalar> lambda;
    // w_j = u_j / lambda_j; constant term 1 in rational_residue mode.
    std::vector<TruncatedSeries> w;
    std::vector<TruncatedSeries> epsilon;
    // Monomial map on ambient character lattices realizing the exponents.
    ToricMorphismData g;
    TranslationPoint t;
    // Germ after dimension augmentation; rows beyond the input are the
    // appended pure characters.
    MorphismGerm augmented;
    // Whether every monomial row is regular on the source chart shrunk
    // around the point (unit directions inverted).
    bool g_regular_on_chart = false;
    DiagramReport verification;
};

// Runs the full construction: normal forms, exponent completion, lambda
// and w, the multiplicative lifting of epsilon, the monomial map g, the
// translation t, and the commutativity verification.
MonomializationResult monomialize_pipeline(const MorphismGerm& f,
                                           MonomializeMode mode);

// Units epsilon with prod_i epsilon_i^{E_{j,i}} = w_j to the cutoff, for
// invertible E and units w_j with constant term one.
std::vector<TruncatedSeries> hensel_units(const IntMatrix& e,
                                          const std::vector<TruncatedSeries>& w);

// Re-checks the commutativity identity of a result against the germ:
// lambda_j^{-1} f*(c_j) = (prod_i epsilon_i^{E_{j,i}}) chi^{row_j} per
// augmented character j.
DiagramReport verify_diagram(const MorphismGerm& f,
                             const MonomializationResult& res);

struct EtaleResult {
    bool etale = false;
    // det of the full J(x) and of its lower-right unit block.
    ExactScalar full_det;
    ExactScalar unit_block_det;
    bool vanishing_block_zero = false;
    // Independent classical derivative computation: the unit block of J(x)
    // rescaled by row values psi_i(x) and column values z_j(x).
    ExactScalar rescaled_classical_det;
    bool classical_agrees = false;
};

// Criterion for a chart self-map psi (one pullback per z-basis character)
// to be etale at the point: each psi*(z_i) must be z_i times a unit
// (Condition1Violated otherwise), the vanishing block of J(x) must be zero
// and the unit block invertible.
EtaleResult etale_check(const MorphismGerm& psi);

struct CounterexampleCertificate {
    // J(x) of the quartic germ and its smoothness.
    ExactScalar jacobian_value;
    bool smooth = false;
    // Frozen leading coefficients of the square-root unit series agree
    // with the binomial recurrence.
    bool series_oracle_agrees = false;
    // No alpha in Q*, beta in Q(i) with alpha beta^4 = i: axis cases plus
    // the rational-root refutation of t^2 - 6t + 1.
    bool real_axis_excluded = false;
    bool imaginary_axis_excluded = false;
    bool quartic_polynomial_identity = false;
    bool no_rational_root = false;
    // Pipeline failures observed in both modes.
    bool rational_mode_rejected = false;
    bool root_mode_rejected = false;
    bool certified = false;
    std::string summary;
};

// Builds the quartic unit-obstruction germ over Q(i) in code and certifies
// that it is logarithmically smooth yet admits no monomial normalization
// over Q: the residue value i is not alpha beta^4 for rational alpha.
CounterexampleCertificate certify_counterexample(int cutoff);

}  // namespace toromon
