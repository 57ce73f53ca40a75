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

#ifndef TOROMON_INTMAT_HPP
#define TOROMON_INTMAT_HPP

#include <optional>
#include <string>
#include <vector>

#include "toromon/numeric.hpp"

namespace toromon {

// Dense arbitrary-precision integer matrix, row-major.
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Int> entries;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), entries(r * c) {}

    static IntMatrix identity(int n);
    static IntMatrix from_rows(const std::vector<std::vector<Int>>& data);
    static IntMatrix from_columns(const std::vector<std::vector<Int>>& data);

    Int& at(int i, int j) { return entries[static_cast<std::size_t>(i) * cols + j]; }
    const Int& at(int i, int j) const {
        return entries[static_cast<std::size_t>(i) * cols + j];
    }

    std::vector<Int> row(int i) const;
    std::vector<Int> column(int j) const;

    IntMatrix transposed() const;
    IntMatrix operator*(const IntMatrix& rhs) const;
    bool operator==(const IntMatrix& rhs) const = default;

    std::string to_string() const;
};

// Dense exact rational matrix (inverses, Jacobian evaluations over Q).
struct RatMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Rat> entries;

    RatMatrix() = default;
    RatMatrix(int r, int c) : rows(r), cols(c), entries(r * c) {}
    explicit RatMatrix(const IntMatrix& m);

    static RatMatrix identity(int n);

    Rat& at(int i, int j) { return entries[static_cast<std::size_t>(i) * cols + j]; }
    const Rat& at(int i, int j) const {
        return entries[static_cast<std::size_t>(i) * cols + j];
    }

    RatMatrix operator*(const RatMatrix& rhs) const;
    bool operator==(const RatMatrix& rhs) const = default;

    std::string to_string() const;
};

struct HnfResult {
    IntMatrix h;  // row Hermite normal form: upper echelon, positive pivots,
                  // entries above each pivot reduced into [0, pivot)
    IntMatrix u;  // unimodular, u * a = h
};

HnfResult hnf(const IntMatrix& a);

struct SnfResult {
    IntMatrix d;  // diagonal, d_i >= 0, d_i | d_{i+1}
    IntMatrix u;  // unimodular, u * a * v = d
    IntMatrix v;
};

SnfResult snf(const IntMatrix& a);

struct DetInverse {
    Int det;
    // Engaged iff det != 0.
    std::optional<RatMatrix> inverse;
};

DetInverse det_and_inverse(const IntMatrix& a);

int rank_over_q(const IntMatrix& a);

// Extends linearly independent columns (m x r) to a nonsingular m x m matrix
// by greedily appending standard basis vectors in increasing index order.
// Throws Error(RankDeficient) when the given columns are dependent.
IntMatrix complete_columns(const IntMatrix& first_cols);

struct BasisSplit {
    // m x m unimodular; columns are the basis z_1 .. z_m.
    IntMatrix full_basis;
    // Last m-r columns are a basis of the designated (saturated) sublattice.
    int r = 0;
};

// Splits Z^m along the saturated sublattice spanned by the given columns.
// Throws Error(NotSaturated) with the offending diagonal otherwise.
BasisSplit split_basis(const IntMatrix& sublattice_gens);

// Canonical (HNF-derived) basis of the Z-span of the given columns, m x k.
IntMatrix lattice_basis(const IntMatrix& cols);

// Canonical basis of the saturation of the Z-span in Z^m, m x k.
IntMatrix saturate_span(const IntMatrix& cols);

// Integer coordinates of v in the column lattice of basis (full column rank),
// or nullopt when v lies outside.
std::optional<std::vector<Int>> lattice_coordinates(const IntMatrix& basis,
                                                    const std::vector<Int>& v);

std::vector<Int> apply_matrix(const IntMatrix& m, const std::vector<Int>& v);

}  // namespace toromon

#endif
