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

#include "toromon/intmat.hpp"

#include <algorithm>

#include "toromon/error.hpp"

namespace toromon {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& data) {
    int r = static_cast<int>(data.size());
    int c = r == 0 ? 0 : static_cast<int>(data[0].size());
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        require_internal(static_cast<int>(data[i].size()) == c,
                         "ragged matrix rows");
        for (int j = 0; j < c; ++j) m.at(i, j) = data[i][j];
    }
    return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<std::vector<Int>>& data) {
    return from_rows(data).transposed();
}

std::vector<Int> IntMatrix::row(int i) const {
    std::vector<Int> out(cols);
    for (int j = 0; j < cols; ++j) out[j] = at(i, j);
    return out;
}

std::vector<Int> IntMatrix::column(int j) const {
    std::vector<Int> out(rows);
    for (int i = 0; i < rows; ++i) out[i] = at(i, j);
    return out;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix m(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(j, i) = at(i, j);
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    require_internal(cols == rhs.rows, "matrix product shape mismatch");
    IntMatrix m(rows, rhs.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            if (at(i, k) == 0) continue;
            for (int j = 0; j < rhs.cols; ++j)
                m.at(i, j) += at(i, k) * rhs.at(k, j);
        }
    return m;
}

std::string IntMatrix::to_string() const {
    std::string out = "[";
    for (int i = 0; i < rows; ++i) {
        out += i ? ",[" : "[";
        for (int j = 0; j < cols; ++j)
            out += (j ? "," : "") + at(i, j).str();
        out += "]";
    }
    return out + "]";
}

RatMatrix::RatMatrix(const IntMatrix& m) : RatMatrix(m.rows, m.cols) {
    for (std::size_t i = 0; i < m.entries.size(); ++i) entries[i] = m.entries[i];
}

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::operator*(const RatMatrix& rhs) const {
    require_internal(cols == rhs.rows, "matrix product shape mismatch");
    RatMatrix m(rows, rhs.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            if (at(i, k) == 0) continue;
            for (int j = 0; j < rhs.cols; ++j)
                m.at(i, j) += at(i, k) * rhs.at(k, j);
        }
    return m;
}

std::string RatMatrix::to_string() const {
    std::string out = "[";
    for (int i = 0; i < rows; ++i) {
        out += i ? ",[" : "[";
        for (int j = 0; j < cols; ++j)
            out += (j ? "," : "") + rat_to_string(at(i, j));
        out += "]";
    }
    return out + "]";
}

namespace {

void swap_rows(IntMatrix& m, int a, int b) {
    if (a == b) return;
    for (int j = 0; j < m.cols; ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(IntMatrix& m, int a, int b) {
    if (a == b) return;
    for (int i = 0; i < m.rows; ++i) std::swap(m.at(i, a), m.at(i, b));
}

// row[a] -= q * row[b]
void row_axpy(IntMatrix& m, int a, int b, const Int& q) {
    if (q == 0) return;
    for (int j = 0; j < m.cols; ++j) m.at(a, j) -= q * m.at(b, j);
}

void col_axpy(IntMatrix& m, int a, int b, const Int& q) {
    if (q == 0) return;
    for (int i = 0; i < m.rows; ++i) m.at(i, a) -= q * m.at(i, b);
}

void negate_row(IntMatrix& m, int a) {
    for (int j = 0; j < m.cols; ++j) m.at(a, j) = -m.at(a, j);
}

Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
    return q;
}

}  // namespace

HnfResult hnf(const IntMatrix& a) {
    IntMatrix h = a;
    IntMatrix u = IntMatrix::identity(a.rows);
    int pivot_row = 0;
    for (int col = 0; col < h.cols && pivot_row < h.rows; ++col) {
        // Gather the column below the current pivot into a single entry via
        // smallest-remainder reduction.
        while (true) {
            int best = -1;
            for (int i = pivot_row; i < h.rows; ++i) {
                if (h.at(i, col) == 0) continue;
                if (best < 0 ||
                    abs(h.at(i, col)) < abs(h.at(best, col)))
                    best = i;
            }
            if (best < 0) break;
            swap_rows(h, pivot_row, best);
            swap_rows(u, pivot_row, best);
            bool clean = true;
            for (int i = pivot_row + 1; i < h.rows; ++i) {
                Int q = floor_div(h.at(i, col), h.at(pivot_row, col));
                row_axpy(h, i, pivot_row, q);
                row_axpy(u, i, pivot_row, q);
                if (h.at(i, col) != 0) clean = false;
            }
            if (clean) break;
        }
        if (pivot_row >= h.rows || h.at(pivot_row, col) == 0) continue;
        if (h.at(pivot_row, col) < 0) {
            negate_row(h, pivot_row);
            negate_row(u, pivot_row);
        }
        for (int i = 0; i < pivot_row; ++i) {
            Int q = floor_div(h.at(i, col), h.at(pivot_row, col));
            row_axpy(h, i, pivot_row, q);
            row_axpy(u, i, pivot_row, q);
        }
        pivot_row++;
    }
    return {h, u};
}

SnfResult snf(const IntMatrix& a) {
    IntMatrix d = a;
    IntMatrix u = IntMatrix::identity(a.rows);
    IntMatrix v = IntMatrix::identity(a.cols);
    int n = std::min(a.rows, a.cols);
    auto off_diagonal_clear = [](const IntMatrix& m) {
        for (int i = 0; i < m.rows; ++i)
            for (int j = 0; j < m.cols; ++j)
                if (i != j && m.at(i, j) != 0) return false;
        return true;
    };
    // Alternate row and column Hermite reduction until the matrix is
    // diagonal. Hermite normalization after every pass keeps the entries
    // reduced, which avoids the coefficient swell of remainder cascades.
    for (int pass = 0;; ++pass) {
        require_internal(pass < 300, "smith reduction did not converge");
        if (!off_diagonal_clear(d)) {
            HnfResult rows = hnf(d);
            d = rows.h;
            u = rows.u * u;
            if (!off_diagonal_clear(d)) {
                HnfResult cols = hnf(d.transposed());
                d = cols.h.transposed();
                v = v * cols.u.transposed();
            }
            continue;
        }
        for (int i = 0; i < n; ++i)
            if (d.at(i, i) < 0) {
                negate_row(d, i);
                negate_row(u, i);
            }
        // Push zero pivots behind nonzero ones.
        bool changed = false;
        for (int i = 0; i < n && !changed; ++i) {
            if (d.at(i, i) != 0) continue;
            for (int j = i + 1; j < n && !changed; ++j)
                if (d.at(j, j) != 0) {
                    swap_rows(d, i, j);
                    swap_rows(u, i, j);
                    swap_cols(d, i, j);
                    swap_cols(v, i, j);
                    changed = true;
                }
        }
        if (changed) continue;
        // Repair the divisibility chain: folding column i+1 into column i
        // re-enters the reduction loop, which replaces the pivot pair by
        // gcd and the complementary multiple.
        for (int i = 0; i + 1 < n && !changed; ++i) {
            const Int& cur = d.at(i, i);
            if (cur == 0 || d.at(i + 1, i + 1) % cur == 0) continue;
            col_axpy(d, i, i + 1, Int(-1));
            col_axpy(v, i, i + 1, Int(-1));
            changed = true;
        }
        if (!changed) break;
    }
    return {d, u, v};
}

DetInverse det_and_inverse(const IntMatrix& a) {
    require_internal(a.rows == a.cols, "determinant of a non-square matrix");
    int n = a.rows;
    RatMatrix m(a);
    RatMatrix inv = RatMatrix::identity(n);
    Rat det(1);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int i = col; i < n; ++i)
            if (m.at(i, col) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) return {Int(0), std::nullopt};
        if (pivot != col) {
            for (int j = 0; j < n; ++j) {
                std::swap(m.at(pivot, j), m.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
            det = -det;
        }
        Rat p = m.at(col, col);
        det *= p;
        for (int j = 0; j < n; ++j) {
            m.at(col, j) /= p;
            inv.at(col, j) /= p;
        }
        for (int i = 0; i < n; ++i) {
            if (i == col || m.at(i, col) == 0) continue;
            Rat f = m.at(i, col);
            for (int j = 0; j < n; ++j) {
                m.at(i, j) -= f * m.at(col, j);
                inv.at(i, j) -= f * inv.at(col, j);
            }
        }
    }
    require_internal(denominator(det) == 1, "integer determinant expected");
    return {numerator(det), inv};
}

int rank_over_q(const IntMatrix& a) {
    RatMatrix m(a);
    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int pivot = -1;
        for (int i = rank; i < m.rows; ++i)
            if (m.at(i, col) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        for (int j = 0; j < m.cols; ++j) std::swap(m.at(pivot, j), m.at(rank, j));
        for (int i = rank + 1; i < m.rows; ++i) {
            if (m.at(i, col) == 0) continue;
            Rat f = m.at(i, col) / m.at(rank, col);
            for (int j = col; j < m.cols; ++j) m.at(i, j) -= f * m.at(rank, j);
        }
        rank++;
    }
    return rank;
}

IntMatrix complete_columns(const IntMatrix& first_cols) {
    int m = first_cols.rows;
    int r = first_cols.cols;
    require_internal(r <= m, "more columns than ambient rank");
    if (rank_over_q(first_cols) < r)
        fail(ErrorKind::RankDeficient, "given columns are linearly dependent",
             first_cols.to_string());
    IntMatrix out(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < r; ++j) out.at(i, j) = first_cols.at(i, j);
    int have = r;
    for (int k = 0; k < m && have < m; ++k) {
        out.at(k, have) = 1;
        IntMatrix probe(m, have + 1);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j <= have; ++j) probe.at(i, j) = out.at(i, j);
        if (rank_over_q(probe) == have + 1)
            have++;
        else
            out.at(k, have) = 0;
    }
    require_internal(have == m, "column completion failed to reach full rank");
    return out;
}

IntMatrix lattice_basis(const IntMatrix& cols) {
    // Row HNF of the transpose: its nonzero rows are the canonical basis.
    HnfResult res = hnf(cols.transposed());
    std::vector<std::vector<Int>> basis;
    for (int i = 0; i < res.h.rows; ++i) {
        auto row = res.h.row(i);
        if (std::any_of(row.begin(), row.end(),
                        [](const Int& x) { return x != 0; }))
            basis.push_back(row);
    }
    IntMatrix out(cols.rows, static_cast<int>(basis.size()));
    for (int j = 0; j < out.cols; ++j)
        for (int i = 0; i < out.rows; ++i) out.at(i, j) = basis[j][i];
    return out;
}

IntMatrix saturate_span(const IntMatrix& cols) {
    IntMatrix w = lattice_basis(cols);
    if (w.cols == 0) return w;
    SnfResult res = snf(w);
    // u * w * v = d, so the saturation is spanned by the first k columns of
    // u^{-1} (the lattice itself scales them by the diagonal entries).
    DetInverse uinv = det_and_inverse(res.u);
    require_internal(uinv.inverse.has_value(), "SNF transform not invertible");
    IntMatrix out(w.rows, w.cols);
    for (int j = 0; j < w.cols; ++j)
        for (int i = 0; i < w.rows; ++i) {
            const Rat& e = uinv.inverse->at(i, j);
            require_internal(denominator(e) == 1, "unimodular inverse expected");
            out.at(i, j) = numerator(e);
        }
    return lattice_basis(out);
}

BasisSplit split_basis(const IntMatrix& sublattice_gens) {
    int m = sublattice_gens.rows;
    IntMatrix w = lattice_basis(sublattice_gens);
    int k = w.cols;
    if (k == 0) {
        return {IntMatrix::identity(m), m};
    }
    SnfResult res = snf(w);
    for (int t = 0; t < std::min(res.d.rows, res.d.cols); ++t) {
        if (res.d.at(t, t) > 1) {
            std::string diag;
            for (int s = 0; s < std::min(res.d.rows, res.d.cols); ++s)
                diag += (s ? "," : "") + res.d.at(s, s).str();
            fail(ErrorKind::NotSaturated,
                 "sublattice is not saturated in the ambient lattice", diag);
        }
    }
    DetInverse uinv = det_and_inverse(res.u);
    require_internal(uinv.inverse.has_value(), "SNF transform not invertible");
    BasisSplit split;
    split.r = m - k;
    split.full_basis = IntMatrix(m, m);
    auto uinv_col = [&](int j) {
        std::vector<Int> col(m);
        for (int i = 0; i < m; ++i) {
            const Rat& e = uinv.inverse->at(i, j);
            require_internal(denominator(e) == 1, "unimodular inverse expected");
            col[static_cast<std::size_t>(i)] = numerator(e);
        }
        return col;
    };
    // First r columns complete the basis; last k columns span the sublattice.
    for (int j = 0; j < split.r; ++j) {
        auto col = uinv_col(k + j);
        for (int i = 0; i < m; ++i) split.full_basis.at(i, j) = col[i];
    }
    for (int j = 0; j < k; ++j) {
        auto col = uinv_col(j);
        for (int i = 0; i < m; ++i) split.full_basis.at(i, split.r + j) = col[i];
    }
    Int det = det_and_inverse(split.full_basis).det;
    require_internal(det == 1 || det == -1, "basis split is not unimodular");
    return split;
}

std::optional<std::vector<Int>> lattice_coordinates(const IntMatrix& basis,
                                                    const std::vector<Int>& v) {
    require_internal(basis.rows == static_cast<int>(v.size()),
                     "vector length does not match lattice rank");
    // Solve basis * x = v over Q by elimination, then check integrality.
    int m = basis.rows, k = basis.cols;
    RatMatrix aug(m, k + 1);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < k; ++j) aug.at(i, j) = Rat(basis.at(i, j));
        aug.at(i, k) = Rat(v[static_cast<std::size_t>(i)]);
    }
    int rank = 0;
    std::vector<int> pivot_col;
    for (int col = 0; col < k && rank < m; ++col) {
        int pivot = -1;
        for (int i = rank; i < m; ++i)
            if (aug.at(i, col) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        for (int j = 0; j <= k; ++j) std::swap(aug.at(pivot, j), aug.at(rank, j));
        Rat p = aug.at(rank, col);
        for (int j = 0; j <= k; ++j) aug.at(rank, j) /= p;
        for (int i = 0; i < m; ++i) {
            if (i == rank || aug.at(i, col) == 0) continue;
            Rat f = aug.at(i, col);
            for (int j = 0; j <= k; ++j) aug.at(i, j) -= f * aug.at(rank, j);
        }
        pivot_col.push_back(col);
        rank++;
    }
    // Inconsistent rows mean v is outside the Q-span.
    for (int i = rank; i < m; ++i)
        if (aug.at(i, k) != 0) return std::nullopt;
    std::vector<Int> x(k, Int(0));
    for (int t = 0; t < rank; ++t) {
        const Rat& val = aug.at(t, k);
        if (denominator(val) != 1) return std::nullopt;
        x[static_cast<std::size_t>(pivot_col[t])] = numerator(val);
    }
    // Free columns (dependent basis vectors) keep coordinate zero; verify.
    std::vector<Int> check = apply_matrix(basis, x);
    if (check != v) return std::nullopt;
    return x;
}

std::vector<Int> apply_matrix(const IntMatrix& m, const std::vector<Int>& v) {
    require_internal(m.cols == static_cast<int>(v.size()),
                     "matrix-vector shape mismatch");
    std::vector<Int> out(m.rows, Int(0));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            out[static_cast<std::size_t>(i)] += m.at(i, j) * v[static_cast<std::size_t>(j)];
    return out;
}

}  // namespace toromon
