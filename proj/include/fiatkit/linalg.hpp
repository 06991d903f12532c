#pragma once

#include "fiatkit/matrix.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

namespace fiatkit {

template <class F>
using SparseVec = std::vector<std::pair<std::size_t, F>>;

/// Incremental row echelon form with sparse pivot rows and a dense scratch
/// accumulator. Pivots are leading (first nonzero) columns; no thresholds.
/// After finalize() the stored rows are in reduced row echelon form.
template <class F>
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t ncols, F one = F(1))
        : ncols_(ncols), one_(std::move(one)), rows_(ncols), acc_(ncols) {}

    [[nodiscard]] std::size_t ncols() const { return ncols_; }
    [[nodiscard]] std::size_t rank() const { return rank_; }
    [[nodiscard]] bool is_pivot(std::size_t c) const { return rows_[c].has_value(); }
    [[nodiscard]] const SparseVec<F>& row(std::size_t pivot) const { return *rows_[pivot]; }

    [[nodiscard]] std::vector<std::size_t> pivots() const {
        std::vector<std::size_t> p;
        for (std::size_t c = 0; c < ncols_; ++c)
            if (rows_[c]) p.push_back(c);
        return p;
    }

    /// Adds a row; returns true iff it was independent of the rows so far.
    bool insert(const SparseVec<F>& row) {
        std::size_t start = load(row);
        return absorb(start);
    }
    bool insert_dense(const std::vector<F>& row) {
        std::size_t start = load_dense(row);
        return absorb(start);
    }

    /// True iff the vector lies in the row span.
    [[nodiscard]] bool contains(const std::vector<F>& v) {
        std::size_t start = load_dense(v);
        std::size_t lead = reduce(start);
        clear(start);
        return lead == ncols_;
    }

    /// Brings the stored rows to reduced row echelon form with unit pivots.
    void finalize() {
        if (finalized_) return;
        for (std::size_t p = ncols_; p-- > 0;) {
            if (!rows_[p]) continue;
            load(*rows_[p]);
            for (std::size_t c = p + 1; c < ncols_; ++c) {
                if (is_zero(acc_[c]) || !rows_[c]) continue;
                F f = acc_[c];
                for (const auto& [j, v] : *rows_[c]) acc_[j] -= f * v;
            }
            SparseVec<F> out;
            for (std::size_t c = p; c < ncols_; ++c) {
                if (!is_zero(acc_[c])) out.emplace_back(c, acc_[c]);
                acc_[c] = F();
            }
            rows_[p] = std::move(out);
        }
        finalized_ = true;
    }

    /// Basis of {x : row . x = 0 for all stored rows}; one vector per free column.
    [[nodiscard]] std::vector<std::vector<F>> null_space() {
        finalize();
        std::vector<std::size_t> free_index(ncols_, ncols_);
        std::vector<std::size_t> free_cols;
        for (std::size_t c = 0; c < ncols_; ++c)
            if (!rows_[c]) {
                free_index[c] = free_cols.size();
                free_cols.push_back(c);
            }
        std::vector<std::vector<F>> basis(free_cols.size(), std::vector<F>(ncols_));
        for (std::size_t k = 0; k < free_cols.size(); ++k) basis[k][free_cols[k]] = one_;
        for (std::size_t p = 0; p < ncols_; ++p) {
            if (!rows_[p]) continue;
            for (const auto& [j, v] : *rows_[p]) {
                if (j == p) continue;
                basis[free_index[j]][p] = -v;
            }
        }
        return basis;
    }

private:
    std::size_t load(const SparseVec<F>& row) {
        std::size_t start = ncols_;
        for (const auto& [j, v] : row) {
            if (j >= ncols_) throw std::out_of_range("sparse row index out of range");
            if (is_zero(v)) continue;
            acc_[j] += v;
            start = std::min(start, j);
        }
        return start;
    }
    std::size_t load_dense(const std::vector<F>& row) {
        if (row.size() != ncols_) throw std::invalid_argument("dense row length mismatch");
        std::size_t start = ncols_;
        for (std::size_t j = 0; j < ncols_; ++j) {
            if (is_zero(row[j])) continue;
            acc_[j] = row[j];
            start = std::min(start, j);
        }
        return start;
    }
    void clear(std::size_t start) {
        for (std::size_t c = start; c < ncols_; ++c) acc_[c] = F();
    }
    // Eliminates pivot columns from the accumulator, stopping at the first
    // nonzero non-pivot column (returned), or ncols_ if reduced to zero.
    std::size_t reduce(std::size_t start) {
        for (std::size_t c = start; c < ncols_; ++c) {
            if (is_zero(acc_[c])) continue;
            if (!rows_[c]) return c;
            F f = acc_[c];
            for (const auto& [j, v] : *rows_[c]) acc_[j] -= f * v;
        }
        return ncols_;
    }
    bool absorb(std::size_t start) {
        std::size_t lead = reduce(start);
        if (lead == ncols_) {
            clear(start);
            return false;
        }
        F inv = one_ / acc_[lead];
        SparseVec<F> out;
        for (std::size_t c = lead; c < ncols_; ++c)
            if (!is_zero(acc_[c])) out.emplace_back(c, acc_[c] * inv);
        clear(start);
        rows_[lead] = std::move(out);
        ++rank_;
        finalized_ = false;
        return true;
    }

    std::size_t ncols_;
    F one_;
    std::vector<std::optional<SparseVec<F>>> rows_;
    std::vector<F> acc_;
    std::size_t rank_ = 0;
    bool finalized_ = true;
};

template <class F>
SparseVec<F> sparse_row(const Matrix<F>& m, std::size_t i) {
    SparseVec<F> r;
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (!is_zero(m(i, j))) r.emplace_back(j, m(i, j));
    return r;
}

template <class F>
SparseVec<F> sparse_column(const Matrix<F>& m, std::size_t j) {
    SparseVec<F> r;
    for (std::size_t i = 0; i < m.rows(); ++i)
        if (!is_zero(m(i, j))) r.emplace_back(i, m(i, j));
    return r;
}

/// A unit element compatible with the entries of m (needed for Q(delta)).
template <class F>
F unit_for(const Matrix<F>& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!is_zero(m(i, j))) return one_like(m(i, j));
    if constexpr (std::is_constructible_v<F, int>) {
        return F(1);
    } else {
        throw std::domain_error("cannot infer field of an all-zero matrix");
    }
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
    if (m.is_zero()) return 0;
    EchelonBasis<F> e(m.cols(), unit_for(m));
    for (std::size_t i = 0; i < m.rows(); ++i) e.insert(sparse_row(m, i));
    return e.rank();
}

/// Columns form a basis of the null space of m.
template <class F>
Matrix<F> kernel(const Matrix<F>& m, std::optional<F> one = std::nullopt) {
    F u = one ? *one : unit_for(m);
    EchelonBasis<F> e(m.cols(), u);
    for (std::size_t i = 0; i < m.rows(); ++i) e.insert(sparse_row(m, i));
    return Matrix<F>::from_columns(m.cols(), e.null_space());
}

/// Basis of the solution space of a homogeneous system given as sparse rows
/// over `unknowns` variables.
template <class F>
std::vector<std::vector<F>> solve_linear(std::size_t unknowns, const std::vector<SparseVec<F>>& equations,
                                         F one = F(1)) {
    EchelonBasis<F> e(unknowns, std::move(one));
    for (const auto& eq : equations) e.insert(eq);
    return e.null_space();
}

/// Projection from the target space onto the complement of the column space
/// spanned by the non-pivot coordinates, with a section (right inverse).
template <class F>
struct Cokernel {
    Matrix<F> projection;  // dim x rows(M)
    Matrix<F> section;     // rows(M) x dim, projection * section = I
    std::size_t dim = 0;
    std::vector<std::size_t> kept;  // target coordinates surviving as the quotient basis
};

template <class F>
Cokernel<F> cokernel_projection(const Matrix<F>& m, std::optional<F> one = std::nullopt) {
    F u = one ? *one : unit_for(m);
    const std::size_t n = m.rows();
    EchelonBasis<F> e(n, u);
    for (std::size_t j = 0; j < m.cols(); ++j) e.insert(sparse_column(m, j));
    e.finalize();
    Cokernel<F> ck;
    std::vector<std::size_t> index(n, n);
    for (std::size_t c = 0; c < n; ++c)
        if (!e.is_pivot(c)) {
            index[c] = ck.kept.size();
            ck.kept.push_back(c);
        }
    ck.dim = ck.kept.size();
    ck.projection = Matrix<F>(ck.dim, n);
    ck.section = Matrix<F>(n, ck.dim);
    for (std::size_t k = 0; k < ck.dim; ++k) {
        ck.projection(k, ck.kept[k]) = u;
        ck.section(ck.kept[k], k) = u;
    }
    for (std::size_t p = 0; p < n; ++p) {
        if (!e.is_pivot(p)) continue;
        for (const auto& [j, v] : e.row(p))
            if (j != p) ck.projection(index[j], p) = -v;
    }
    return ck;
}

/// Same as cokernel_projection but from an explicit list of relation vectors
/// in an n-dimensional space.
template <class F>
Cokernel<F> quotient_by_relations(std::size_t n, const std::vector<SparseVec<F>>& relations, F one = F(1)) {
    EchelonBasis<F> e(n, one);
    for (const auto& r : relations) e.insert(r);
    e.finalize();
    Cokernel<F> ck;
    std::vector<std::size_t> index(n, n);
    for (std::size_t c = 0; c < n; ++c)
        if (!e.is_pivot(c)) {
            index[c] = ck.kept.size();
            ck.kept.push_back(c);
        }
    ck.dim = ck.kept.size();
    ck.projection = Matrix<F>(ck.dim, n);
    ck.section = Matrix<F>(n, ck.dim);
    for (std::size_t k = 0; k < ck.dim; ++k) {
        ck.projection(k, ck.kept[k]) = one;
        ck.section(ck.kept[k], k) = one;
    }
    for (std::size_t p = 0; p < n; ++p) {
        if (!e.is_pivot(p)) continue;
        for (const auto& [j, v] : e.row(p))
            if (j != p) ck.projection(index[j], p) = -v;
    }
    return ck;
}

/// Columns form a basis of the column space of m (chosen among m's columns).
template <class F>
Matrix<F> image_basis(const Matrix<F>& m) {
    if (m.is_zero()) return Matrix<F>(m.rows(), 0);
    EchelonBasis<F> e(m.rows(), unit_for(m));
    std::vector<std::vector<F>> cols;
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (e.insert(sparse_column(m, j))) cols.push_back(m.column(j));
    return Matrix<F>::from_columns(m.rows(), cols);
}

/// Inverse of a square matrix; throws std::domain_error if singular.
template <class F>
Matrix<F> inverse(const Matrix<F>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return m;
    const F one = unit_for(m);
    Matrix<F> a = m;
    Matrix<F> inv = Matrix<F>::identity(n, one);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && is_zero(a(piv, col))) ++piv;
        if (piv == n) throw std::domain_error("matrix is singular");
        if (piv != col)
            for (std::size_t k = 0; k < n; ++k) {
                std::swap(a(piv, k), a(col, k));
                std::swap(inv(piv, k), inv(col, k));
            }
        F s = one / a(col, col);
        for (std::size_t k = 0; k < n; ++k) {
            if (!is_zero(a(col, k))) a(col, k) *= s;
            if (!is_zero(inv(col, k))) inv(col, k) *= s;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || is_zero(a(r, col))) continue;
            F f = a(r, col);
            for (std::size_t k = 0; k < n; ++k) {
                if (!is_zero(a(col, k))) a(r, k) -= f * a(col, k);
                if (!is_zero(inv(col, k))) inv(r, k) -= f * inv(col, k);
            }
        }
    }
    return inv;
}

template <class F>
bool is_invertible(const Matrix<F>& m) {
    return m.rows() == m.cols() && rank(m) == m.rows();
}

/// Particular solution x of a * x = b, or nullopt if inconsistent.
template <class F>
std::optional<std::vector<F>> solve_affine(const Matrix<F>& a, const std::vector<F>& b, F one = F(1)) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve_affine shape mismatch");
    const std::size_t n = a.cols();
    // Augmented rows [a | -b]; a solution is a null vector with last entry 1.
    EchelonBasis<F> e(n + 1, one);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        SparseVec<F> r = sparse_row(a, i);
        if (!is_zero(b[i])) r.emplace_back(n, -b[i]);
        e.insert(r);
    }
    if (e.is_pivot(n)) return std::nullopt;
    e.finalize();
    std::vector<F> x(n);
    for (std::size_t p = 0; p < n; ++p) {
        if (!e.is_pivot(p)) continue;
        for (const auto& [j, v] : e.row(p))
            if (j == n) x[p] = -v;
    }
    return x;
}

/// Left inverse of a matrix with independent columns (L * k = I).
template <class F>
Matrix<F> left_inverse(const Matrix<F>& k) {
    const std::size_t r = k.cols();
    if (r == 0) return Matrix<F>(0, k.rows());
    EchelonBasis<F> e(k.rows(), unit_for(k));
    for (std::size_t j = 0; j < r; ++j)
        if (!e.insert(sparse_column(k, j))) throw std::domain_error("left_inverse: dependent columns");
    std::vector<std::size_t> piv = e.pivots();
    Matrix<F> sub(r, r);
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b) sub(a, b) = k(piv[a], b);
    Matrix<F> subinv = inverse(sub);
    Matrix<F> out(r, k.rows());
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b) out(a, piv[b]) = subinv(a, b);
    return out;
}

/// Flattens a matrix row-major (used to compare linear combinations of maps).
template <class F>
std::vector<F> flatten(const Matrix<F>& m) {
    std::vector<F> v;
    v.reserve(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
    return v;
}

/// Basis of the coefficient vectors c with sum_i c_i * maps[i] = 0.
template <class F>
std::vector<std::vector<F>> linear_relations(const std::vector<Matrix<F>>& maps, F one = F(1)) {
    const std::size_t k = maps.size();
    if (k == 0) return {};
    const std::size_t len = maps[0].rows() * maps[0].cols();
    std::vector<SparseVec<F>> eqs(len);
    for (std::size_t c = 0; c < k; ++c) {
        if (maps[c].rows() * maps[c].cols() != len) throw std::invalid_argument("linear_relations shape mismatch");
        for (std::size_t i = 0; i < maps[c].rows(); ++i)
            for (std::size_t j = 0; j < maps[c].cols(); ++j) {
                const F& v = maps[c](i, j);
                if (!is_zero(v)) eqs[i * maps[c].cols() + j].emplace_back(c, v);
            }
    }
    return solve_linear(k, eqs, one);
}

}  // namespace fiatkit
