#ifndef BEZLIN_LINALG_HPP
#define BEZLIN_LINALG_HPP

/*
 * Exact dense linear algebra over field scalars: determinant, rank, kernel,
 * linear solve, inverse.  Fraction-free (Bareiss) elimination is used for
 * determinants over exact fields with unbounded element growth; prime fields
 * use plain Gaussian elimination.  Exact-only operations refuse floating
 * scalars instead of silently introducing tolerances.
 */

#include <Eigen/Core>

#include <cmath>
#include <vector>

#include "bezlin/scalars.hpp"

namespace bezlin {

using Index = Eigen::Index;

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

template <class S>
bool is_zero(const S& s) {
    return s == S(0);
}

template <class S>
bool mat_eq(const Mat<S>& a, const Mat<S>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Index j = 0; j < a.cols(); ++j)
        for (Index i = 0; i < a.rows(); ++i)
            if (!(a(i, j) == b(i, j))) return false;
    return true;
}

template <class S>
bool mat_is_zero(const Mat<S>& a) {
    for (Index j = 0; j < a.cols(); ++j)
        for (Index i = 0; i < a.rows(); ++i)
            if (!is_zero(a(i, j))) return false;
    return true;
}

template <class S>
Mat<S> conj_transpose(const Mat<S>& a) {
    Mat<S> r(a.cols(), a.rows());
    for (Index j = 0; j < a.cols(); ++j)
        for (Index i = 0; i < a.rows(); ++i)
            r(j, i) = conj_of(a(i, j));
    return r;
}

namespace detail {

template <class S>
void require_exact(const char* op) {
    if constexpr (!is_exact_field_v<S>)
        throw input_error(std::string(op) +
                          ": exact field required (floating scalars are refused;"
                          " no tolerance-based variant is provided)");
}

// Reduced row echelon form in place; returns pivot column indices.
template <class S>
std::vector<Index> rref(Mat<S>& m) {
    require_exact<S>("rref");
    std::vector<Index> pivots;
    Index row = 0;
    for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
        Index piv = -1;
        for (Index i = row; i < m.rows(); ++i)
            if (!is_zero(m(i, col))) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != row) m.row(piv).swap(m.row(row));
        S inv = S(1) / m(row, col);
        for (Index j = col; j < m.cols(); ++j) m(row, j) = m(row, j) * inv;
        for (Index i = 0; i < m.rows(); ++i) {
            if (i == row || is_zero(m(i, col))) continue;
            S f = m(i, col);
            for (Index j = col; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace detail

/// Exact determinant.  Bareiss fraction-free elimination over exact fields
/// (plain Gaussian elimination for prime fields); a floating variant is
/// permitted but inexact.
template <class S>
S determinant(Mat<S> a) {
    if (a.rows() != a.cols()) throw input_error("determinant: matrix not square");
    const Index n = a.rows();
    if (n == 0) return S(1);

    if constexpr (!is_exact_field_v<S>) {
        // Inexact path: partial pivoting on magnitude.
        int sign = 1;
        for (Index k = 0; k < n; ++k) {
            Index piv = k;
            auto best = std::abs(a(k, k));
            for (Index i = k + 1; i < n; ++i)
                if (std::abs(a(i, k)) > best) {
                    best = std::abs(a(i, k));
                    piv = i;
                }
            if (!(best > 0)) return S(0);
            if (piv != k) {
                a.row(piv).swap(a.row(k));
                sign = -sign;
            }
            for (Index i = k + 1; i < n; ++i) {
                S f = a(i, k) / a(k, k);
                for (Index j = k; j < n; ++j) a(i, j) -= f * a(k, j);
            }
        }
        S d = S(sign);
        for (Index k = 0; k < n; ++k) d *= a(k, k);
        return d;
    } else if constexpr (std::is_same_v<S, GFp>) {
        int sign = 1;
        for (Index k = 0; k < n; ++k) {
            Index piv = -1;
            for (Index i = k; i < n; ++i)
                if (!is_zero(a(i, k))) {
                    piv = i;
                    break;
                }
            if (piv < 0) return S(0);
            if (piv != k) {
                a.row(piv).swap(a.row(k));
                sign = -sign;
            }
            S inv = S(1) / a(k, k);
            for (Index i = k + 1; i < n; ++i) {
                S f = a(i, k) * inv;
                for (Index j = k; j < n; ++j) a(i, j) = a(i, j) - f * a(k, j);
            }
        }
        S d = a(0, 0);
        for (Index k = 1; k < n; ++k) d = d * a(k, k);
        return sign < 0 ? -d : d;
    } else {
        // Bareiss: every division is exact, intermediate growth stays bounded.
        S prev = S(1);
        int sign = 1;
        for (Index k = 0; k + 1 < n; ++k) {
            Index piv = -1;
            for (Index i = k; i < n; ++i)
                if (!is_zero(a(i, k))) {
                    piv = i;
                    break;
                }
            if (piv < 0) return S(0);
            if (piv != k) {
                a.row(piv).swap(a.row(k));
                sign = -sign;
            }
            for (Index i = k + 1; i < n; ++i)
                for (Index j = k + 1; j < n; ++j)
                    a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
            for (Index i = k + 1; i < n; ++i) a(i, k) = S(0);
            prev = a(k, k);
        }
        S d = a(n - 1, n - 1);
        return sign < 0 ? -d : d;
    }
}

template <class S>
Index rank(Mat<S> a) {
    detail::require_exact<S>("rank");
    return static_cast<Index>(detail::rref(a).size());
}

/// Basis of the right null space; empty iff the matrix has full column rank.
template <class S>
std::vector<Vec<S>> kernel_basis(Mat<S> a) {
    detail::require_exact<S>("kernel_basis");
    const Index cols = a.cols();
    std::vector<Index> pivots = detail::rref(a);
    std::vector<bool> is_pivot(cols, false);
    for (Index p : pivots) is_pivot[p] = true;

    std::vector<Vec<S>> basis;
    for (Index free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Vec<S> v = Vec<S>::Zero(cols);
        v(free) = S(1);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v(pivots[r]) = -a(static_cast<Index>(r), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Exact solution X of A X = B for nonsingular square A.
template <class S>
Mat<S> solve(Mat<S> a, Mat<S> b) {
    detail::require_exact<S>("solve");
    if (a.rows() != a.cols()) throw input_error("solve: matrix not square");
    if (a.rows() != b.rows()) throw input_error("solve: dimension mismatch");
    const Index n = a.rows();
    for (Index k = 0; k < n; ++k) {
        Index piv = -1;
        for (Index i = k; i < n; ++i)
            if (!is_zero(a(i, k))) {
                piv = i;
                break;
            }
        if (piv < 0) throw input_error("solve: singular matrix");
        if (piv != k) {
            a.row(piv).swap(a.row(k));
            b.row(piv).swap(b.row(k));
        }
        S inv = S(1) / a(k, k);
        for (Index j = k; j < n; ++j) a(k, j) = a(k, j) * inv;
        for (Index j = 0; j < b.cols(); ++j) b(k, j) = b(k, j) * inv;
        for (Index i = 0; i < n; ++i) {
            if (i == k || is_zero(a(i, k))) continue;
            S f = a(i, k);
            for (Index j = k; j < n; ++j) a(i, j) = a(i, j) - f * a(k, j);
            for (Index j = 0; j < b.cols(); ++j) b(i, j) = b(i, j) - f * b(k, j);
        }
    }
    return b;
}

template <class S>
Mat<S> inverse(const Mat<S>& a) {
    Mat<S> id = Mat<S>::Identity(a.rows(), a.rows());
    if constexpr (std::is_same_v<S, GFp>) {
        // bind Eigen's literal identity to the input's modulus
        for (Index i = 0; i < a.rows(); ++i)
            for (Index j = 0; j < a.cols(); ++j)
                if (a(i, j).bound()) {
                    id = id * GFp::one(a(i, j).modulus());
                    goto bound;
                }
    bound:;
    }
    return solve<S>(a, id);
}

}  // namespace bezlin

#endif  // BEZLIN_LINALG_HPP
