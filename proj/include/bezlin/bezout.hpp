#ifndef BEZLIN_BEZOUT_HPP
#define BEZLIN_BEZOUT_HPP

/*
 * Bezout matrices for scalar and matrix polynomials.
 *
 * The scalar Bezoutian of p1, p2 (both regarded as grade k) is
 * (p1(y) p2(x) - p2(y) p1(x)) / (x - y); its k x k coefficient matrix in the
 * working basis is the Bezout matrix.  For matrix polynomials the
 * generalization takes multipliers M1, M2 with M1 P1 = M2 P2 and divides
 * M2(y) P2(x) - M1(y) P1(x) by (x - y), giving an n*ell x n*k block matrix.
 * The naive one-sided generalization (no multipliers) is provided as a test
 * fixture for its known failure modes.
 */

#include <utility>
#include <vector>

#include "bezlin/blockpoly.hpp"

namespace bezlin {

template <class S>
struct BezoutResult {
    BlockMat<S> matrix;        // phi_unmap(bezoutian)
    BiMatPoly<S> bezoutian;    // the quotient F(x, y)
    Index grade_rows;          // ell: block rows of the matrix
    Index grade_cols;          // k:   block columns
};

namespace detail {

// A(y) B(x): coefficient of phi_i(y) phi_j(x) is A_i * B_j.
template <class S>
BiMatPoly<S> outer_yx(const MatPoly<S>& a, const MatPoly<S>& b) {
    return BiMatPoly<S>::outer(a, b);
}

// A(x) B(y): coefficient of phi_i(y) phi_j(x) is A_j * B_i.
template <class S>
BiMatPoly<S> outer_xy(const MatPoly<S>& a, const MatPoly<S>& b) {
    BiMatPoly<S> r(a.n(), a.grade(), b.grade(), a.basis());
    for (Index i = 0; i <= b.grade(); ++i)
        for (Index j = 0; j <= a.grade(); ++j)
            r.coeff(i, j) = a.coeff(j) * b.coeff(i);
    return r;
}

// N(x, x) as a univariate matrix polynomial, in monomial coefficients.
template <class S>
MatPoly<S> restrict_to_diagonal(const BiMatPoly<S>& n_mono) {
    Index g = n_mono.grade_x() + n_mono.grade_y();
    MatPoly<S> d = MatPoly<S>::zero(n_mono.n(), g, Basis<S>::monomial());
    for (Index i = 0; i <= n_mono.grade_y(); ++i)
        for (Index j = 0; j <= n_mono.grade_x(); ++j)
            d.coeff(i + j) += n_mono.coeff(i, j);
    return d;
}

}  // namespace detail

/// Exact quotient F with F(x,y) (x - y) = N(x,y); both grades drop by one.
/// Works in any degree-graded basis by converting to monomials, doing
/// bivariate synthetic division, and converting back.
template <class S>
BiMatPoly<S> divide_x_minus_y(const BiMatPoly<S>& num) {
    const Index gx = num.grade_x(), gy = num.grade_y(), n = num.n();
    if (gx < 1 || gy < 1)
        throw input_error("divide_x_minus_y: numerator must have positive grade in x and y");

    BiMatPoly<S> nm = num.to_monomial();
    if (!detail::restrict_to_diagonal(nm).is_zero_poly())
        throw input_error("divide_x_minus_y: numerator does not vanish on the diagonal y = x");

    // N = x F - y F:  c_{j+1} = q_j - y q_{j+1}  with c_j = [x^j] N.
    BiMatPoly<S> f(n, gx - 1, gy - 1, Basis<S>::monomial());
    std::vector<Mat<S>> q(static_cast<std::size_t>(gy) + 1, Mat<S>::Zero(n, n));  // current column
    for (Index j = gx - 1; j >= 0; --j) {
        std::vector<Mat<S>> next(static_cast<std::size_t>(gy) + 1, Mat<S>::Zero(n, n));
        for (Index i = 0; i <= gy; ++i) next[static_cast<std::size_t>(i)] = nm.coeff(i, j + 1);
        for (Index i = 0; i < gy; ++i) next[static_cast<std::size_t>(i + 1)] += q[static_cast<std::size_t>(i)];
        if (!mat_is_zero(q[static_cast<std::size_t>(gy)]) ||
            !mat_is_zero(next[static_cast<std::size_t>(gy)]))
            throw internal_error("divide_x_minus_y: quotient escaped its grade");
        q = std::move(next);
        for (Index i = 0; i < gy; ++i) f.coeff(i, j) = q[static_cast<std::size_t>(i)];
    }
    // Remainder c_0 + y q_0 must vanish.
    for (Index i = 0; i <= gy; ++i) {
        Mat<S> rem = Mat<S>(nm.coeff(i, 0));
        if (i >= 1) rem += q[static_cast<std::size_t>(i - 1)];
        if (!mat_is_zero(rem)) throw internal_error("divide_x_minus_y: nonzero remainder");
    }

    if (num.basis().kind() == BasisKind::Monomial) return f;
    return f.from_monomial(num.basis());
}

namespace detail {

template <class S>
BezoutResult<S> make_bezout(const BiMatPoly<S>& numerator, Index ell, Index k) {
    BiMatPoly<S> f = divide_x_minus_y(numerator);
    if (f.grade_y() != ell - 1 || f.grade_x() != k - 1)
        throw internal_error("bezout: quotient grades disagree with the declared grades");
    BlockMat<S> m = phi_unmap(f);
    return BezoutResult<S>{std::move(m), std::move(f), ell, k};
}

}  // namespace detail

/// Scalar Bezout matrix of p1 and p2, both regarded as grade k (their
/// ascending coefficients are given in `basis`).  Symmetric, k x k.
template <class S>
BezoutResult<S> bezout_scalar(const std::vector<S>& p1, const std::vector<S>& p2, Index k,
                              const Basis<S>& basis) {
    if (k < 1) throw input_error("bezout_scalar: grade must be positive");
    if (static_cast<Index>(p1.size()) > k + 1 || static_cast<Index>(p2.size()) > k + 1)
        throw input_error("bezout_scalar: grade smaller than a degree");
    MatPoly<S> a = MatPoly<S>::scalar_times_identity(p1, 1, k, basis);
    MatPoly<S> b = MatPoly<S>::scalar_times_identity(p2, 1, k, basis);
    BiMatPoly<S> num = detail::outer_yx(a, b) - detail::outer_yx(b, a);
    return detail::make_bezout(num, k, k);
}

/// The defective one-sided generalization
/// (P1(y) P2(x) - P1(x) P2(y)) / (x - y); kept as a fixture for the
/// counterexamples that motivate the two-sided definition.
template <class S>
BezoutResult<S> bezout_onesided(const MatPoly<S>& p1, const MatPoly<S>& p2) {
    if (p1.n() != p2.n() || p1.grade() != p2.grade() || p1.basis() != p2.basis())
        throw input_error("bezout_onesided: operands must share n, grade and basis");
    BiMatPoly<S> num = detail::outer_yx(p1, p2) - detail::outer_xy(p1, p2);
    return detail::make_bezout(num, p1.grade(), p1.grade());
}

/// Two-sided Bezout block matrix for multipliers with M1 P1 = M2 P2
/// (verified symbolically).  P1, P2 carry the common grade k and M1, M2 the
/// common grade ell; the result is an n*ell x n*k block matrix.
template <class S>
BezoutResult<S> bezout_lt(const MatPoly<S>& p1, const MatPoly<S>& p2, const MatPoly<S>& m1,
                          const MatPoly<S>& m2) {
    if (p1.n() != p2.n() || p1.grade() != p2.grade() || p1.basis() != p2.basis())
        throw input_error("bezout_lt: P1 and P2 must share n, grade and basis");
    if (m1.n() != p1.n() || m2.n() != p1.n() || m1.grade() != m2.grade() ||
        m1.basis() != p1.basis() || m2.basis() != p1.basis())
        throw input_error("bezout_lt: M1 and M2 must share n, grade and basis with P1, P2");
    if (mul(m1, p1) != mul(m2, p2))
        throw input_error("bezout_lt: compatibility M1*P1 = M2*P2 fails");
    BiMatPoly<S> num = detail::outer_yx(m2, p2) - detail::outer_yx(m1, p1);
    return detail::make_bezout(num, m1.grade(), p1.grade());
}

/// B(P1, P2) for commuting arguments: the natural multipliers M1 = P2,
/// M2 = P1 give a square n*k x n*k matrix.
template <class S>
BezoutResult<S> bezout_commuting(const MatPoly<S>& p1, const MatPoly<S>& p2) {
    if (p1.n() != p2.n() || p1.grade() != p2.grade() || p1.basis() != p2.basis())
        throw input_error("bezout_commuting: operands must share n, grade and basis");
    if (mul(p1, p2) != mul(p2, p1))
        throw input_error("bezout_commuting: arguments do not commute");
    BiMatPoly<S> num = detail::outer_yx(p1, p2) - detail::outer_yx(p2, p1);
    return detail::make_bezout(num, p1.grade(), p1.grade());
}

}  // namespace bezlin

#endif  // BEZLIN_BEZOUT_HPP
