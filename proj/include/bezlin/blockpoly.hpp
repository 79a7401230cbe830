#ifndef BEZLIN_BLOCKPOLY_HPP
#define BEZLIN_BLOCKPOLY_HPP

/*
 * Block matrices, bivariate matrix polynomials, and the duality map phi
 * between them.  A k x h grid of n x n blocks provides the coefficients of
 * an n x n bivariate matrix polynomial of grade h-1 in x and k-1 in y:
 *
 *   phi(X) = F(x,y) = sum_{i,j} X_{k-i,h-j} phi_i(y) phi_j(x)
 *
 * (1-based block indices; block layouts are descending in degree).  Column
 * and row shift sums encode multiplication by x resp. y plus addition.
 */

#include <utility>

#include "bezlin/basis.hpp"
#include "bezlin/linalg.hpp"
#include "bezlin/matpoly.hpp"

namespace bezlin {

template <class S>
struct BlockMat {
    Mat<S> a;       // nk x nh
    Index k, h, n;  // block rows, block cols, block size

    BlockMat(Mat<S> m, Index k_, Index h_, Index n_) : a(std::move(m)), k(k_), h(h_), n(n_) {
        if (a.rows() != n * k || a.cols() != n * h)
            throw input_error("BlockMat: dimensions do not match the block layout");
    }
    static BlockMat zero(Index k, Index h, Index n) {
        return BlockMat(Mat<S>::Zero(n * k, n * h), k, h, n);
    }

    auto block(Index i, Index j) { return a.block(i * n, j * n, n, n); }          // 0-based
    auto block(Index i, Index j) const { return a.block(i * n, j * n, n, n); }

    friend bool operator==(const BlockMat& x, const BlockMat& y) {
        return x.k == y.k && x.h == y.h && x.n == y.n && mat_eq(x.a, y.a);
    }
    friend bool operator!=(const BlockMat& x, const BlockMat& y) { return !(x == y); }
};

/// Bivariate matrix polynomial; coefficient grid indexed ascending, entry
/// (i, j) multiplying phi_i(y) phi_j(x).
template <class S>
class BiMatPoly {
public:
    BiMatPoly(Index n, Index gx, Index gy, Basis<S> basis)
        : n_(n), gx_(gx), gy_(gy), basis_(std::move(basis)),
          g_(Mat<S>::Zero(n * (gy + 1), n * (gx + 1))) {
        if (n < 1 || gx < 0 || gy < 0) throw input_error("BiMatPoly: bad dimensions");
    }

    Index n() const { return n_; }
    Index grade_x() const { return gx_; }
    Index grade_y() const { return gy_; }
    const Basis<S>& basis() const { return basis_; }

    auto coeff(Index iy, Index jx) { return g_.block(iy * n_, jx * n_, n_, n_); }
    auto coeff(Index iy, Index jx) const { return g_.block(iy * n_, jx * n_, n_, n_); }

    Mat<S> eval(const S& x, const S& y) const {
        auto px = basis_.phi_values(x, gx_);
        auto py = basis_.phi_values(y, gy_);
        Mat<S> acc = Mat<S>::Zero(n_, n_);
        for (Index i = 0; i <= gy_; ++i)
            for (Index j = 0; j <= gx_; ++j)
                acc += (py[static_cast<std::size_t>(i)] * px[static_cast<std::size_t>(j)]) *
                       coeff(i, j);
        return acc;
    }

    friend BiMatPoly operator+(const BiMatPoly& a, const BiMatPoly& b) {
        BiMatPoly r(a.n_, std::max(a.gx_, b.gx_), std::max(a.gy_, b.gy_), a.basis_);
        if (a.n_ != b.n_ || a.basis_ != b.basis_) throw input_error("BiMatPoly: mismatch");
        for (Index i = 0; i <= r.gy_; ++i)
            for (Index j = 0; j <= r.gx_; ++j) {
                if (i <= a.gy_ && j <= a.gx_) r.coeff(i, j) += a.coeff(i, j);
                if (i <= b.gy_ && j <= b.gx_) r.coeff(i, j) += b.coeff(i, j);
            }
        return r;
    }
    friend BiMatPoly operator-(const BiMatPoly& a, const BiMatPoly& b) { return a + (-b); }
    BiMatPoly operator-() const {
        BiMatPoly r = *this;
        r.g_ = -r.g_;
        return r;
    }

    friend bool operator==(const BiMatPoly& a, const BiMatPoly& b) {
        if (a.n_ != b.n_ || a.basis_ != b.basis_) return false;
        Index gy = std::max(a.gy_, b.gy_), gx = std::max(a.gx_, b.gx_);
        for (Index i = 0; i <= gy; ++i)
            for (Index j = 0; j <= gx; ++j) {
                bool in_a = i <= a.gy_ && j <= a.gx_;
                bool in_b = i <= b.gy_ && j <= b.gx_;
                Mat<S> x = in_a ? Mat<S>(a.coeff(i, j)) : Mat<S>(Mat<S>::Zero(a.n_, a.n_));
                Mat<S> y = in_b ? Mat<S>(b.coeff(i, j)) : Mat<S>(Mat<S>::Zero(a.n_, a.n_));
                if (!mat_eq(x, y)) return false;
            }
        return true;
    }
    friend bool operator!=(const BiMatPoly& a, const BiMatPoly& b) { return !(a == b); }

    bool is_zero_poly() const { return mat_is_zero(g_); }

    /// F(x,y) * x via the basis recurrence (grade in x rises by one).
    BiMatPoly times_x() const {
        if (!basis_.supports(gx_ + 1))
            throw input_error("times_x: basis does not support the resulting degree");
        BiMatPoly r(n_, gx_ + 1, gy_, basis_);
        for (Index i = 0; i <= gy_; ++i)
            for (Index j = 0; j <= gx_; ++j)
                for (Index t = 0; t <= j + 1; ++t) {
                    S m = basis_.mult_coeff(j, t);
                    if (!is_zero(m)) r.coeff(i, t) += m * coeff(i, j);
                }
        return r;
    }

    /// y * F(x,y) via the basis recurrence (grade in y rises by one).
    BiMatPoly times_y() const {
        if (!basis_.supports(gy_ + 1))
            throw input_error("times_y: basis does not support the resulting degree");
        BiMatPoly r(n_, gx_, gy_ + 1, basis_);
        for (Index i = 0; i <= gy_; ++i)
            for (Index j = 0; j <= gx_; ++j)
                for (Index t = 0; t <= i + 1; ++t) {
                    S m = basis_.mult_coeff(i, t);
                    if (!is_zero(m)) r.coeff(t, j) += m * coeff(i, j);
                }
        return r;
    }

    /// Outer product A(y) B(x) of univariate matrix polynomials.
    static BiMatPoly outer(const MatPoly<S>& ay, const MatPoly<S>& bx) {
        if (ay.n() != bx.n() || ay.basis() != bx.basis())
            throw input_error("BiMatPoly::outer: mismatch");
        BiMatPoly r(ay.n(), bx.grade(), ay.grade(), ay.basis());
        for (Index i = 0; i <= ay.grade(); ++i) {
            if (mat_is_zero(ay.coeff(i))) continue;
            for (Index j = 0; j <= bx.grade(); ++j)
                r.coeff(i, j) = ay.coeff(i) * bx.coeff(j);
        }
        return r;
    }

    /// Change both variables to monomial coefficients (exact).
    BiMatPoly to_monomial() const {
        if (basis_.kind() == BasisKind::Monomial) return *this;
        Mat<S> sy = change_of_basis(basis_, gy_ + 1);
        Mat<S> sx = change_of_basis(basis_, gx_ + 1);
        // grid is ascending, change-of-basis rows are descending: flip, apply, flip.
        BiMatPoly r(n_, gx_, gy_, Basis<S>::monomial());
        for (Index i = 0; i <= gy_; ++i)
            for (Index j = 0; j <= gx_; ++j) {
                Mat<S> acc = Mat<S>::Zero(n_, n_);
                for (Index p = 0; p <= gy_; ++p)
                    for (Index q = 0; q <= gx_; ++q) {
                        S f = sy(gy_ - p, gy_ - i) * sx(gx_ - q, gx_ - j);
                        if (!is_zero(f)) acc += f * coeff(p, q);
                    }
                r.coeff(i, j) = acc;
            }
        return r;
    }

    /// Inverse of to_monomial for the given target basis.
    BiMatPoly from_monomial(const Basis<S>& basis) const {
        if (basis_.kind() != BasisKind::Monomial)
            throw input_error("from_monomial: input must be monomial");
        if (basis.kind() == BasisKind::Monomial) return *this;
        Mat<S> sy = inverse<S>(change_of_basis(basis, gy_ + 1));
        Mat<S> sx = inverse<S>(change_of_basis(basis, gx_ + 1));
        BiMatPoly r(n_, gx_, gy_, basis);
        for (Index i = 0; i <= gy_; ++i)
            for (Index j = 0; j <= gx_; ++j) {
                Mat<S> acc = Mat<S>::Zero(n_, n_);
                for (Index p = 0; p <= gy_; ++p)
                    for (Index q = 0; q <= gx_; ++q) {
                        S f = sy(gy_ - p, gy_ - i) * sx(gx_ - q, gx_ - j);
                        if (!is_zero(f)) acc += f * coeff(p, q);
                    }
                r.coeff(i, j) = acc;
            }
        return r;
    }

private:
    Index n_, gx_, gy_;
    Basis<S> basis_;
    Mat<S> g_;  // n(gy+1) x n(gx+1)
};

// ---------------------------------------------------------------------------
// phi and the block-level operations
// ---------------------------------------------------------------------------

template <class S>
BiMatPoly<S> phi_map(const BlockMat<S>& x, const Basis<S>& basis) {
    BiMatPoly<S> f(x.n, x.h - 1, x.k - 1, basis);
    for (Index i = 0; i < x.k; ++i)
        for (Index j = 0; j < x.h; ++j)
            f.coeff(x.k - 1 - i, x.h - 1 - j) = x.block(i, j);
    return f;
}

template <class S>
BlockMat<S> phi_unmap(const BiMatPoly<S>& f) {
    Index k = f.grade_y() + 1, h = f.grade_x() + 1;
    BlockMat<S> x = BlockMat<S>::zero(k, h, f.n());
    for (Index i = 0; i < k; ++i)
        for (Index j = 0; j < h; ++j)
            x.block(i, j) = f.coeff(k - 1 - i, h - 1 - j);
    return x;
}

/// Blockwise transpose X^B = (X_{ji}); an involution.
template <class S>
BlockMat<S> block_transpose(const BlockMat<S>& x) {
    BlockMat<S> r = BlockMat<S>::zero(x.h, x.k, x.n);
    for (Index i = 0; i < x.k; ++i)
        for (Index j = 0; j < x.h; ++j)
            r.block(j, i) = x.block(i, j);
    return r;
}

/// Column shift sum  X |+> Y = X M + [0 Y]  (nk x n(k+1)).
template <class S>
BlockMat<S> col_shift_sum(const BlockMat<S>& x, const BlockMat<S>& y, const Basis<S>& basis) {
    if (x.k != y.k || x.h != y.h || x.n != y.n || x.k != x.h)
        throw input_error("col_shift_sum: operands must be square block matrices of equal shape");
    Mat<S> m = mult_matrix(basis, x.h, x.n);
    Mat<S> r = x.a * m;
    r.block(0, x.n, x.n * x.k, x.n * x.h) += y.a;
    return BlockMat<S>(std::move(r), x.k, x.h + 1, x.n);
}

/// Row shift sum  X |+v Y = M^B X + [0; Y]  (n(k+1) x nk).
template <class S>
BlockMat<S> row_shift_sum(const BlockMat<S>& x, const BlockMat<S>& y, const Basis<S>& basis) {
    if (x.k != y.k || x.h != y.h || x.n != y.n || x.k != x.h)
        throw input_error("row_shift_sum: operands must be square block matrices of equal shape");
    Mat<S> m = mult_matrix(basis, x.k, x.n);
    Mat<S> r = m.transpose() * x.a;
    r.block(x.n, 0, x.n * x.k, x.n * x.h) += y.a;
    return BlockMat<S>(std::move(r), x.k + 1, x.h, x.n);
}

/// X (Lambda(x0) kron I_n): the coefficient stack of F(x0, y), nk x n.
template <class S>
Mat<S> eval_right(const BlockMat<S>& x, const Basis<S>& basis, const S& x0) {
    Vec<S> lam = lambda_vector(basis, x.h, x0);
    Mat<S> r = Mat<S>::Zero(x.n * x.k, x.n);
    for (Index j = 0; j < x.h; ++j)
        r += lam(j) * x.a.block(0, j * x.n, x.n * x.k, x.n);
    return r;
}

/// (Lambda(y0)^T kron w^T) X: the coefficient row of w^T F(x, y0), 1 x nh.
template <class S>
Mat<S> eval_left(const BlockMat<S>& x, const Basis<S>& basis, const S& y0, const Vec<S>& w) {
    if (w.size() != x.n) throw input_error("eval_left: w must have length n");
    Vec<S> lam = lambda_vector(basis, x.k, y0);
    Mat<S> r = Mat<S>::Zero(1, x.n * x.h);
    for (Index i = 0; i < x.k; ++i)
        for (Index t = 0; t < x.n; ++t)
            r += (lam(i) * w(t)) * x.a.row(i * x.n + t);
    return r;
}

enum class Side { Left, Right };

/// Sigma = diag(..., I, -I, I) with +I in the last block position.
template <class S>
Mat<S> sigma_matrix(Index k, Index n) {
    Mat<S> s = Mat<S>::Zero(n * k, n * k);
    for (Index i = 0; i < k; ++i) {
        S sign = ((k - 1 - i) % 2 == 0) ? S(1) : S(-1);
        for (Index t = 0; t < n; ++t) s(i * n + t, i * n + t) = sign;
    }
    return s;
}

/// R: identity blocks on the block antidiagonal.
template <class S>
Mat<S> flip_matrix(Index k, Index n) {
    Mat<S> r = Mat<S>::Zero(n * k, n * k);
    for (Index i = 0; i < k; ++i)
        for (Index t = 0; t < n; ++t) r(i * n + t, (k - 1 - i) * n + t) = S(1);
    return r;
}

/// Sigma X (side Left) or X Sigma (side Right): F(x,-y) resp. F(-x,y).
/// Requires an alternating basis.
template <class S>
BlockMat<S> apply_sigma(const BlockMat<S>& x, const Basis<S>& basis, Side side) {
    if (!basis.alternating())
        throw input_error("apply_sigma: requires an alternating basis");
    if (side == Side::Left) {
        Mat<S> s = sigma_matrix<S>(x.k, x.n);
        return BlockMat<S>(s * x.a, x.k, x.h, x.n);
    }
    Mat<S> s = sigma_matrix<S>(x.h, x.n);
    return BlockMat<S>(x.a * s, x.k, x.h, x.n);
}

/// R X (side Left) or X R (side Right): the degree reversals of Table-style
/// identities.  Requires the monomial basis.
template <class S>
BlockMat<S> apply_flip(const BlockMat<S>& x, const Basis<S>& basis, Side side) {
    if (basis.kind() != BasisKind::Monomial)
        throw input_error("apply_flip: requires the monomial basis");
    if (side == Side::Left) {
        Mat<S> r = flip_matrix<S>(x.k, x.n);
        return BlockMat<S>(r * x.a, x.k, x.h, x.n);
    }
    Mat<S> r = flip_matrix<S>(x.h, x.n);
    return BlockMat<S>(x.a * r, x.k, x.h, x.n);
}

/// kron(v, A) for a scalar column v and a block row A.
template <class S>
Mat<S> kron_vec(const Vec<S>& v, const Mat<S>& a) {
    Mat<S> r(v.size() * a.rows(), a.cols());
    for (Index i = 0; i < v.size(); ++i) r.block(i * a.rows(), 0, a.rows(), a.cols()) = v(i) * a;
    return r;
}

// ---------------------------------------------------------------------------
// Pencils
// ---------------------------------------------------------------------------

/// L(x) = x X + Y with square block coefficients.
template <class S>
struct Pencil {
    BlockMat<S> X, Y;
    Basis<S> basis;

    Pencil(BlockMat<S> x, BlockMat<S> y, Basis<S> b)
        : X(std::move(x)), Y(std::move(y)), basis(std::move(b)) {
        if (X.k != Y.k || X.h != Y.h || X.n != Y.n || X.k != X.h)
            throw input_error("Pencil: X and Y must be square block matrices of equal shape");
    }

    Index k() const { return X.k; }
    Index n() const { return X.n; }

    Mat<S> eval(const S& x0) const { return x0 * X.a + Y.a; }

    friend bool operator==(const Pencil& a, const Pencil& b) {
        return a.X == b.X && a.Y == b.Y && a.basis == b.basis;
    }
    friend bool operator!=(const Pencil& a, const Pencil& b) { return !(a == b); }
};

/// Descending coefficient row [P_g, ..., P_0] of a matrix polynomial.
template <class S>
Mat<S> coeff_row_desc(const MatPoly<S>& p) {
    Mat<S> r(p.n(), p.n() * (p.grade() + 1));
    for (Index i = 0; i <= p.grade(); ++i)
        r.block(0, i * p.n(), p.n(), p.n()) = p.coeff(p.grade() - i);
    return r;
}

/// Descending coefficient stack [P_g; ...; P_0].
template <class S>
Mat<S> coeff_col_desc(const MatPoly<S>& p) {
    Mat<S> r(p.n() * (p.grade() + 1), p.n());
    for (Index i = 0; i <= p.grade(); ++i)
        r.block(i * p.n(), 0, p.n(), p.n()) = p.coeff(p.grade() - i);
    return r;
}

}  // namespace bezlin

#endif  // BEZLIN_BLOCKPOLY_HPP
