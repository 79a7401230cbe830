#ifndef BEZLIN_MATPOLY_HPP
#define BEZLIN_MATPOLY_HPP

/*
 * n x n matrix polynomials P(x) = sum_{i=0}^{g} P_i phi_i(x) with an
 * explicitly declared grade g >= deg P.  The grade is never inferred from
 * the degree: the size of every Bezout construction depends on it.
 */

#include <vector>

#include "bezlin/basis.hpp"
#include "bezlin/linalg.hpp"
#include "bezlin/poly.hpp"

namespace bezlin {

template <class S>
class MatPoly {
public:
    MatPoly(Index n, Index grade, std::vector<Mat<S>> ascending, Basis<S> basis)
        : n_(n), grade_(grade), c_(std::move(ascending)), basis_(std::move(basis)) {
        if (n_ < 1) throw input_error("MatPoly: n must be positive");
        if (grade_ < 0) throw input_error("MatPoly: negative grade");
        if (static_cast<Index>(c_.size()) != grade_ + 1)
            throw input_error("MatPoly: expected grade+1 coefficients");
        for (const auto& m : c_)
            if (m.rows() != n_ || m.cols() != n_)
                throw input_error("MatPoly: coefficient is not n x n");
    }

    static MatPoly zero(Index n, Index grade, Basis<S> basis) {
        std::vector<Mat<S>> c(static_cast<std::size_t>(grade) + 1, Mat<S>::Zero(n, n));
        return MatPoly(n, grade, std::move(c), std::move(basis));
    }

    /// v(x) * I_n at the declared grade (coefficients ascending).
    static MatPoly scalar_times_identity(const std::vector<S>& v, Index n, Index grade,
                                         Basis<S> basis) {
        if (static_cast<Index>(v.size()) > grade + 1)
            throw input_error("MatPoly: scalar coefficients exceed the declared grade");
        MatPoly p = zero(n, grade, std::move(basis));
        for (std::size_t i = 0; i < v.size(); ++i)
            p.c_[i] = v[i] * Mat<S>::Identity(n, n);
        return p;
    }

    Index n() const { return n_; }
    Index grade() const { return grade_; }
    const Basis<S>& basis() const { return basis_; }
    const Mat<S>& coeff(Index i) const { return c_[static_cast<std::size_t>(i)]; }
    Mat<S>& coeff(Index i) { return c_[static_cast<std::size_t>(i)]; }
    const std::vector<Mat<S>>& coeffs() const { return c_; }

    /// Largest i with P_i != 0, or -1 for the zero polynomial.
    int degree() const {
        for (Index i = grade_; i >= 0; --i)
            if (!mat_is_zero(c_[static_cast<std::size_t>(i)])) return static_cast<int>(i);
        return -1;
    }
    bool is_zero_poly() const { return degree() < 0; }

    Mat<S> eval(const S& x) const {
        auto phi = basis_.phi_values(x, grade_);
        Mat<S> acc = Mat<S>::Zero(n_, n_);
        for (Index i = 0; i <= grade_; ++i)
            acc += phi[static_cast<std::size_t>(i)] * c_[static_cast<std::size_t>(i)];
        return acc;
    }

    MatPoly with_grade(Index g) const {
        if (g < grade_) {
            for (Index i = g + 1; i <= grade_; ++i)
                if (!mat_is_zero(coeff(i)))
                    throw input_error("MatPoly: grade smaller than the degree");
        }
        std::vector<Mat<S>> c(static_cast<std::size_t>(g) + 1, Mat<S>::Zero(n_, n_));
        for (Index i = 0; i <= std::min(g, grade_); ++i) c[static_cast<std::size_t>(i)] = coeff(i);
        return MatPoly(n_, g, std::move(c), basis_);
    }

    friend MatPoly operator+(const MatPoly& a, const MatPoly& b) {
        a.check_compatible(b);
        Index g = std::max(a.grade_, b.grade_);
        MatPoly r = zero(a.n_, g, a.basis_);
        for (Index i = 0; i <= g; ++i) {
            if (i <= a.grade_) r.coeff(i) += a.coeff(i);
            if (i <= b.grade_) r.coeff(i) += b.coeff(i);
        }
        return r;
    }
    friend MatPoly operator-(const MatPoly& a, const MatPoly& b) { return a + (-b); }
    MatPoly operator-() const {
        MatPoly r = *this;
        for (auto& m : r.c_) m = -m;
        return r;
    }
    friend MatPoly operator*(const S& s, const MatPoly& p) {
        MatPoly r = p;
        for (auto& m : r.c_) m = s * m;
        return r;
    }

    friend bool operator==(const MatPoly& a, const MatPoly& b) {
        if (a.n_ != b.n_ || a.basis_ != b.basis_) return false;
        Index g = std::max(a.grade_, b.grade_);
        Mat<S> z = Mat<S>::Zero(a.n_, a.n_);
        for (Index i = 0; i <= g; ++i) {
            const Mat<S>& x = i <= a.grade_ ? a.coeff(i) : z;
            const Mat<S>& y = i <= b.grade_ ? b.coeff(i) : z;
            if (!mat_eq(x, y)) return false;
        }
        return true;
    }
    friend bool operator!=(const MatPoly& a, const MatPoly& b) { return !(a == b); }

    /// Same polynomial with monomial coefficients (same grade).
    MatPoly to_monomial() const {
        if (basis_.kind() == BasisKind::Monomial) return *this;
        auto phis = basis_.phi_monomials(grade_);
        std::vector<Mat<S>> mono(static_cast<std::size_t>(grade_) + 1, Mat<S>::Zero(n_, n_));
        for (Index i = 0; i <= grade_; ++i)
            for (Index d = 0; d <= i; ++d)
                mono[static_cast<std::size_t>(d)] +=
                    phis[static_cast<std::size_t>(i)].coeff(static_cast<int>(d)) * coeff(i);
        return MatPoly(n_, grade_, std::move(mono), Basis<S>::monomial());
    }

    /// Reinterprets monomial coefficients in `basis` (exact change of basis).
    static MatPoly from_monomial(const MatPoly& mono, const Basis<S>& basis) {
        if (mono.basis().kind() != BasisKind::Monomial)
            throw input_error("from_monomial: input must be in the monomial basis");
        if (basis.kind() == BasisKind::Monomial) return mono;
        Index g = mono.grade(), n = mono.n();
        // Solve sum_i C_i phi_i = given monomial expansion, top degree down.
        auto phis = basis.phi_monomials(g);
        std::vector<Mat<S>> rem = mono.coeffs();
        std::vector<Mat<S>> out(static_cast<std::size_t>(g) + 1, Mat<S>::Zero(n, n));
        for (Index i = g; i >= 0; --i) {
            const auto& phi = phis[static_cast<std::size_t>(i)];
            S lead = phi.coeff(static_cast<int>(i));
            Mat<S> ci = (S(1) / lead) * rem[static_cast<std::size_t>(i)];
            out[static_cast<std::size_t>(i)] = ci;
            for (Index d = 0; d <= i; ++d)
                rem[static_cast<std::size_t>(d)] -= phi.coeff(static_cast<int>(d)) * ci;
        }
        return MatPoly(n, g, std::move(out), basis);
    }

    /// x * P(x), expressed in the same basis (grade rises by one).
    MatPoly times_x() const {
        MatPoly r = zero(n_, grade_ + 1, basis_);
        if (!basis_.supports(grade_ + 1))
            throw input_error("times_x: basis does not support the resulting degree");
        for (Index i = 0; i <= grade_; ++i)
            for (Index j = 0; j <= i + 1; ++j) {
                S m = basis_.mult_coeff(i, j);
                if (!is_zero(m)) r.coeff(j) += m * coeff(i);
            }
        return r;
    }

    MatPoly transpose_coeffs() const {
        MatPoly r = *this;
        for (auto& m : r.c_) m = m.transpose().eval();
        return r;
    }
    MatPoly conj_transpose_coeffs() const {
        MatPoly r = *this;
        for (auto& m : r.c_) m = conj_transpose(m);
        return r;
    }

private:
    void check_compatible(const MatPoly& o) const {
        if (n_ != o.n_ || basis_ != o.basis_)
            throw input_error("MatPoly: size or basis mismatch");
    }

    Index n_, grade_;
    std::vector<Mat<S>> c_;
    Basis<S> basis_;
};

/// Product A(x) B(x) in the common basis, via exact monomial conversion.
template <class S>
MatPoly<S> mul(const MatPoly<S>& a, const MatPoly<S>& b) {
    if (a.n() != b.n() || a.basis() != b.basis())
        throw input_error("MatPoly mul: size or basis mismatch");
    MatPoly<S> am = a.to_monomial(), bm = b.to_monomial();
    Index g = a.grade() + b.grade();
    MatPoly<S> rm = MatPoly<S>::zero(a.n(), g, Basis<S>::monomial());
    for (Index i = 0; i <= a.grade(); ++i) {
        if (mat_is_zero(am.coeff(i))) continue;
        for (Index j = 0; j <= b.grade(); ++j)
            rm.coeff(i + j) += am.coeff(i) * bm.coeff(j);
    }
    return MatPoly<S>::from_monomial(rm, a.basis());
}

namespace detail {

template <class S>
Poly<S> lagrange_interpolate(const std::vector<S>& xs, const std::vector<S>& ys) {
    Poly<S> acc;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        Poly<S> basis_poly = Poly<S>::constant(S(1));
        S denom = S(1);
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            basis_poly = basis_poly * Poly<S>({-xs[j], S(1)});
            denom = denom * (xs[i] - xs[j]);
        }
        acc = acc + (ys[i] / denom) * basis_poly;
    }
    return acc;
}

// Cofactor expansion along the first column; fine at desk scale.
template <class S>
Poly<S> poly_det(const std::vector<std::vector<Poly<S>>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return Poly<S>::constant(S(1));
    if (n == 1) return m[0][0];
    Poly<S> acc;
    for (std::size_t r = 0; r < n; ++r) {
        if (m[r][0].is_zero()) continue;
        std::vector<std::vector<Poly<S>>> minor;
        minor.reserve(n - 1);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == r) continue;
            std::vector<Poly<S>> row(m[i].begin() + 1, m[i].end());
            minor.push_back(std::move(row));
        }
        Poly<S> term = m[r][0] * poly_det(minor);
        acc = (r % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

}  // namespace detail

/// det P(x) as a scalar polynomial with monomial coefficients.  Exact
/// interpolation at n*grade+1 distinct field points; falls back to cofactor
/// expansion over the polynomial ring when the field is too small.
template <class S>
Poly<S> scalar_det(const MatPoly<S>& p) {
    detail::require_exact<S>("scalar_det");
    const Index deg_bound = p.n() * p.grade();

    bool enough_points = true;
    if constexpr (std::is_same_v<S, GFp>) {
        std::uint64_t mod = 0;
        for (Index i = 0; i <= p.grade() && mod == 0; ++i)
            for (Index r = 0; r < p.n() && mod == 0; ++r)
                for (Index c = 0; c < p.n(); ++c)
                    if (p.coeff(i)(r, c).bound()) {
                        mod = p.coeff(i)(r, c).modulus();
                        break;
                    }
        if (mod == 0) throw input_error("scalar_det: GFp polynomial with no bound entries");
        enough_points = mod > static_cast<std::uint64_t>(deg_bound);
        if (enough_points) {
            std::vector<S> xs, ys;
            for (Index t = 0; t <= deg_bound; ++t) {
                S x(static_cast<long long>(t), mod);
                xs.push_back(x);
                ys.push_back(determinant<S>(p.eval(x)));
            }
            return detail::lagrange_interpolate(xs, ys);
        }
    } else {
        std::vector<S> xs, ys;
        for (Index t = 0; t <= deg_bound; ++t) {
            S x = S(static_cast<int>(t));
            xs.push_back(x);
            ys.push_back(determinant<S>(p.eval(x)));
        }
        return detail::lagrange_interpolate(xs, ys);
    }

    // Small prime field: expand det symbolically over GF(p)[x].
    MatPoly<S> mono = p.to_monomial();
    std::vector<std::vector<Poly<S>>> entries(
        static_cast<std::size_t>(p.n()), std::vector<Poly<S>>(static_cast<std::size_t>(p.n())));
    for (Index r = 0; r < p.n(); ++r)
        for (Index c = 0; c < p.n(); ++c) {
            std::vector<S> cs;
            for (Index i = 0; i <= p.grade(); ++i) cs.push_back(mono.coeff(i)(r, c));
            entries[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = Poly<S>(cs);
        }
    return detail::poly_det(entries);
}

/// Regular <=> det P(x) is not identically zero.
template <class S>
bool is_regular(const MatPoly<S>& p) {
    return !scalar_det(p).is_zero();
}

}  // namespace bezlin

#endif  // BEZLIN_MATPOLY_HPP
