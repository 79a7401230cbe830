#ifndef BEZLIN_BASIS_HPP
#define BEZLIN_BASIS_HPP

/*
 * Degree-graded polynomial basis descriptors.  A basis is described by how
 * multiplication by x acts on it:
 *
 *   x*phi_i = sum_j m(i,j) phi_j,   with m(i,i+1) != 0  (degree-gradedness)
 *
 * Monomial and Chebyshev (first kind) are built in; three-term orthogonal
 * bases take their recurrence x*phi_j = a_j phi_{j+1} + b_j phi_j +
 * c_j phi_{j-1}; fully general degree-graded bases take the whole
 * coefficient table.  phi_0 = 1 throughout.  Vectors and block layouts are
 * stored descending in degree, matching Lambda(x) = [phi_{k-1},...,phi_0]^T;
 * the file format and CLI use ascending order and convert at the boundary.
 */

#include <vector>

#include "bezlin/linalg.hpp"
#include "bezlin/poly.hpp"

namespace bezlin {

enum class BasisKind { Monomial, ChebyshevT, Orthogonal, DegreeGraded };

template <class S>
class Basis {
public:
    static Basis monomial() { return Basis(BasisKind::Monomial); }

    /// Chebyshev polynomials of the first kind.  Needs 1/2 in the field, so
    /// the characteristic must differ from 2; `proto` supplies the modulus
    /// for GF(p) scalars.
    static Basis chebyshev_t(const S& proto = S(1)) {
        Basis b(BasisKind::ChebyshevT);
        S two = proto + proto;
        if (is_zero(two)) throw input_error("Chebyshev basis requires field characteristic != 2");
        b.half_ = from_fraction(1, 2, proto);
        b.one_ = proto;
        return b;
    }

    static Basis orthogonal(std::vector<S> a, std::vector<S> b, std::vector<S> c) {
        if (a.size() != b.size() || a.size() != c.size())
            throw input_error("orthogonal basis: a, b, c must have equal length");
        for (const auto& aj : a)
            if (is_zero(aj)) throw input_error("orthogonal basis: zero leading recurrence coefficient");
        Basis r(BasisKind::Orthogonal);
        r.a_ = std::move(a);
        r.b_ = std::move(b);
        r.c_ = std::move(c);
        return r;
    }

    /// rows[i] holds the ascending coefficients of x*phi_i (length i+2).
    static Basis degree_graded(std::vector<std::vector<S>> rows) {
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != i + 2)
                throw input_error("degree-graded basis: row " + std::to_string(i) +
                                  " must have length " + std::to_string(i + 2));
            if (is_zero(rows[i][i + 1]))
                throw input_error("degree-graded basis: zero leading coefficient m(i,i) in row " +
                                  std::to_string(i));
        }
        Basis r(BasisKind::DegreeGraded);
        r.rows_ = std::move(rows);
        return r;
    }

    BasisKind kind() const { return kind_; }

    /// True when recurrence data covers x*phi_i for all i < k.
    bool supports(Index k) const {
        switch (kind_) {
            case BasisKind::Monomial:
            case BasisKind::ChebyshevT:
                return true;
            case BasisKind::Orthogonal:
                return static_cast<Index>(a_.size()) >= k;
            case BasisKind::DegreeGraded:
                return static_cast<Index>(rows_.size()) >= k;
        }
        return false;
    }

    /// Coefficient of phi_j in x*phi_i.
    S mult_coeff(Index i, Index j) const {
        if (j < 0 || j > i + 1) return S(0);
        switch (kind_) {
            case BasisKind::Monomial:
                return j == i + 1 ? S(1) : S(0);
            case BasisKind::ChebyshevT:
                if (i == 0) return j == 1 ? one_ : S(0);
                if (j == i + 1 || j == i - 1) return half_;
                return S(0);
            case BasisKind::Orthogonal: {
                check_support(i);
                auto ui = static_cast<std::size_t>(i);
                if (j == i + 1) return a_[ui];
                if (j == i) return b_[ui];
                if (j == i - 1) return c_[ui];
                return S(0);
            }
            case BasisKind::DegreeGraded:
                check_support(i);
                return rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
        return S(0);
    }

    /// Whether phi_i(-x) = (-1)^i phi_i(x); enables the Sigma operations.
    bool alternating() const {
        switch (kind_) {
            case BasisKind::Monomial:
            case BasisKind::ChebyshevT:
                return true;
            case BasisKind::Orthogonal:
                for (const auto& bj : b_)
                    if (!is_zero(bj)) return false;
                return true;
            case BasisKind::DegreeGraded:
                for (std::size_t i = 0; i < rows_.size(); ++i)
                    for (std::size_t j = 0; j < rows_[i].size(); ++j)
                        if (!is_zero(rows_[i][j]) && ((i + 1) % 2) != (j % 2)) return false;
                return true;
        }
        return false;
    }

    /// Values phi_0(x), ..., phi_g(x) by the recurrence.
    std::vector<S> phi_values(const S& x, Index g) const {
        std::vector<S> v;
        v.reserve(static_cast<std::size_t>(g) + 1);
        v.push_back(x * S(0) + S(1));  // 1, carried in the same field as x
        for (Index i = 0; i < g; ++i) {
            S acc = x * v.back();
            for (Index j = 0; j <= i; ++j)
                acc = acc - mult_coeff(i, j) * v[static_cast<std::size_t>(j)];
            v.push_back(acc / mult_coeff(i, i + 1));
        }
        return v;
    }

    /// Monomial coefficients (ascending) of phi_0..phi_g.
    std::vector<Poly<S>> phi_monomials(Index g) const {
        std::vector<Poly<S>> v;
        v.reserve(static_cast<std::size_t>(g) + 1);
        v.push_back(Poly<S>::constant(S(1)));
        for (Index i = 0; i < g; ++i) {
            Poly<S> acc = Poly<S>::x() * v.back();
            for (Index j = 0; j <= i; ++j)
                acc = acc - mult_coeff(i, j) * v[static_cast<std::size_t>(j)];
            v.push_back((S(1) / mult_coeff(i, i + 1)) * acc);
        }
        return v;
    }

    // Raw recurrence data (Orthogonal kind), for serialization.
    const std::vector<S>& orth_a() const { return a_; }
    const std::vector<S>& orth_b() const { return b_; }
    const std::vector<S>& orth_c() const { return c_; }

    friend bool operator==(const Basis& x, const Basis& y) {
        if (x.kind_ != y.kind_) return false;
        if (x.kind_ == BasisKind::Orthogonal)
            return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_;
        if (x.kind_ == BasisKind::DegreeGraded) return x.rows_ == y.rows_;
        return true;
    }
    friend bool operator!=(const Basis& x, const Basis& y) { return !(x == y); }

private:
    explicit Basis(BasisKind k) : kind_(k) {}

    void check_support(Index i) const {
        if (!supports(i + 1))
            throw input_error("basis: recurrence data exhausted at degree " + std::to_string(i));
    }

    BasisKind kind_;
    S half_ = S(0), one_ = S(1);        // ChebyshevT
    std::vector<S> a_, b_, c_;          // Orthogonal
    std::vector<std::vector<S>> rows_;  // DegreeGraded
};

/// The nk x n(k+1) multiplication matrix M with blocks M_{pq} = m_{p,q} I_n,
/// where m_{p,q} is the coefficient of phi_{k+1-q} in x*phi_{k-p} (1-based
/// p, q).  Upper block triangular for degree-graded bases, three nonzero
/// block diagonals for orthogonal ones.
template <class S>
Mat<S> mult_matrix(const Basis<S>& basis, Index k, Index n) {
    if (k < 1 || n < 1) throw input_error("mult_matrix: k and n must be positive");
    if (!basis.supports(k)) throw input_error("mult_matrix: basis does not support degree " + std::to_string(k));
    Mat<S> m = Mat<S>::Zero(n * k, n * (k + 1));
    for (Index p = 1; p <= k; ++p) {
        for (Index q = 1; q <= k + 1; ++q) {
            S coeff = basis.mult_coeff(k - p, k + 1 - q);
            if (is_zero(coeff)) continue;
            for (Index t = 0; t < n; ++t) m((p - 1) * n + t, (q - 1) * n + t) = coeff;
        }
    }
    return m;
}

/// Lambda(x) = [phi_{k-1}(x), ..., phi_0(x)]^T.
template <class S>
Vec<S> lambda_vector(const Basis<S>& basis, Index k, const S& x) {
    if (k < 1) throw input_error("lambda_vector: k must be positive");
    auto vals = basis.phi_values(x, k - 1);
    Vec<S> v(k);
    for (Index i = 0; i < k; ++i) v(i) = vals[static_cast<std::size_t>(k - 1 - i)];
    return v;
}

/// Change-of-basis matrix with Lambda(x) = S * [x^{k-1}, ..., x, 1]^T;
/// upper triangular with nonzero diagonal in the descending ordering.
template <class S>
Mat<S> change_of_basis(const Basis<S>& basis, Index k) {
    if (k < 1) throw input_error("change_of_basis: k must be positive");
    if (!basis.supports(k)) throw input_error("change_of_basis: basis does not support degree " + std::to_string(k));
    auto phis = basis.phi_monomials(k - 1);
    Mat<S> m = Mat<S>::Zero(k, k);
    for (Index r = 0; r < k; ++r)
        for (Index c = 0; c < k; ++c)
            m(r, c) = phis[static_cast<std::size_t>(k - 1 - r)].coeff(static_cast<int>(k - 1 - c));
    return m;
}

}  // namespace bezlin

#endif  // BEZLIN_BASIS_HPP
