#ifndef BEZLIN_BDL_HPP
#define BEZLIN_BDL_HPP

/*
 * Companion matrices, matrix-polynomial Euclidean division, and the
 * "beyond" ansatz space BDL(P, v) = DL(P,1) v(C1) = v(C2) DL(P,1) for a
 * scalar polynomial v of arbitrary degree.  Monomial basis with invertible
 * leading coefficient throughout.  The pencil is computed by all three
 * routes (right companion, left companion, Bezoutian) and their exact
 * agreement is asserted; disagreement signals an implementation bug.
 */

#include <string>
#include <utility>

#include "bezlin/bezout.hpp"
#include "bezlin/dl.hpp"

namespace bezlin {

namespace detail {

template <class S>
bool mats_match(const Mat<S>& a, const Mat<S>& b);

template <class S>
void check_bdl_poly(const MatPoly<S>& p, const char* who) {
    if (p.basis().kind() != BasisKind::Monomial)
        throw input_error(std::string(who) + ": monomial basis required");
    if (p.grade() < 1) throw input_error(std::string(who) + ": grade must be at least 1");
    if (p.degree() != static_cast<int>(p.grade()))
        throw input_error(std::string(who) + ": grade must equal the degree");
}

template <class S>
Mat<S> leading_inverse(const MatPoly<S>& p, const char* who) {
    try {
        return inverse<S>(p.coeff(p.grade()));
    } catch (const input_error&) {
        throw input_error(std::string(who) + ": singular leading coefficient");
    }
}

}  // namespace detail

/// First companion matrix: top block row -Pk^{-1} [P_{k-1}, ..., P_0],
/// identity blocks on the subdiagonal.
template <class S>
Mat<S> companion_first(const MatPoly<S>& p) {
    detail::check_bdl_poly(p, "companion_first");
    Mat<S> pk_inv = detail::leading_inverse(p, "companion_first");
    const Index k = p.grade(), n = p.n();
    Mat<S> c = Mat<S>::Zero(n * k, n * k);
    for (Index j = 0; j < k; ++j)
        c.block(0, j * n, n, n) = -(pk_inv * p.coeff(k - 1 - j));
    for (Index i = 1; i < k; ++i)
        c.block(i * n, (i - 1) * n, n, n) = Mat<S>::Identity(n, n);
    return c;
}

/// Second companion matrix: left block column -[P_{k-1}; ...; P_0] Pk^{-1},
/// identity blocks on the superdiagonal.
template <class S>
Mat<S> companion_second(const MatPoly<S>& p) {
    detail::check_bdl_poly(p, "companion_second");
    Mat<S> pk_inv = detail::leading_inverse(p, "companion_second");
    const Index k = p.grade(), n = p.n();
    Mat<S> c = Mat<S>::Zero(n * k, n * k);
    for (Index i = 0; i < k; ++i)
        c.block(i * n, 0, n, n) = -(p.coeff(k - 1 - i) * pk_inv);
    for (Index i = 0; i + 1 < k; ++i)
        c.block(i * n, (i + 1) * n, n, n) = Mat<S>::Identity(n, n);
    return c;
}

// ---------------------------------------------------------------------------
// Euclidean division
// ---------------------------------------------------------------------------

template <class S>
struct DivisionResult {
    MatPoly<S> quotient;   // A with V = A P + rem (Left) or V = P A + rem (Right)
    MatPoly<S> remainder;  // grade k-1
    Side side;
};

/// Unique quotient/remainder against P with invertible leading coefficient;
/// back-substitution on the block-Toeplitz triangular system formed by the
/// high-order coefficients.
template <class S>
DivisionResult<S> matdiv(const MatPoly<S>& v, const MatPoly<S>& p, Side side) {
    detail::check_bdl_poly(p, "matdiv");
    if (v.basis().kind() != BasisKind::Monomial)
        throw input_error("matdiv: monomial basis required");
    if (v.n() != p.n()) throw input_error("matdiv: size mismatch");
    Mat<S> pk_inv = detail::leading_inverse(p, "matdiv");
    const Index k = p.grade(), n = p.n();
    const int dv = v.degree();

    if (dv < static_cast<int>(k)) {
        return {MatPoly<S>::zero(n, 0, p.basis()), v.with_grade(k - 1), side};
    }
    const Index da = static_cast<Index>(dv) - k;
    MatPoly<S> a = MatPoly<S>::zero(n, da, p.basis());
    for (Index j = da; j >= 0; --j) {
        Mat<S> acc = v.coeff(k + j);
        for (Index i = j + 1; i <= std::min(da, j + k); ++i) {
            const Mat<S>& pc = p.coeff(k + j - i);
            acc -= side == Side::Left ? Mat<S>(a.coeff(i) * pc) : Mat<S>(pc * a.coeff(i));
        }
        a.coeff(j) = side == Side::Left ? Mat<S>(acc * pk_inv) : Mat<S>(pk_inv * acc);
    }
    MatPoly<S> rem = side == Side::Left ? v - mul(a, p) : v - mul(p, a);
    return {std::move(a), rem.with_grade(k - 1), side};
}

/// v(M) for a scalar polynomial v and a square matrix M, by Horner.
template <class S>
Mat<S> poly_of_matrix(const Poly<S>& v, const Mat<S>& m) {
    const Index d = m.rows();
    if (m.cols() != d) throw input_error("poly_of_matrix: matrix not square");
    Mat<S> acc = Mat<S>::Zero(d, d);
    for (int i = v.degree(); i >= 0; --i) {
        acc = acc * m;
        acc += v.coeff(i) * Mat<S>::Identity(d, d);
    }
    return acc;
}

// ---------------------------------------------------------------------------
// BDL
// ---------------------------------------------------------------------------

template <class S>
struct BdlAnsatz {
    MatPoly<S> right;     // Q: v I = A P + Q
    MatPoly<S> left;      // S: v I = P A + S
    MatPoly<S> quotient;  // the shared A
};

namespace detail {

template <class S>
bool matpoly_match(const MatPoly<S>& a, const MatPoly<S>& b);

}  // namespace detail

/// Left and right ansatz matrix polynomials of v against P.  The two
/// quotients coincide and P Q = S P; both identities are asserted.
template <class S>
BdlAnsatz<S> bdl_ansatz(const MatPoly<S>& p, const Poly<S>& v) {
    detail::check_bdl_poly(p, "bdl_ansatz");
    const Index n = p.n();
    const Index gv = static_cast<Index>(std::max(v.degree(), 0));
    MatPoly<S> v_id = MatPoly<S>::scalar_times_identity(v.coeffs(), n, gv, p.basis());
    DivisionResult<S> dl_left = matdiv(v_id, p, Side::Left);
    DivisionResult<S> dl_right = matdiv(v_id, p, Side::Right);
    if (!detail::matpoly_match(dl_left.quotient, dl_right.quotient))
        throw internal_error("bdl_ansatz: left and right quotients differ");
    if (!detail::matpoly_match(mul(p, dl_left.remainder), mul(dl_right.remainder, p)))
        throw internal_error("bdl_ansatz: P Q = S P fails");
    return {std::move(dl_left.remainder), std::move(dl_right.remainder),
            std::move(dl_left.quotient)};
}

template <class S>
struct BdlPencil {
    Pencil<S> pencil;
    MatPoly<S> right_ansatz;  // Q(x)
    MatPoly<S> left_ansatz;   // S(y)
    MatPoly<S> quotient;      // A(x)
    Poly<S> v;
};

/// BDL(P, v) by three independent routes, asserted equal:
///   DL(P,1) v(C1),   v(C2) DL(P,1),   and
///   x B_{S,P}(Q,P) + B_{P,xS}(P,xQ).
/// Over floating fields only the two companion routes are computed (the
/// Bezoutian route rests on exact symbolic checks) and their agreement is
/// tested to 1e-12 relative.
template <class S>
BdlPencil<S> bdl_pencil(const MatPoly<S>& p, const Poly<S>& v) {
    detail::check_bdl_poly(p, "bdl_pencil");
    const Index k = p.grade(), n = p.n();

    Pencil<S> base = dl_pencil(p, Ansatz<S>::one(k, p.basis()));
    Mat<S> w1 = poly_of_matrix(v, companion_first(p));
    Mat<S> w2 = poly_of_matrix(v, companion_second(p));
    Mat<S> x1 = base.X.a * w1, y1 = base.Y.a * w1;
    Mat<S> x2 = w2 * base.X.a, y2 = w2 * base.Y.a;
    if (!detail::mats_match<S>(x1, x2) || !detail::mats_match<S>(y1, y2))
        throw internal_error("bdl_pencil: companion routes disagree");

    BdlAnsatz<S> qsa = bdl_ansatz(p, v);
    if constexpr (is_exact_field_v<S>) {
        MatPoly<S> q_k = qsa.right.with_grade(k);
        MatPoly<S> s_k = qsa.left.with_grade(k);
        MatPoly<S> xq = qsa.right.times_x();  // grade k
        MatPoly<S> xs = qsa.left.times_x();
        Mat<S> x3 = bezout_lt(q_k, p, p, s_k).matrix.a;
        Mat<S> y3 = bezout_lt(p, xq, xs, p).matrix.a;
        if (!mat_eq<S>(x1, x3) || !mat_eq<S>(y1, y3))
            throw internal_error("bdl_pencil: Bezoutian route disagrees with the companion routes");
    }

    Pencil<S> out(BlockMat<S>(std::move(x1), k, k, n), BlockMat<S>(std::move(y1), k, k, n),
                  p.basis());
    return {std::move(out), std::move(qsa.right), std::move(qsa.left), std::move(qsa.quotient), v};
}

template <class S>
struct BarnettCheck {
    bool equal = true;
    std::string part;          // "X" or "Y" when unequal
    Index block_row = -1, block_col = -1;
};

/// For deg v <= k-1 the ansatz-space pencil with ansatz v equals
/// DL(P,1) v(C1) blockwise.
template <class S>
BarnettCheck<S> barnett_check(const MatPoly<S>& p, const Poly<S>& v) {
    detail::check_bdl_poly(p, "barnett_check");
    const Index k = p.grade(), n = p.n();
    if (v.degree() > static_cast<int>(k) - 1)
        throw input_error("barnett_check: deg v must be at most k-1");
    std::vector<S> asc = v.coeffs();
    asc.resize(static_cast<std::size_t>(k), S(0));
    Pencil<S> direct = dl_pencil(p, Ansatz<S>::from_ascending(asc, p.basis()));
    Pencil<S> base = dl_pencil(p, Ansatz<S>::one(k, p.basis()));
    Mat<S> w = poly_of_matrix(v, companion_first(p));
    Mat<S> bx = base.X.a * w, by = base.Y.a * w;

    BarnettCheck<S> out;
    for (Index i = 0; i < k && out.equal; ++i)
        for (Index j = 0; j < k && out.equal; ++j) {
            if (!mat_eq<S>(Mat<S>(direct.X.block(i, j)), Mat<S>(bx.block(i * n, j * n, n, n)))) {
                out = {false, "X", i, j};
            } else if (!mat_eq<S>(Mat<S>(direct.Y.block(i, j)),
                                  Mat<S>(by.block(i * n, j * n, n, n)))) {
                out = {false, "Y", i, j};
            }
        }
    return out;
}

// ---------------------------------------------------------------------------
// Structure-preserving pencils
// ---------------------------------------------------------------------------

enum class Structure {
    Hermitian,
    SkewHermitian,
    Symmetric,
    SkewSymmetric,
    StarEven,
    StarOdd,
    TEven,
    TOdd,
    StarPalindromic,
    StarAntipalindromic,
    TPalindromic,
    TAntipalindromic,
};

inline const char* structure_name(Structure s) {
    switch (s) {
        case Structure::Hermitian: return "hermitian";
        case Structure::SkewHermitian: return "skew-hermitian";
        case Structure::Symmetric: return "symmetric";
        case Structure::SkewSymmetric: return "skew-symmetric";
        case Structure::StarEven: return "*-even";
        case Structure::StarOdd: return "*-odd";
        case Structure::TEven: return "T-even";
        case Structure::TOdd: return "T-odd";
        case Structure::StarPalindromic: return "*-palindromic";
        case Structure::StarAntipalindromic: return "*-antipalindromic";
        case Structure::TPalindromic: return "T-palindromic";
        case Structure::TAntipalindromic: return "T-antipalindromic";
    }
    return "?";
}

namespace detail {

// Exact over exact fields; entrywise 1e-12 relative over floats.
template <class S>
bool mats_match(const Mat<S>& a, const Mat<S>& b) {
    if constexpr (is_exact_field_v<S>) {
        return mat_eq(a, b);
    } else {
        double scale = 0, diff = 0;
        for (Index j = 0; j < a.cols(); ++j)
            for (Index i = 0; i < a.rows(); ++i) {
                scale = std::max(scale, static_cast<double>(std::abs(a(i, j))));
                scale = std::max(scale, static_cast<double>(std::abs(b(i, j))));
                diff = std::max(diff, static_cast<double>(std::abs(a(i, j) - b(i, j))));
            }
        return diff <= 1e-12 * std::max(1.0, scale);
    }
}

template <class S>
bool matpoly_match(const MatPoly<S>& a, const MatPoly<S>& b) {
    if (a.n() != b.n()) return false;
    Index g = std::max(a.grade(), b.grade());
    Mat<S> z = Mat<S>::Zero(a.n(), a.n());
    for (Index i = 0; i <= g; ++i) {
        const Mat<S>& x = i <= a.grade() ? a.coeff(i) : z;
        const Mat<S>& y = i <= b.grade() ? b.coeff(i) : z;
        if (!mats_match<S>(x, y)) return false;
    }
    return true;
}

template <class S>
bool coeff_structure_holds(const MatPoly<S>& p, Structure st) {
    const Index k = p.grade();
    auto sign = [](Index i) { return i % 2 == 0 ? 1 : -1; };
    for (Index i = 0; i <= k; ++i) {
        Mat<S> lhs = p.coeff(i);
        Mat<S> rhs;
        switch (st) {
            case Structure::Hermitian: rhs = conj_transpose(lhs); break;
            case Structure::SkewHermitian: rhs = Mat<S>(-conj_transpose(lhs)); break;
            case Structure::Symmetric: rhs = lhs.transpose(); break;
            case Structure::SkewSymmetric: rhs = Mat<S>(-lhs.transpose()); break;
            case Structure::StarEven:
                rhs = Mat<S>(S(sign(i)) * conj_transpose(lhs));
                break;
            case Structure::StarOdd:
                rhs = Mat<S>(S(-sign(i)) * conj_transpose(lhs));
                break;
            case Structure::TEven:
                rhs = Mat<S>(S(sign(i)) * lhs.transpose());
                break;
            case Structure::TOdd:
                rhs = Mat<S>(S(-sign(i)) * lhs.transpose());
                break;
            case Structure::StarPalindromic: rhs = conj_transpose(p.coeff(k - i)); break;
            case Structure::StarAntipalindromic:
                rhs = Mat<S>(-conj_transpose(p.coeff(k - i)));
                break;
            case Structure::TPalindromic: rhs = p.coeff(k - i).transpose(); break;
            case Structure::TAntipalindromic:
                rhs = Mat<S>(-p.coeff(k - i).transpose());
                break;
        }
        if (!mats_match<S>(lhs, rhs)) return false;
    }
    return true;
}

template <class S>
bool ansatz_requirement_holds(const Poly<S>& v, Structure st, Index k) {
    auto real_coeffs = [&] {
        for (int i = 0; i <= v.degree(); ++i)
            if (!(conj_of(v.coeff(i)) == v.coeff(i))) return false;
        return true;
    };
    switch (st) {
        case Structure::Hermitian:
        case Structure::SkewHermitian:
            return real_coeffs();  // f(x*) = f*(x)
        case Structure::Symmetric:
        case Structure::SkewSymmetric:
            return true;  // any f
        case Structure::StarEven:
        case Structure::StarOdd:
            // f(x) = f*(-x): alternating real/imaginary coefficients
            for (int i = 0; i <= v.degree(); ++i) {
                S want = i % 2 == 0 ? conj_of(v.coeff(i)) : S(-conj_of(v.coeff(i)));
                if (!(v.coeff(i) == want)) return false;
            }
            return true;
        case Structure::TEven:
        case Structure::TOdd:
            // f(x) = f(-x): even polynomial
            for (int i = 1; i <= v.degree(); i += 2)
                if (!is_zero(v.coeff(i))) return false;
            return true;
        case Structure::StarPalindromic:
        case Structure::StarAntipalindromic:
            // f(x) = x^{k-1} f*(1/x): forces grade k-1 with v_i = conj(v_{k-1-i})
            if (v.degree() > static_cast<int>(k) - 1) return false;
            for (Index i = 0; i < k; ++i)
                if (!(v.coeff(static_cast<int>(i)) == conj_of(v.coeff(static_cast<int>(k - 1 - i)))))
                    return false;
            return true;
        case Structure::TPalindromic:
        case Structure::TAntipalindromic:
            if (v.degree() > static_cast<int>(k) - 1) return false;
            for (Index i = 0; i < k; ++i)
                if (!(v.coeff(static_cast<int>(i)) == v.coeff(static_cast<int>(k - 1 - i))))
                    return false;
            return true;
    }
    return false;
}

template <class S>
bool pencil_structure_holds(const Pencil<S>& l, Structure st) {
    const Mat<S>& x = l.X.a;
    const Mat<S>& y = l.Y.a;
    switch (st) {
        case Structure::Hermitian:
            return mats_match<S>(x, conj_transpose(x)) && mats_match<S>(y, conj_transpose(y));
        case Structure::SkewHermitian:
            return mats_match<S>(x, Mat<S>(-conj_transpose(x))) &&
                   mats_match<S>(y, Mat<S>(-conj_transpose(y)));
        case Structure::Symmetric:
            return mats_match<S>(x, Mat<S>(x.transpose())) && mats_match<S>(y, Mat<S>(y.transpose()));
        case Structure::SkewSymmetric:
            return mats_match<S>(x, Mat<S>(-x.transpose())) &&
                   mats_match<S>(y, Mat<S>(-y.transpose()));
        case Structure::StarEven:  // L(x) = L*(-x)
            return mats_match<S>(x, Mat<S>(-conj_transpose(x))) &&
                   mats_match<S>(y, conj_transpose(y));
        case Structure::StarOdd:   // L(x) = -L*(-x)
            return mats_match<S>(x, conj_transpose(x)) &&
                   mats_match<S>(y, Mat<S>(-conj_transpose(y)));
        case Structure::TEven:
            return mats_match<S>(x, Mat<S>(-x.transpose())) &&
                   mats_match<S>(y, Mat<S>(y.transpose()));
        case Structure::TOdd:
            return mats_match<S>(x, Mat<S>(x.transpose())) &&
                   mats_match<S>(y, Mat<S>(-y.transpose()));
        case Structure::StarPalindromic:  // rev L*(x) = L(x)
            return mats_match<S>(y, conj_transpose(x));
        case Structure::StarAntipalindromic:
            return mats_match<S>(y, Mat<S>(-conj_transpose(x)));
        case Structure::TPalindromic:
            return mats_match<S>(y, Mat<S>(x.transpose()));
        case Structure::TAntipalindromic:
            return mats_match<S>(y, Mat<S>(-x.transpose()));
    }
    return false;
}

}  // namespace detail

/// Builds the structure-preserving pencil for a structured P: BDL(P, v),
/// Sigma BDL(P, v), or R BDL(P, v) per the structure class.  Both the input
/// structure (on P and v) and the promised output structure are verified;
/// an output-structure failure raises internal_error.
template <class S>
Pencil<S> structured_pencil(const MatPoly<S>& p, const Poly<S>& v, Structure st) {
    detail::check_bdl_poly(p, "structured_pencil");
    if (!detail::coeff_structure_holds(p, st))
        throw input_error(std::string("structured_pencil: P is not ") + structure_name(st));
    if (!detail::ansatz_requirement_holds(v, st, p.grade()))
        throw input_error(
            std::string("structured_pencil: v violates the ansatz requirement for ") +
            structure_name(st));

    BdlPencil<S> b = bdl_pencil(p, v);
    Pencil<S> out = b.pencil;
    switch (st) {
        case Structure::Hermitian:
        case Structure::SkewHermitian:
        case Structure::Symmetric:
        case Structure::SkewSymmetric:
            break;
        case Structure::StarEven:
        case Structure::StarOdd:
        case Structure::TEven:
        case Structure::TOdd: {
            Mat<S> sig = sigma_matrix<S>(out.k(), out.n());
            out = Pencil<S>(BlockMat<S>(Mat<S>(sig * out.X.a), out.k(), out.k(), out.n()),
                            BlockMat<S>(Mat<S>(sig * out.Y.a), out.k(), out.k(), out.n()),
                            out.basis);
            break;
        }
        default: {
            Mat<S> r = flip_matrix<S>(out.k(), out.n());
            out = Pencil<S>(BlockMat<S>(Mat<S>(r * out.X.a), out.k(), out.k(), out.n()),
                            BlockMat<S>(Mat<S>(r * out.Y.a), out.k(), out.k(), out.n()),
                            out.basis);
            break;
        }
    }
    if (!detail::pencil_structure_holds(out, st))
        throw internal_error(std::string("structured_pencil: output pencil is not ") +
                             structure_name(st));
    return out;
}

/// True iff block (i, j) of B^{-1} depends only on i + j.
template <class S>
bool hankel_inverse_check(const BlockMat<S>& b) {
    detail::require_exact<S>("hankel_inverse_check");
    if (b.k != b.h) throw input_error("hankel_inverse_check: block matrix not square");
    Mat<S> inv = inverse<S>(b.a);  // throws input_error when singular
    BlockMat<S> bi(std::move(inv), b.k, b.h, b.n);
    for (Index s = 1; s <= 2 * (b.k - 1); ++s) {
        Index i0 = std::max<Index>(0, s - (b.k - 1));
        if (s - i0 > b.k - 1) continue;
        Mat<S> ref = bi.block(i0, s - i0);
        for (Index i = i0 + 1; i <= std::min(s, b.k - 1); ++i)
            if (!mat_eq<S>(ref, Mat<S>(bi.block(i, s - i)))) return false;
    }
    return true;
}

}  // namespace bezlin

#endif  // BEZLIN_BDL_HPP
