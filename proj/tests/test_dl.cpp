#include <doctest.h>

#include "bezlin/dl.hpp"
#include "bezlin/randgen.hpp"

using namespace bezlin;

TEST_SUITE_BEGIN("dl");

namespace {

Rational q(long long n, long long d = 1) { return Rational(BigInt(n), BigInt(d)); }

// Independent oracle: solve the linear system imposed by the two shifted-sum
// equations for the entries of (X, Y) by exact row reduction.  The solution
// is unique, so a consistent system with no free variables certifies the
// pencil.
struct ShiftedSumOracle {
    Mat<Rational> x, y;
};

ShiftedSumOracle solve_shifted_sums(const MatPoly<Rational>& p, const Ansatz<Rational>& a) {
    const Index k = p.grade(), n = p.n();
    const Index nk = n * k;
    const Index unknowns = 2 * nk * nk;  // X entries then Y entries
    Mat<Rational> m = mult_matrix<Rational>(p.basis(), k, n);

    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
    auto xidx = [&](Index r, Index c) { return r * nk + c; };
    auto yidx = [&](Index r, Index c) { return nk * nk + r * nk + c; };

    // X M + [0 Y] = v kron [P_k ... P_0]
    Mat<Rational> arow = coeff_row_desc(p);
    Mat<Rational> s = kron_vec<Rational>(a.v, arow);
    for (Index r = 0; r < nk; ++r)
        for (Index c = 0; c < n * (k + 1); ++c) {
            std::vector<Rational> row(static_cast<std::size_t>(unknowns), q(0));
            for (Index t = 0; t < nk; ++t)
                if (!is_zero(m(t, c))) row[static_cast<std::size_t>(xidx(r, t))] = m(t, c);
            if (c >= n) row[static_cast<std::size_t>(yidx(r, c - n))] += q(1);
            rows.push_back(std::move(row));
            rhs.push_back(s(r, c));
        }

    // M^B X + [0; Y] = (P stack) v^T layout
    for (Index r = 0; r < n * (k + 1); ++r)
        for (Index c = 0; c < nk; ++c) {
            std::vector<Rational> row(static_cast<std::size_t>(unknowns), q(0));
            for (Index t = 0; t < nk; ++t)
                if (!is_zero(m(t, r))) row[static_cast<std::size_t>(xidx(t, c))] = m(t, r);
            if (r >= n) row[static_cast<std::size_t>(yidx(r - n, c))] += q(1);
            rows.push_back(std::move(row));
            // T block (i, j) = v_j * P_{k-i}
            Index bi = r / n, bj = c / n;
            rhs.push_back(a.v(bj) * p.coeff(k - bi)(r % n, c % n));
        }

    // row reduce [A | b]
    Mat<Rational> aug(static_cast<Index>(rows.size()), unknowns + 1);
    for (Index i = 0; i < aug.rows(); ++i) {
        for (Index j = 0; j < unknowns; ++j)
            aug(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        aug(i, unknowns) = rhs[static_cast<std::size_t>(i)];
    }
    auto pivots = detail::rref(aug);
    REQUIRE(static_cast<Index>(pivots.size()) == unknowns);  // unique solution
    for (const Index piv : pivots) REQUIRE(piv < unknowns);  // consistent

    Vec<Rational> sol = Vec<Rational>::Zero(unknowns);
    for (std::size_t r = 0; r < pivots.size(); ++r)
        sol(pivots[r]) = aug(static_cast<Index>(r), unknowns);

    ShiftedSumOracle out{Mat<Rational>(nk, nk), Mat<Rational>(nk, nk)};
    for (Index r = 0; r < nk; ++r)
        for (Index c = 0; c < nk; ++c) {
            out.x(r, c) = sol(xidx(r, c));
            out.y(r, c) = sol(yidx(r, c));
        }
    return out;
}

// The cubic Chebyshev fixtures: three printed pencils, one per unit ansatz.
struct Table3Expect {
    Mat<Rational> x, y;
};

Table3Expect table3_row(const MatPoly<Rational>& p, int which) {
    const Index n = p.n();
    const Mat<Rational>&p0 = p.coeff(0), &p1 = p.coeff(1), &p2 = p.coeff(2), &p3 = p.coeff(3);
    Mat<Rational> z = Mat<Rational>::Zero(n, n);
    auto assemble = [&](std::initializer_list<Mat<Rational>> blocks) {
        Mat<Rational> m(3 * n, 3 * n);
        Index i = 0;
        for (const auto& b : blocks) {
            m.block((i / 3) * n, (i % 3) * n, n, n) = b;
            ++i;
        }
        return m;
    };
    if (which == 1) {  // v = [1,0,0]^T
        return {assemble({q(2) * p3, z, z,
                          z, Mat<Rational>(q(2) * p3 - q(2) * p1), Mat<Rational>(q(-2) * p0),
                          z, Mat<Rational>(q(-2) * p0), Mat<Rational>(p3 - p1)}),
                assemble({p2, Mat<Rational>(p1 - p3), p0,
                          Mat<Rational>(p1 - p3), Mat<Rational>(q(2) * p0), Mat<Rational>(p1 - p3),
                          p0, Mat<Rational>(p1 - p3), p0})};
    }
    if (which == 2) {  // v = [0,1,0]^T
        return {assemble({z, q(2) * p3, z,
                          Mat<Rational>(q(2) * p3), Mat<Rational>(q(2) * p2), Mat<Rational>(q(2) * p3),
                          z, Mat<Rational>(q(2) * p3), Mat<Rational>(p2 - p0)}),
                assemble({Mat<Rational>(-p3), z, Mat<Rational>(-p3),
                          z, Mat<Rational>(p1 - q(3) * p3), Mat<Rational>(p0 - p2),
                          Mat<Rational>(-p3), Mat<Rational>(p0 - p2), Mat<Rational>(-p3)})};
    }
    // v = [0,0,1]^T
    return {assemble({z, z, q(2) * p3,
                      z, Mat<Rational>(q(4) * p3), Mat<Rational>(q(2) * p2),
                      Mat<Rational>(q(2) * p3), Mat<Rational>(q(2) * p2), Mat<Rational>(p1 + p3)}),
            assemble({z, Mat<Rational>(q(-2) * p3), z,
                      Mat<Rational>(q(-2) * p3), Mat<Rational>(q(-2) * p2), Mat<Rational>(q(-2) * p3),
                      z, Mat<Rational>(q(-2) * p3), Mat<Rational>(p0 - p2)})};
}

bool block_symmetric(const BlockMat<Rational>& b) {
    return b == block_transpose(b);
}

}  // namespace

TEST_CASE("cubic Chebyshev pencils match the printed table for all unit ansatze") {
    Rng rng(131);
    auto cheb = Basis<Rational>::chebyshev_t();
    MatPoly<Rational> p = random_matpoly<Rational>(rng, 2, 3, cheb, true);
    for (int which = 1; which <= 3; ++which) {
        Vec<Rational> v = Vec<Rational>::Zero(3);
        v(which - 1) = q(1);
        Ansatz<Rational> a = Ansatz<Rational>::from_descending(v, cheb);
        Pencil<Rational> l = dl_pencil(p, a);
        Table3Expect want = table3_row(p, which);
        CHECK(mat_eq<Rational>(l.X.a, want.x));
        CHECK(mat_eq<Rational>(l.Y.a, want.y));
        // and through the Bezoutian route
        Pencil<Rational> lb = dl_pencil_bezout(p, a);
        CHECK(mat_eq<Rational>(lb.X.a, want.x));
        CHECK(mat_eq<Rational>(lb.Y.a, want.y));
    }
}

TEST_CASE("monomial quadratic with ansatz [1,0]: frozen oracle result") {
    Rng rng(137);
    auto mono = Basis<Rational>::monomial();
    MatPoly<Rational> p = random_matpoly<Rational>(rng, 2, 2, mono, true);
    Ansatz<Rational> a =
        Ansatz<Rational>::from_descending(Vec<Rational>{{q(1), q(0)}}, mono);
    Pencil<Rational> l = dl_pencil(p, a);

    // oracle first: row reduction of the shifted-sum equations
    ShiftedSumOracle o = solve_shifted_sums(p, a);
    CHECK(mat_eq<Rational>(l.X.a, o.x));
    CHECK(mat_eq<Rational>(l.Y.a, o.y));

    // frozen expected blocks: X = diag(P2, -P0), Y = [[P1, P0], [P0, 0]]
    CHECK(mat_eq<Rational>(Mat<Rational>(l.X.block(0, 0)), p.coeff(2)));
    CHECK(mat_is_zero<Rational>(Mat<Rational>(l.X.block(0, 1))));
    CHECK(mat_eq<Rational>(Mat<Rational>(l.X.block(1, 1)), Mat<Rational>(-p.coeff(0))));
    CHECK(mat_eq<Rational>(Mat<Rational>(l.Y.block(0, 0)), p.coeff(1)));
    CHECK(mat_eq<Rational>(Mat<Rational>(l.Y.block(0, 1)), p.coeff(0)));
    CHECK(mat_eq<Rational>(Mat<Rational>(l.Y.block(1, 0)), p.coeff(0)));
    CHECK(mat_is_zero<Rational>(Mat<Rational>(l.Y.block(1, 1))));
}

TEST_CASE("scalar degree 1: the pencil is the polynomial itself") {
    auto mono = Basis<Rational>::monomial();
    // p = x - a with a = 5/3, v = 1
    MatPoly<Rational> p = MatPoly<Rational>::scalar_times_identity({q(-5, 3), q(1)}, 1, 1, mono);
    Ansatz<Rational> one = Ansatz<Rational>::one(1, mono);
    Pencil<Rational> l = dl_pencil(p, one);
    CHECK(l.X.a(0, 0) == q(1));
    CHECK(l.Y.a(0, 0) == q(-5, 3));
    Pencil<Rational> lb = dl_pencil_bezout(p, one);
    CHECK(l == lb);
}

TEST_CASE("recurrence and Bezout routes agree; pencils are block symmetric") {
    Rng rng(139);
    for (int t = 0; t < 12; ++t) {
        Index n = 1 + rng.next_int(0, 2);
        Index k = 1 + rng.next_int(0, 3);
        bool cheb = rng.next_int(0, 1) == 1;
        auto basis = cheb ? Basis<Rational>::chebyshev_t() : Basis<Rational>::monomial();
        MatPoly<Rational> p = random_matpoly<Rational>(rng, n, k, basis);
        Ansatz<Rational> a = random_ansatz<Rational>(rng, k, basis);
        Pencil<Rational> l = dl_pencil(p, a);
        CHECK(l == dl_pencil_bezout(p, a));
        CHECK(block_symmetric(l.X));
        CHECK(block_symmetric(l.Y));

        // shifted-sum equations hold symbolically
        Mat<Rational> s = kron_vec<Rational>(a.v, coeff_row_desc(p));
        CHECK(mat_eq<Rational>(col_shift_sum(l.X, l.Y, basis).a, s));
        Mat<Rational> t_mat(n * (k + 1), n * k);
        for (Index i = 0; i <= k; ++i)
            for (Index j = 0; j < k; ++j)
                t_mat.block(i * n, j * n, n, n) = a.v(j) * p.coeff(k - i);
        CHECK(mat_eq<Rational>(row_shift_sum(l.X, l.Y, basis).a, t_mat));

        // defining bivariate relations with w = v at random points
        BiMatPoly<Rational> f = phi_map(l.X, basis), g = phi_map(l.Y, basis);
        for (int s2 = 0; s2 < 3; ++s2) {
            Rational xv = random_rational(rng), yv = random_rational(rng);
            CHECK(mat_eq<Rational>(
                Mat<Rational>(f.eval(xv, yv) * xv + g.eval(xv, yv)),
                Mat<Rational>(a.eval(yv) * p.eval(xv))));
            CHECK(mat_eq<Rational>(
                Mat<Rational>(yv * f.eval(xv, yv) + g.eval(xv, yv)),
                Mat<Rational>(a.eval(xv) * p.eval(yv))));
        }
    }
}

TEST_CASE("construction is linear in the ansatz") {
    Rng rng(149);
    auto cheb = Basis<Rational>::chebyshev_t();
    MatPoly<Rational> p = random_matpoly<Rational>(rng, 2, 3, cheb);
    Ansatz<Rational> a1 = random_ansatz<Rational>(rng, 3, cheb);
    Ansatz<Rational> a2 = random_ansatz<Rational>(rng, 3, cheb);
    Rational c1 = random_rational(rng), c2 = random_rational(rng);
    Ansatz<Rational> mix =
        Ansatz<Rational>::from_descending(Vec<Rational>(c1 * a1.v + c2 * a2.v), cheb);
    Pencil<Rational> l1 = dl_pencil(p, a1), l2 = dl_pencil(p, a2), lm = dl_pencil(p, mix);
    CHECK(mat_eq<Rational>(lm.X.a, Mat<Rational>(c1 * l1.X.a + c2 * l2.X.a)));
    CHECK(mat_eq<Rational>(lm.Y.a, Mat<Rational>(c1 * l1.Y.a + c2 * l2.Y.a)));
}

TEST_CASE("dl_pencil validates its inputs") {
    Rng rng(151);
    auto mono = Basis<Rational>::monomial();
    MatPoly<Rational> p = random_matpoly<Rational>(rng, 2, 2, mono);
    CHECK_THROWS_AS(dl_pencil(p, Ansatz<Rational>::one(3, mono)), input_error);  // wrong length
    MatPoly<Rational> degenerate = MatPoly<Rational>::zero(2, 2, mono);          // degree < grade
    CHECK_THROWS_AS(dl_pencil(degenerate, Ansatz<Rational>::one(2, mono)), input_error);
    auto table = Basis<Rational>::degree_graded(
        {{q(0), q(1)}, {q(1), q(1), q(1)}});  // not orthogonal-shaped
    MatPoly<Rational> pg = random_matpoly<Rational>(rng, 1, 2, table);
    CHECK_THROWS_AS(dl_pencil(pg, Ansatz<Rational>::one(2, table)), input_error);
}

TEST_CASE("ansatz recovery on the printed cubic pencils") {
    Rng rng(157);
    auto cheb = Basis<Rational>::chebyshev_t();
    MatPoly<Rational> p = random_matpoly<Rational>(rng, 2, 3, cheb, true);

    Ansatz<Rational> e2 =
        Ansatz<Rational>::from_descending(Vec<Rational>{{q(0), q(1), q(0)}}, cheb);
    Pencil<Rational> l = dl_pencil(p, e2);
    AnsatzRecovery<Rational> rec = recover_ansatz(l, p);
    REQUIRE(rec.member);
    CHECK(rec.v(0) == q(0));
    CHECK(rec.v(1) == q(1));
    CHECK(rec.v(2) == q(0));

    // zero pencil: member with the zero ansatz
    Pencil<Rational> z(BlockMat<Rational>::zero(3, 3, 2), BlockMat<Rational>::zero(3, 3, 2), cheb);
    AnsatzRecovery<Rational> zr = recover_ansatz(z, p);
    REQUIRE(zr.member);
    for (Index i = 0; i < 3; ++i) CHECK(zr.v(i) == q(0));

    // perturb one block: rejected with a witness
    Pencil<Rational> bad = l;
    bad.Y.block(1, 2)(0, 0) += q(1);
    AnsatzRecovery<Rational> br = recover_ansatz(bad, p);
    CHECK(!br.member);
    CHECK(br.witness_block_row >= 0);
}

TEST_CASE("eigenvalue exclusion: cubic Chebyshev conditions") {
    Rng rng(163);
    auto cheb = Basis<Rational>::chebyshev_t();

    // v = [0,0,1] (v = 1): linearization iff det P_3 != 0
    MatPoly<Rational> p = random_matpoly<Rational>(rng, 2, 3, cheb, true);
    Ansatz<Rational> one = Ansatz<Rational>::one(3, cheb);
    CHECK(exclusion_check(p, one).kind == Exclusion::Linearization);

    MatPoly<Rational> psing = p;
    psing.coeff(3) = Mat<Rational>::Zero(2, 2);
    psing.coeff(3)(0, 1) = q(1);  // nonzero but singular leading block
    if (!scalar_det(psing).is_zero())
        CHECK(exclusion_check(psing, one).kind == Exclusion::SharedInfiniteEigenvalue);

    // v = [0,1,0] (v(x) = x): needs det P(0) = det(P_0 - P_2) != 0 and det P_3 != 0
    Ansatz<Rational> e2 =
        Ansatz<Rational>::from_descending(Vec<Rational>{{q(0), q(1), q(0)}}, cheb);
    MatPoly<Rational> pzero = p;
    pzero.coeff(0) = p.coeff(2);  // forces det P(0) = 0
    if (!scalar_det(pzero).is_zero()) {
        auto ex = exclusion_check(pzero, e2);
        CHECK(ex.kind == Exclusion::SharedFiniteRoot);
        CHECK(ex.witness.degree() >= 1);
        CHECK(ex.witness.coeff(0) == q(0));  // witness divisible by x
    }
}

TEST_CASE("eigenvalue exclusion: constructed shared root and regularity behavior") {
    Rng rng(167);
    auto mono = Basis<Rational>::monomial();
    // P = U diag((x-1) m1(x), m2(x)) W with invertible U, W: det P has root 1
    Mat<Rational> u = random_invertible<Rational>(rng, 2);
    Mat<Rational> w = random_invertible<Rational>(rng, 2);
    // (x-1)(x-2) = x^2 - 3x + 2 and x^2 + 1
    MatPoly<Rational> d = MatPoly<Rational>::zero(2, 2, mono);
    d.coeff(0) << q(2), q(0), q(0), q(1);
    d.coeff(1) << q(-3), q(0), q(0), q(0);
    d.coeff(2) << q(1), q(0), q(0), q(1);
    MatPoly<Rational> p = MatPoly<Rational>::zero(2, 2, mono);
    for (Index i = 0; i <= 2; ++i) p.coeff(i) = u * d.coeff(i) * w;

    // v(x) = x - 1 shares the root 1 with det P
    Ansatz<Rational> v = Ansatz<Rational>::from_ascending({q(-1), q(1)}, mono);
    auto ex = exclusion_check(p, v);
    REQUIRE(ex.kind == Exclusion::SharedFiniteRoot);
    CHECK(ex.witness == Poly<Rational>({q(-1), q(1)}));

    // the pencil is singular for every lambda
    Pencil<Rational> l = dl_pencil(p, v);
    for (int t = 0; t < 3; ++t) {
        Rational lam = random_rational(rng);
        CHECK(is_zero(determinant<Rational>(l.eval(lam))));
    }

    // a coprime ansatz gives a linearization: nonsingular away from eigenvalues
    Ansatz<Rational> v2 = Ansatz<Rational>::from_ascending({q(-7), q(1)}, mono);
    if (exclusion_check(p, v2).kind == Exclusion::Linearization) {
        Pencil<Rational> l2 = dl_pencil(p, v2);
        Rational lam = q(9, 2);
        if (!is_zero(scalar_det(p).eval(lam)))
            CHECK(!is_zero(determinant<Rational>(l2.eval(lam))));
    }
}

TEST_CASE("exclusion_check validates its inputs") {
    Rng rng(173);
    auto mono = Basis<Rational>::monomial();
    MatPoly<Rational> p = random_matpoly<Rational>(rng, 2, 2, mono);
    Vec<Rational> zero_vec = Vec<Rational>::Zero(2);
    CHECK_THROWS_AS(exclusion_check(p, Ansatz<Rational>::from_descending(zero_vec, mono)),
                    input_error);
    // non-regular polynomial is rejected
    MatPoly<Rational> sing = MatPoly<Rational>::zero(2, 1, mono);
    sing.coeff(1)(0, 0) = q(1);  // det is identically zero
    CHECK_THROWS_AS(exclusion_check(sing, Ansatz<Rational>::one(1, mono)), input_error);
}

TEST_SUITE_END();
