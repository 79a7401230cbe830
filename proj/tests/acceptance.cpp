// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails.  Every tolerance and threshold is pinned here.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "bezlin/bdl.hpp"
#include "bezlin/conditioning.hpp"
#include "bezlin/randgen.hpp"

using namespace bezlin;

namespace {

Rational q(long long n, long long d = 1) { return Rational(BigInt(n), BigInt(d)); }

struct Criterion {
    int id;
    std::string label;
    double limit_seconds;
    std::function<void()> body;  // throws on failure
};

struct check_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void expect(bool ok, const std::string& what) {
    if (!ok) throw check_failure(what);
}

// ---------------------------------------------------------------------------
// 1. printed cubic Chebyshev pencils
// ---------------------------------------------------------------------------

Mat<Rational> assemble3(Index n, std::initializer_list<Mat<Rational>> blocks) {
    Mat<Rational> m(3 * n, 3 * n);
    Index i = 0;
    for (const auto& b : blocks) {
        m.block((i / 3) * n, (i % 3) * n, n, n) = b;
        ++i;
    }
    return m;
}

void criterion_table3() {
    Rng rng(20260810);
    auto cheb = Basis<Rational>::chebyshev_t();
    MatPoly<Rational> p = random_matpoly<Rational>(rng, 2, 3, cheb, true);
    const Index n = 2;
    const Mat<Rational>&p0 = p.coeff(0), &p1 = p.coeff(1), &p2 = p.coeff(2), &p3 = p.coeff(3);
    Mat<Rational> z = Mat<Rational>::Zero(n, n);

    struct Row {
        Vec<Rational> v;
        Mat<Rational> x, y;
    };
    std::vector<Row> rows;
    rows.push_back({Vec<Rational>{{q(1), q(0), q(0)}},
                    assemble3(n, {Mat<Rational>(q(2) * p3), z, z,
                                  z, Mat<Rational>(q(2) * p3 - q(2) * p1), Mat<Rational>(q(-2) * p0),
                                  z, Mat<Rational>(q(-2) * p0), Mat<Rational>(p3 - p1)}),
                    assemble3(n, {p2, Mat<Rational>(p1 - p3), p0,
                                  Mat<Rational>(p1 - p3), Mat<Rational>(q(2) * p0),
                                  Mat<Rational>(p1 - p3), p0, Mat<Rational>(p1 - p3), p0})});
    rows.push_back({Vec<Rational>{{q(0), q(1), q(0)}},
                    assemble3(n, {z, Mat<Rational>(q(2) * p3), z,
                                  Mat<Rational>(q(2) * p3), Mat<Rational>(q(2) * p2),
                                  Mat<Rational>(q(2) * p3), z, Mat<Rational>(q(2) * p3),
                                  Mat<Rational>(p2 - p0)}),
                    assemble3(n, {Mat<Rational>(-p3), z, Mat<Rational>(-p3),
                                  z, Mat<Rational>(p1 - q(3) * p3), Mat<Rational>(p0 - p2),
                                  Mat<Rational>(-p3), Mat<Rational>(p0 - p2), Mat<Rational>(-p3)})});
    rows.push_back({Vec<Rational>{{q(0), q(0), q(1)}},
                    assemble3(n, {z, z, Mat<Rational>(q(2) * p3),
                                  z, Mat<Rational>(q(4) * p3), Mat<Rational>(q(2) * p2),
                                  Mat<Rational>(q(2) * p3), Mat<Rational>(q(2) * p2),
                                  Mat<Rational>(p1 + p3)}),
                    assemble3(n, {z, Mat<Rational>(q(-2) * p3), z,
                                  Mat<Rational>(q(-2) * p3), Mat<Rational>(q(-2) * p2),
                                  Mat<Rational>(q(-2) * p3), z, Mat<Rational>(q(-2) * p3),
                                  Mat<Rational>(p0 - p2)})});

    for (std::size_t i = 0; i < rows.size(); ++i) {
        Ansatz<Rational> a = Ansatz<Rational>::from_descending(rows[i].v, cheb);
        Pencil<Rational> l = dl_pencil(p, a);
        expect(mat_eq<Rational>(l.X.a, rows[i].x), "X mismatch in table row " + std::to_string(i + 1));
        expect(mat_eq<Rational>(l.Y.a, rows[i].y), "Y mismatch in table row " + std::to_string(i + 1));
    }
}

// ---------------------------------------------------------------------------
// 2. GF(2) scalar Bezout fixtures
// ---------------------------------------------------------------------------

void criterion_gf2() {
    auto mono = Basis<GFp>::monomial();
    std::vector<GFp> p1{GFp(0, 2), GFp(0, 2), GFp(1, 2)};
    std::vector<GFp> p2{GFp(1, 2), GFp(1, 2)};

    BezoutResult<GFp> g2 = bezout_scalar<GFp>(p1, p2, 2, mono);
    Mat<GFp> want2(2, 2);
    want2 << GFp(1, 2), GFp(1, 2), GFp(1, 2), GFp(0, 2);
    expect(mat_eq<GFp>(g2.matrix.a, want2), "grade-2 matrix mismatch");
    expect(determinant<GFp>(g2.matrix.a) == GFp::one(2), "grade-2 determinant is not 1");

    BezoutResult<GFp> g3 = bezout_scalar<GFp>(p1, p2, 3, mono);
    auto kb = kernel_basis<GFp>(g3.matrix.a);
    expect(kb.size() == 1, "grade-3 kernel dimension is not 1");
    expect(kb[0](0) == GFp::one(2) && kb[0](1) == GFp::zero(2) && kb[0](2) == GFp::zero(2),
           "grade-3 kernel is not spanned by e1");
}

// ---------------------------------------------------------------------------
// 3. one-sided counterexamples and two-sided fixtures
// ---------------------------------------------------------------------------

MatPoly<Rational> mp2(const std::vector<std::array<long long, 4>>& coeffs) {
    Index g = static_cast<Index>(coeffs.size()) - 1;
    MatPoly<Rational> p = MatPoly<Rational>::zero(2, g, Basis<Rational>::monomial());
    for (Index i = 0; i <= g; ++i) {
        const auto& c = coeffs[static_cast<std::size_t>(i)];
        p.coeff(i) << q(c[0]), q(c[1]), q(c[2]), q(c[3]);
    }
    return p;
}

void criterion_counterexamples() {
    MatPoly<Rational> p1 = mp2({{0, 0, 0, -1}, {1, 0, 0, 1}});
    MatPoly<Rational> p2 = mp2({{-6, -1, 12, 1}, {1, 0, 0, 1}});
    Mat<Rational> want(2, 2);
    want << q(6), q(1), q(-12), q(-2);
    BezoutResult<Rational> one = bezout_onesided(p1, p2);
    expect(mat_eq<Rational>(one.matrix.a, want), "one-sided matrix mismatch (disjoint spectra)");
    expect(is_zero(determinant<Rational>(one.matrix.a)), "one-sided matrix should be singular");

    MatPoly<Rational> p3 = mp2({{0, 1, 0, 0}, {1, 0, 0, 1}});
    MatPoly<Rational> p4 = mp2({{0, 0, 0, 1}, {0, 1, 1, 0}});
    Mat<Rational> want2(2, 2);
    want2 << q(1), q(0), q(0), q(-1);
    BezoutResult<Rational> two = bezout_onesided(p3, p4);
    expect(mat_eq<Rational>(two.matrix.a, want2), "one-sided matrix mismatch (shared eigenpair)");
    expect(!is_zero(determinant<Rational>(two.matrix.a)),
           "one-sided matrix should be nonsingular");

    MatPoly<Rational> m1 = mp2({{6, 0, -12, 0}, {-3, 1, 14, 2}, {1, 0, 0, 1}});
    MatPoly<Rational> m2 = mp2({{0, 0, 0, 0}, {3, 2, 2, 0}, {1, 0, 0, 1}});
    BezoutResult<Rational> lt = bezout_lt(p1, p2, m1, m2);
    Mat<Rational> want4(4, 2);
    want4 << q(6), q(1), q(-12), q(-2), q(-6), q(0), q(12), q(0);
    expect(mat_eq<Rational>(lt.matrix.a, want4), "two-sided 4x2 matrix mismatch");
    expect(kernel_basis<Rational>(lt.matrix.a).empty(), "two-sided 4x2 kernel should be trivial");

    MatPoly<Rational> m1b = p3;
    MatPoly<Rational> m2b = mp2({{1, 0, 0, 0}, {0, 1, 1, 0}});
    BezoutResult<Rational> ltz = bezout_lt(p3, p4, m1b, m2b);
    expect(mat_is_zero<Rational>(ltz.matrix.a), "two-sided matrix should vanish");
    expect(kernel_basis<Rational>(ltz.matrix.a).size() == 2,
           "two-sided kernel dimension should be 2");
}

// ---------------------------------------------------------------------------
// 4. dual construction equivalence on 200 seeded instances
// ---------------------------------------------------------------------------

void criterion_dual_construction() {
    Rng rng(4001);
    for (int t = 0; t < 200; ++t) {
        Index n = 1 + rng.next_int(0, 2);
        Index k = 1 + rng.next_int(0, 3);
        bool cheb = t % 2 == 0;
        auto basis = cheb ? Basis<Rational>::chebyshev_t() : Basis<Rational>::monomial();
        MatPoly<Rational> p = random_matpoly<Rational>(rng, n, k, basis);
        Ansatz<Rational> a = random_ansatz<Rational>(rng, k, basis);

        Pencil<Rational> l = dl_pencil(p, a);
        Pencil<Rational> lb = dl_pencil_bezout(p, a);
        expect(l == lb, "recurrence and Bezout constructions differ");
        expect(l.X == block_transpose(l.X) && l.Y == block_transpose(l.Y),
               "pencil is not block symmetric");

        Mat<Rational> s = kron_vec<Rational>(a.v, coeff_row_desc(p));
        expect(mat_eq<Rational>(col_shift_sum(l.X, l.Y, basis).a, s),
               "column shifted-sum relation fails");
        Mat<Rational> t_mat(n * (k + 1), n * k);
        for (Index i = 0; i <= k; ++i)
            for (Index j = 0; j < k; ++j)
                t_mat.block(i * n, j * n, n, n) = a.v(j) * p.coeff(k - i);
        expect(mat_eq<Rational>(row_shift_sum(l.X, l.Y, basis).a, t_mat),
               "row shifted-sum relation fails");
    }
}

// ---------------------------------------------------------------------------
// 5. exclusion theorem behavioral check
// ---------------------------------------------------------------------------

void criterion_exclusion_behavior() {
    Rng rng(5001);
    auto mono = Basis<Rational>::monomial();
    auto cheb = Basis<Rational>::chebyshev_t();

    // 50 instances with a forced shared finite root
    for (int t = 0; t < 50; ++t) {
        const bool use_cheb = t % 2 == 0;
        const Basis<Rational>& basis = use_cheb ? cheb : mono;
        Index n = 2 + rng.next_int(0, 1);
        Index k = 2 + rng.next_int(0, 1);
        Rational root = q(rng.next_int(-3, 3));

        // P = U diag((x - root) m_1, m_2, ...) W in the monomial basis, then
        // converted to the working basis
        MatPoly<Rational> d = MatPoly<Rational>::zero(n, k, mono);
        {
            // first diagonal entry: (x - root) * monic of degree k-1
            Poly<Rational> m1({-root, q(1)});
            for (Index i = 1; i < k; ++i) m1 = m1 * Poly<Rational>({q(rng.next_int(-3, 3)), q(1)});
            for (int deg = 0; deg <= m1.degree(); ++deg) d.coeff(deg)(0, 0) = m1.coeff(deg);
            for (Index r = 1; r < n; ++r) {
                Poly<Rational> mr = Poly<Rational>::constant(q(1));
                for (Index i = 0; i < k; ++i)
                    mr = mr * Poly<Rational>({q(rng.next_int(1, 5)), q(1)});
                for (int deg = 0; deg <= mr.degree(); ++deg) d.coeff(deg)(r, r) = mr.coeff(deg);
            }
        }
        Mat<Rational> u = random_invertible<Rational>(rng, n);
        Mat<Rational> w = random_invertible<Rational>(rng, n);
        MatPoly<Rational> p_mono = MatPoly<Rational>::zero(n, k, mono);
        for (Index i = 0; i <= k; ++i) p_mono.coeff(i) = u * d.coeff(i) * w;
        MatPoly<Rational> p =
            use_cheb ? MatPoly<Rational>::from_monomial(p_mono, cheb) : p_mono;

        // v = (x - root) * random, expressed in the working basis
        Poly<Rational> vm({-root, q(1)});
        if (k >= 3 && rng.next_int(0, 1) == 1)
            vm = vm * Poly<Rational>({q(rng.next_int(-2, 2)), q(1)});
        MatPoly<Rational> v_scalar = MatPoly<Rational>::zero(1, k - 1, mono);
        for (int deg = 0; deg <= vm.degree(); ++deg) v_scalar.coeff(deg)(0, 0) = vm.coeff(deg);
        MatPoly<Rational> v_conv =
            use_cheb ? MatPoly<Rational>::from_monomial(v_scalar, cheb) : v_scalar;
        std::vector<Rational> asc;
        for (Index i = 0; i <= k - 1; ++i) asc.push_back(v_conv.coeff(i)(0, 0));
        Ansatz<Rational> a = Ansatz<Rational>::from_ascending(asc, p.basis());

        expect(exclusion_check(p, a).kind == Exclusion::SharedFiniteRoot,
               "constructed instance does not report a shared finite root");
        Pencil<Rational> l = dl_pencil(p, a);
        for (int s = 0; s < 3; ++s) {
            Rational lam = q(rng.next_int(-40, 40), rng.next_int(1, 7));
            expect(is_zero(determinant<Rational>(l.eval(lam))),
                   "pencil with shared root is nonsingular at a random point");
        }
    }

    // 50 instances with no shared root: nonsingular at a non-eigenvalue
    int done = 0;
    while (done < 50) {
        const bool use_cheb = done % 2 == 0;
        const Basis<Rational>& basis = use_cheb ? cheb : mono;
        Index n = 1 + rng.next_int(0, 2);
        Index k = 1 + rng.next_int(0, 3);
        MatPoly<Rational> p = random_matpoly<Rational>(rng, n, k, basis);
        Ansatz<Rational> a = random_ansatz<Rational>(rng, k, basis);
        Poly<Rational> detp = scalar_det(p);
        if (detp.is_zero()) continue;
        if (exclusion_check(p, a).kind != Exclusion::Linearization) continue;

        Pencil<Rational> l = dl_pencil(p, a);
        Rational lam;
        do {
            lam = q(rng.next_int(-60, 60), rng.next_int(1, 5));
        } while (is_zero(detp.eval(lam)));
        expect(!is_zero(determinant<Rational>(l.eval(lam))),
               "linearization is singular away from the eigenvalues");
        ++done;
    }
}

// ---------------------------------------------------------------------------
// 6. Barnett and the beyond-space triple agreement
// ---------------------------------------------------------------------------

void criterion_bdl_triple() {
    Rng rng(6001);
    auto mono = Basis<Rational>::monomial();
    for (int t = 0; t < 100; ++t) {
        Index n = 1 + rng.next_int(0, 1);
        Index k = 1 + rng.next_int(0, 2);
        MatPoly<Rational> p = random_monic_matpoly<Rational>(rng, n, k, mono);
        int dv = static_cast<int>(rng.next_int(0, 2 * k));
        std::vector<Rational> vc;
        for (int i = 0; i <= dv; ++i) vc.push_back(random_rational(rng, 4, 3));
        Poly<Rational> v(vc);
        if (v.is_zero()) v = Poly<Rational>({q(1)});

        // bdl_pencil computes DL(P,1) v(C1), v(C2) DL(P,1) and the Bezoutian
        // route, and raises internal_error if any pair disagrees.
        BdlPencil<Rational> b = bdl_pencil(p, v);

        expect(mul(p, b.right_ansatz) == mul(b.left_ansatz, p), "P Q = S P fails");
        expect(b.left_ansatz - b.right_ansatz ==
                   mul(b.quotient, p) - mul(p, b.quotient),
               "S - Q = [A, P] fails");

        if (v.degree() <= static_cast<int>(k) - 1) {
            std::vector<Rational> asc = v.coeffs();
            asc.resize(static_cast<std::size_t>(k), q(0));
            Pencil<Rational> direct = dl_pencil(p, Ansatz<Rational>::from_ascending(asc, mono));
            expect(b.pencil == direct, "low-degree v does not reduce to the ansatz-vector pencil");
        }
    }
}

// ---------------------------------------------------------------------------
// 7. division correctness
// ---------------------------------------------------------------------------

void criterion_division() {
    Rng rng(7001);
    auto mono = Basis<Rational>::monomial();
    for (int t = 0; t < 200; ++t) {
        Index n = 1 + rng.next_int(0, 1);
        Index k = 1 + rng.next_int(0, 2);
        Index dv = rng.next_int(0, 3 * k);
        MatPoly<Rational> p = random_matpoly<Rational>(rng, n, k, mono, true);
        MatPoly<Rational> v = random_matpoly<Rational>(rng, n, dv, mono);
        Side side = t % 2 == 0 ? Side::Left : Side::Right;
        DivisionResult<Rational> d = matdiv(v, p, side);
        expect(d.remainder.grade() == k - 1, "remainder grade is not k-1");
        MatPoly<Rational> back =
            side == Side::Left ? mul(d.quotient, p) + d.remainder : mul(p, d.quotient) + d.remainder;
        expect(back == v, "multiply-back identity fails");
    }
}

// ---------------------------------------------------------------------------
// 8. block Hankel inverses
// ---------------------------------------------------------------------------

void criterion_hankel() {
    Rng rng(8001);
    auto mono = Basis<Rational>::monomial();
    int done = 0;
    while (done < 50) {
        Index n = 1 + rng.next_int(0, 1);
        Index k = 2 + rng.next_int(0, 1);
        MatPoly<Rational> p = random_monic_matpoly<Rational>(rng, n, k, mono);
        bool beyond = done % 2 == 1;
        std::vector<Rational> xk(static_cast<std::size_t>(k) + 1, q(0));
        xk.back() = q(1);  // v = x^k
        Pencil<Rational> l = beyond ? bdl_pencil(p, Poly<Rational>(xk)).pencil
                                    : dl_pencil(p, Ansatz<Rational>::one(k, mono));
        if (is_zero(determinant<Rational>(l.X.a)) || is_zero(determinant<Rational>(l.Y.a)))
            continue;
        expect(hankel_inverse_check(l.X), "X inverse is not block Hankel");
        expect(hankel_inverse_check(l.Y), "Y inverse is not block Hankel");
        ++done;
    }
}

// ---------------------------------------------------------------------------
// 9. structured pencils
// ---------------------------------------------------------------------------

using GR = GaussianRational;

Mat<GR> herm(Rng& rng, Index n) {
    Mat<GR> a = random_matrix<GR>(rng, n, n);
    return Mat<GR>(a + conj_transpose<GR>(a));
}
Mat<GR> skew_herm(Rng& rng, Index n) {
    Mat<GR> a = random_matrix<GR>(rng, n, n);
    return Mat<GR>(a - conj_transpose<GR>(a));
}
Mat<GR> symm(Rng& rng, Index n) {
    Mat<GR> a = random_matrix<GR>(rng, n, n);
    return Mat<GR>(a + a.transpose());
}
Mat<GR> skew_symm(Rng& rng, Index n) {
    Mat<GR> a = random_matrix<GR>(rng, n, n);
    return Mat<GR>(a - a.transpose());
}

void criterion_structured() {
    Rng rng(9001);
    auto mono = Basis<GR>::monomial();
    const Index n = 2, k = 2;
    auto rr = [&] { return GR{random_rational(rng), Rational(0)}; };

    auto draw = [&](Structure st) {
        for (int attempt = 0; attempt < 256; ++attempt) {
            MatPoly<GR> p = MatPoly<GR>::zero(n, k, mono);
            Poly<GR> v;
            switch (st) {
                case Structure::Hermitian:
                    for (Index i = 0; i <= k; ++i) p.coeff(i) = herm(rng, n);
                    v = Poly<GR>({rr(), rr(), rr(), rr()});
                    break;
                case Structure::Symmetric:
                    for (Index i = 0; i <= k; ++i) p.coeff(i) = symm(rng, n);
                    v = Poly<GR>({random_gaussian(rng), random_gaussian(rng), random_gaussian(rng)});
                    break;
                case Structure::StarEven:
                    for (Index i = 0; i <= k; ++i)
                        p.coeff(i) = i % 2 == 0 ? herm(rng, n) : skew_herm(rng, n);
                    v = Poly<GR>({rr(), GR{Rational(0), random_rational(rng)}, rr()});
                    break;
                case Structure::TEven:
                    for (Index i = 0; i <= k; ++i)
                        p.coeff(i) = i % 2 == 0 ? symm(rng, n) : skew_symm(rng, n);
                    v = Poly<GR>({random_gaussian(rng), GR(0), random_gaussian(rng)});
                    break;
                case Structure::StarPalindromic: {
                    Mat<GR> p2 = random_matrix<GR>(rng, n, n);
                    p.coeff(2) = p2;
                    p.coeff(0) = conj_transpose<GR>(p2);
                    p.coeff(1) = herm(rng, n);
                    GR c = random_gaussian(rng);
                    v = Poly<GR>({conj_of(c), c});
                    break;
                }
                case Structure::TPalindromic: {
                    Mat<GR> p2 = random_matrix<GR>(rng, n, n);
                    p.coeff(2) = p2;
                    p.coeff(0) = Mat<GR>(p2.transpose());
                    p.coeff(1) = symm(rng, n);
                    GR c = random_gaussian(rng);
                    v = Poly<GR>({c, c});
                    break;
                }
                default:
                    throw check_failure("unhandled structure draw");
            }
            if (is_zero(determinant<GR>(p.coeff(k))) || v.is_zero()) continue;
            return std::pair<MatPoly<GR>, Poly<GR>>(std::move(p), std::move(v));
        }
        throw check_failure("could not draw a structured instance");
    };

    for (Structure st : {Structure::Hermitian, Structure::Symmetric, Structure::StarEven,
                         Structure::TEven, Structure::StarPalindromic, Structure::TPalindromic}) {
        for (int t = 0; t < 20; ++t) {
            auto [p, v] = draw(st);
            // structured_pencil verifies the output structure exactly and
            // raises internal_error when the promise fails
            structured_pencil(p, v, st);
        }
    }
}

// ---------------------------------------------------------------------------
// 10. conditioning bound
// ---------------------------------------------------------------------------

void criterion_conditioning_bound() {
    Rng rng(10001);
    auto cheb = Basis<double>::chebyshev_t();
    int instances = 0;
    while (instances < 100) {
        Index n = 1 + rng.next_int(0, 2);
        Index k = 2 + rng.next_int(0, 2);
        MatPoly<double> p = random_matpoly<double>(rng, n, k, cheb);
        InstanceReport rep = bound_report_instance(p);
        expect(rep.l_norm_ok, "pencil norm bound 16 n (e-1) k^3 |P| violated");
        for (const auto& e : rep.eigs)
            if (e.in_interval)
                expect(e.ok, "rhat bound 16 n (e-1) k^4 violated at lambda = " +
                                 std::to_string(e.lambda.real()));
        expect(rep.pass, "instance report failed");
        ++instances;
    }
}

// ---------------------------------------------------------------------------
// 11. first-order perturbation
// ---------------------------------------------------------------------------

void criterion_perturbation() {
    Rng rng(11001);
    auto cheb = Basis<double>::chebyshev_t();
    int done = 0, attempts = 0;
    while (done < 20) {
        expect(++attempts < 200, "could not draw 20 instances with usable eigenvalues");
        Index n = 1 + rng.next_int(0, 1);
        Index k = 2 + rng.next_int(0, 1);
        MatPoly<double> p = random_matpoly<double>(rng, n, k, cheb);
        std::mt19937_64 eng(rng.next_u64());
        PerturbationProbe probe;
        try {
            probe = perturbation_probe(p, eng, 1e-6);
        } catch (const error&) {
            continue;  // no well-separated eigenvalue near [-1, 1]
        }
        expect(probe.ok, "first-order prediction misses by " + std::to_string(probe.err) +
                             " > " + std::to_string(probe.tol));
        expect(probe.limit_identity_ok,
               "limit identity relative error " + std::to_string(probe.limit_identity_rel_err));
        ++done;
    }
}

// ---------------------------------------------------------------------------
// 12. correspondence tables
// ---------------------------------------------------------------------------

void criterion_tables() {
    Rng rng(12001);
    for (int rep = 0; rep < 3; ++rep) {
        for (bool cheb : {false, true}) {
            auto basis = cheb ? Basis<Rational>::chebyshev_t() : Basis<Rational>::monomial();
            Index k = 3, n = 2;
            BlockMat<Rational> x(random_matrix<Rational>(rng, n * k, n * k), k, k, n);
            BiMatPoly<Rational> f = phi_map(x, basis);
            Rational lam = random_rational(rng), mu = random_rational(rng);
            Vec<Rational> v = random_matrix<Rational>(rng, n, 1);
            Vec<Rational> w = random_matrix<Rational>(rng, n, 1);
            Mat<Rational> m = mult_matrix<Rational>(basis, k, n);

            // row 1: X itself evaluates through phi
            expect(mat_eq<Rational>(phi_unmap(f).a, x.a), "phi round trip fails");
            // row 2: X M ~ F x
            expect(phi_map(BlockMat<Rational>(Mat<Rational>(x.a * m), k, k + 1, n), basis) ==
                       f.times_x(),
                   "X M does not match F x");
            // row 3: M^B X ~ y F
            expect(phi_map(BlockMat<Rational>(Mat<Rational>(m.transpose() * x.a), k + 1, k, n),
                           basis) == f.times_y(),
                   "M^B X does not match y F");
            // rows 4-7: evaluations
            auto phis_y = basis.phi_values(mu, k - 1);
            Mat<Rational> stack = eval_right(x, basis, lam);
            Mat<Rational> acc = Mat<Rational>::Zero(n, n);
            for (Index i = 0; i < k; ++i)
                acc += phis_y[static_cast<std::size_t>(k - 1 - i)] * stack.block(i * n, 0, n, n);
            expect(mat_eq<Rational>(acc, f.eval(lam, mu)), "evaluation at x = lambda fails");

            Mat<Rational> xv =
                x.a * kron_vec<Rational>(lambda_vector<Rational>(basis, k, lam), Mat<Rational>(v));
            Mat<Rational> accv = Mat<Rational>::Zero(n, 1);
            for (Index i = 0; i < k; ++i)
                accv += phis_y[static_cast<std::size_t>(k - 1 - i)] * xv.block(i * n, 0, n, 1);
            expect(mat_eq<Rational>(accv, Mat<Rational>(f.eval(lam, mu) * v)),
                   "X (Lambda kron v) fails");

            Mat<Rational> row = eval_left(x, basis, mu, w);
            auto phis_x = basis.phi_values(lam, k - 1);
            Mat<Rational> accw = Mat<Rational>::Zero(1, n);
            for (Index j = 0; j < k; ++j)
                accw += phis_x[static_cast<std::size_t>(k - 1 - j)] * row.block(0, j * n, 1, n);
            expect(mat_eq<Rational>(accw, Mat<Rational>(w.transpose() * f.eval(lam, mu))),
                   "(Lambda^T kron w^T) X fails");

            Rational sandwich =
                Mat<Rational>(row * kron_vec<Rational>(lambda_vector<Rational>(basis, k, lam),
                                                       Mat<Rational>(v)))(0, 0);
            expect(sandwich == Mat<Rational>(w.transpose() * f.eval(lam, mu) * v)(0, 0),
                   "bilinear sandwich fails");

            // rows 8-9: block transpose and transpose
            expect(mat_eq<Rational>(phi_map(block_transpose(x), basis).eval(lam, mu),
                                    f.eval(mu, lam)),
                   "block transpose swap fails");
            expect(mat_eq<Rational>(
                       phi_map(BlockMat<Rational>(Mat<Rational>(x.a.transpose()), k, k, n), basis)
                           .eval(lam, mu),
                       Mat<Rational>(f.eval(mu, lam).transpose())),
                   "transpose row fails");

            // alternating rows: Sigma on both sides
            expect(mat_eq<Rational>(phi_map(apply_sigma(x, basis, Side::Left), basis).eval(lam, mu),
                                    f.eval(lam, -mu)),
                   "Sigma X fails");
            expect(
                mat_eq<Rational>(phi_map(apply_sigma(x, basis, Side::Right), basis).eval(lam, mu),
                                 f.eval(-lam, mu)),
                "X Sigma fails");
        }

        // row 10: conjugate transpose over the gaussian rationals
        {
            auto basis = Basis<GR>::monomial();
            Index k = 2, n = 2;
            BlockMat<GR> x(random_matrix<GR>(rng, n * k, n * k), k, k, n);
            BiMatPoly<GR> f = phi_map(x, basis);
            BlockMat<GR> xs(conj_transpose<GR>(x.a), k, k, n);
            BiMatPoly<GR> fs = phi_map(xs, basis);
            for (Index i = 0; i < k; ++i)
                for (Index j = 0; j < k; ++j)
                    expect(mat_eq<GR>(Mat<GR>(fs.coeff(i, j)),
                                      conj_transpose<GR>(Mat<GR>(f.coeff(j, i)))),
                           "conjugate transpose row fails");
        }

        // monomial-only rows: R on both sides
        {
            auto basis = Basis<Rational>::monomial();
            Index k = 3, n = 2;
            BlockMat<Rational> x(random_matrix<Rational>(rng, n * k, n * k), k, k, n);
            BiMatPoly<Rational> f = phi_map(x, basis);
            Rational xv = q(3, 2), yv = q(-5, 7);
            Rational yk = yv * yv, xk = xv * xv;  // k-1 = 2
            expect(mat_eq<Rational>(phi_map(apply_flip(x, basis, Side::Left), basis).eval(xv, yv),
                                    Mat<Rational>(yk * f.eval(xv, q(1) / yv))),
                   "R X fails");
            expect(mat_eq<Rational>(phi_map(apply_flip(x, basis, Side::Right), basis).eval(xv, yv),
                                    Mat<Rational>(xk * f.eval(q(1) / xv, yv))),
                   "X R fails");
        }
    }
}

}  // namespace

int main() {
    std::vector<Criterion> checks = {
        {1, "printed cubic Chebyshev pencils, unit ansatz vectors, exact", 1.0, criterion_table3},
        {2, "GF(2) scalar Bezout matrices at grades 2 and 3, exact", 0.1, criterion_gf2},
        {3, "one-sided counterexamples and two-sided kernel fixtures, exact", 0.1,
         criterion_counterexamples},
        {4, "dual construction equivalence on 200 seeded instances", 30.0,
         criterion_dual_construction},
        {5, "eigenvalue exclusion behavior on 50 + 50 constructed instances", 30.0,
         criterion_exclusion_behavior},
        {6, "companion/Bezout triple agreement on 100 monic instances", 60.0, criterion_bdl_triple},
        {7, "division multiply-back identity on 200 instances", 10.0, criterion_division},
        {8, "block Hankel inverses on 50 nonsingular instances", 30.0, criterion_hankel},
        {9, "structure-preserving pencils, 6 structures x 20 instances", 60.0,
         criterion_structured},
        {10, "conditioning bounds on 100 random Chebyshev instances", 120.0,
         criterion_conditioning_bound},
        {11, "first-order perturbation and limit identity on 20 instances", 60.0,
         criterion_perturbation},
        {12, "correspondence tables, all rows, randomized exact", 10.0, criterion_tables},
    };

    int failures = 0;
    for (const auto& c : checks) {
        auto start = std::chrono::steady_clock::now();
        std::string verdict = "PASS";
        std::string detail;
        try {
            c.body();
        } catch (const std::exception& e) {
            verdict = "FAIL";
            detail = e.what();
            ++failures;
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (verdict == "PASS" && secs > c.limit_seconds) {
            verdict = "FAIL";
            detail = "time limit " + std::to_string(c.limit_seconds) + " s exceeded";
            ++failures;
        }
        std::printf("criterion %2d %s (%6.2f s, limit %g s): %s%s%s\n", c.id, verdict.c_str(),
                    secs, c.limit_seconds, c.label.c_str(), detail.empty() ? "" : " -- ",
                    detail.c_str());
    }
    if (failures > 0) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all %zu criteria passed\n", checks.size());
    return 0;
}
