#ifndef BEZLIN_CONDITIONING_HPP
#define BEZLIN_CONDITIONING_HPP

/*
 * Floating-point conditioning analysis for Chebyshev-basis matrix
 * polynomials on [-1, 1].  For the ansatz v = 1 the growth of the eigenvalue
 * condition number when passing from P to its block-symmetric linearization
 *
 *   rhat = (1/|v(lam)|) (||yhat|| ||L(.)|| ||xhat||) / (||y|| ||P(.)|| ||x||)
 *
 * is bounded by 16 n (e-1) k^4 for every eigenvalue in [-1, 1], and
 * ||L(.)|| <= 16 n (e-1) k^3 ||P(.)|| ||v(.)||.  This module evaluates the
 * ratio, the bounds, the first-order perturbation expansion of simple
 * eigenvalues, and the limit identity  yhat* X xhat = v(lam) y* P'(lam) x.
 */

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "bezlin/dl.hpp"

namespace bezlin {

using cd = std::complex<double>;
using MatC = Eigen::MatrixXcd;
using VecC = Eigen::VectorXcd;

namespace detail {

inline MatC to_complex(const Mat<double>& m) { return m.cast<cd>(); }
inline MatC to_complex(const Mat<cd>& m) { return m; }

inline double spectral_norm(const MatC& m) {
    if (m.rows() == 1 && m.cols() == 1) return std::abs(m(0, 0));
    Eigen::JacobiSVD<MatC> svd(m);
    return svd.singularValues()(0);
}

}  // namespace detail

/// max over [-1, 1] of the spectral norm, on a Chebyshev point grid of
/// max(50, 10 k^2) points (the bound's Lipschitz window has width k^-2).
template <class S>
double poly_norm(const MatPoly<S>& p) {
    static_assert(!is_exact_field_v<S>, "poly_norm is a floating-point operation");
    const Index k = p.grade();
    const Index m = std::max<Index>(50, 10 * k * k);
    double best = 0;
    for (Index j = 0; j < m; ++j) {
        double x = std::cos(M_PI * static_cast<double>(j) / static_cast<double>(m - 1));
        best = std::max(best, detail::spectral_norm(detail::to_complex(p.eval(S(x)))));
    }
    return best;
}

/// ||x L(.)|| = max over [-1,1] of ||x X + Y||; the norm is convex in x so
/// the endpoint-including grid is exact up to rounding.
template <class S>
double pencil_norm(const Pencil<S>& l) {
    MatC x = detail::to_complex(l.X.a), y = detail::to_complex(l.Y.a);
    double best = 0;
    const int m = 50;
    for (int j = 0; j < m; ++j) {
        double t = std::cos(M_PI * j / static_cast<double>(m - 1));
        best = std::max(best, detail::spectral_norm(t * x + y));
    }
    return best;
}

// ---------------------------------------------------------------------------
// Dense eigensolver for pencils
// ---------------------------------------------------------------------------

struct EigenTriple {
    cd lambda;                 // eigenvalue (infinity encoded by finite=false)
    bool finite = true;
    VecC right, left;          // pencil-level eigenvectors, length nk
    double residual_right = 0; // ||L(lam) xhat|| / (scale ||xhat||)
    double residual_left = 0;
    bool simple = true;
};

namespace detail {

// Standard-eigenproblem reduction A = -B^{-1} C with left eigenvectors from
// the inverse of the right eigenvector matrix.
inline void eig_via(const MatC& b_mat, const MatC& c_mat, std::vector<cd>& lams,
                    std::vector<VecC>& rights, std::vector<VecC>& lefts) {
    Eigen::PartialPivLU<MatC> lu(b_mat);
    MatC a = lu.solve(-c_mat);
    Eigen::ComplexEigenSolver<MatC> ces(a, true);
    if (ces.info() != Eigen::Success) throw error("eigensolve: dense eigensolver failed");
    MatC v = ces.eigenvectors();
    MatC w = v.inverse();  // rows: left eigenvectors of a
    const Index m = a.rows();
    for (Index i = 0; i < m; ++i) {
        lams.push_back(ces.eigenvalues()(i));
        rights.push_back(v.col(i));
        // yhat* (lam B + C) = 0  <=>  B* yhat is a left eigenvector of A
        VecC wi = w.row(i).adjoint();
        lefts.push_back(lu.adjoint().solve(wi));
    }
}

}  // namespace detail

/// All nk eigenvalues of x X + Y with right/left eigenvectors, via reduction
/// to a standard eigenproblem on whichever of X, Y is better conditioned
/// (eigenvalues of the reversed pencil are reciprocals).  Residual-checked.
template <class S>
std::vector<EigenTriple> eigensolve(const Pencil<S>& l) {
    MatC x = detail::to_complex(l.X.a), y = detail::to_complex(l.Y.a);
    const Index m = x.rows();
    Eigen::PartialPivLU<MatC> lux(x), luy(y);
    double rx = lux.rcond(), ry = luy.rcond();
    if (!(rx > 0) && !(ry > 0)) throw error("eigensolve: both pencil coefficients are singular");

    std::vector<cd> lams;
    std::vector<VecC> rights, lefts;
    bool reversed = ry > rx;
    if (!reversed)
        detail::eig_via(x, y, lams, rights, lefts);
    else
        detail::eig_via(y, x, lams, rights, lefts);

    double nx = x.norm(), ny = y.norm();
    std::vector<EigenTriple> out;
    for (std::size_t i = 0; i < lams.size(); ++i) {
        EigenTriple t;
        if (reversed) {
            cd mu = lams[i];
            if (std::abs(mu) < 1e-300) {
                t.finite = false;
                t.lambda = std::numeric_limits<double>::infinity();
            } else {
                t.lambda = cd(1.0) / mu;
            }
        } else {
            t.lambda = lams[i];
        }
        t.right = rights[i].normalized();
        t.left = lefts[i].normalized();
        if (t.finite) {
            double scale = std::abs(t.lambda) * nx + ny;
            t.residual_right = ((t.lambda * x + y) * t.right).norm() / scale;
            t.residual_left = ((t.left.adjoint() * (t.lambda * x + y))).norm() / scale;
        }
        out.push_back(std::move(t));
    }
    // simplicity flags from pairwise separation
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (!out[i].finite) continue;
        for (std::size_t j = 0; j < out.size(); ++j) {
            if (i == j || !out[j].finite) continue;
            if (std::abs(out[i].lambda - out[j].lambda) <
                1e-8 * std::max(1.0, std::abs(out[i].lambda))) {
                out[i].simple = false;
                break;
            }
        }
    }
    (void)m;
    return out;
}

// ---------------------------------------------------------------------------
// Eigenvectors of P itself, and the conditioning ratio
// ---------------------------------------------------------------------------

struct PEigenPair {
    cd lambda;
    VecC x, y;        // right/left eigenvectors of P(lambda), length n
    double residual;  // ||P(lam) x|| / (||P(.)|| ||x||)
};

/// Right/left null vectors of P(lambda) from the smallest singular pair.
template <class S>
PEigenPair p_eigenpair(const MatPoly<S>& p, cd lambda, double pnorm) {
    MatC pm(p.n(), p.n());
    {
        // evaluate P at a complex point through the basis recurrence
        MatPoly<cd> pc = MatPoly<cd>::zero(p.n(), p.grade(), Basis<cd>::chebyshev_t());
        if (p.basis().kind() != BasisKind::ChebyshevT)
            throw input_error("p_eigenpair: Chebyshev basis expected");
        for (Index i = 0; i <= p.grade(); ++i) pc.coeff(i) = detail::to_complex(p.coeff(i));
        pm = pc.eval(lambda);
    }
    Eigen::JacobiSVD<MatC> svd(pm, Eigen::ComputeFullU | Eigen::ComputeFullV);
    PEigenPair out;
    out.lambda = lambda;
    out.x = svd.matrixV().col(p.n() - 1);
    out.y = svd.matrixU().col(p.n() - 1);
    out.residual = svd.singularValues()(p.n() - 1) / std::max(pnorm, 1e-300);
    return out;
}

/// Chebyshev-basis derivative P'(lambda) via T_j' = j U_{j-1}.
template <class S>
MatC cheb_derivative_eval(const MatPoly<S>& p, cd lambda) {
    if (p.basis().kind() != BasisKind::ChebyshevT)
        throw input_error("cheb_derivative_eval: Chebyshev basis expected");
    MatC acc = MatC::Zero(p.n(), p.n());
    cd u_prev = 0.0, u = 1.0;  // U_{-1}, U_0
    for (Index j = 1; j <= p.grade(); ++j) {
        acc += static_cast<double>(j) * u * detail::to_complex(p.coeff(j));
        cd u_next = 2.0 * lambda * u - u_prev;
        u_prev = u;
        u = u_next;
    }
    return acc;
}

/// Lambda(lambda) for the Chebyshev basis, descending, complex.
inline VecC cheb_lambda_vec(Index k, cd lambda) {
    VecC v(k);
    cd t_prev = 1.0, t = lambda;  // T_0, T_1
    v(k - 1) = t_prev;
    for (Index j = 1; j < k; ++j) {
        v(k - 1 - j) = t;
        cd t_next = 2.0 * lambda * t - t_prev;
        t_prev = t;
        t = t_next;
    }
    return v;
}

inline VecC kron_vec_c(const VecC& a, const VecC& b) {
    VecC r(a.size() * b.size());
    for (Index i = 0; i < a.size(); ++i) r.segment(i * b.size(), b.size()) = a(i) * b;
    return r;
}

/// Conditioning ratio rhat for one eigenvalue, with xhat = Lambda kron x and
/// yhat = conj(Lambda) kron y.  Undefined (input_error) when v(lambda) = 0.
template <class S>
double cond_ratio(const MatPoly<S>& p, const Ansatz<S>& v, const PEigenPair& t, double p_norm,
                  double l_norm) {
    const Index k = p.grade();
    VecC lam = cheb_lambda_vec(k, t.lambda);
    // v(lambda) through the same recurrence
    cd vlam = 0.0;
    for (Index i = 0; i < k; ++i) vlam += cd(static_cast<double>(v.v(i)), 0.0) * lam(i);
    if (std::abs(vlam) < 1e-14)
        throw input_error("cond_ratio: v(lambda) = 0, the ratio is undefined (exclusion violated)");
    double xh = kron_vec_c(lam, t.x).norm();
    double yh = kron_vec_c(lam.conjugate(), t.y).norm();
    return (1.0 / std::abs(vlam)) * (yh * l_norm * xh) / (t.y.norm() * p_norm * t.x.norm());
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

struct EigReport {
    cd lambda;
    bool in_interval = false;
    double rhat = 0, rhat_bound = 0;
    double residual = 0;
    bool ok = true;
};

struct InstanceReport {
    Index n = 0, k = 0;
    double p_norm = 0, l_norm = 0, l_norm_bound = 0;
    bool l_norm_ok = false;
    std::vector<EigReport> eigs;
    bool pass = false;
};

struct ConditioningReport {
    std::uint64_t seed = 0;
    std::vector<InstanceReport> instances;
    bool pass = true;
};

/// Bound checks for one Chebyshev instance with ansatz v = 1: the pencil
/// norm inequality and rhat <= 16 n (e-1) k^4 for every eigenvalue in
/// [-1, 1].  Eigenvalues outside the interval are reported but not checked.
inline InstanceReport bound_report_instance(const MatPoly<double>& p) {
    const Index n = p.n(), k = p.grade();
    InstanceReport rep;
    rep.n = n;
    rep.k = k;
    Ansatz<double> one = Ansatz<double>::one(k, p.basis());
    Pencil<double> l = dl_pencil(p, one);
    rep.p_norm = poly_norm(p);
    rep.l_norm = pencil_norm(l);
    const double e1 = std::exp(1.0) - 1.0;
    rep.l_norm_bound = 16.0 * static_cast<double>(n) * e1 * std::pow(static_cast<double>(k), 3) *
                       rep.p_norm;  // ||v(.)|| = 1
    rep.l_norm_ok = rep.l_norm <= rep.l_norm_bound * (1 + 1e-12);

    const double rhat_bound =
        16.0 * static_cast<double>(n) * e1 * std::pow(static_cast<double>(k), 4);
    bool all_ok = rep.l_norm_ok;
    for (const EigenTriple& t : eigensolve(l)) {
        if (!t.finite) continue;
        EigReport er;
        er.lambda = t.lambda;
        er.residual = t.residual_right;
        er.in_interval =
            std::abs(t.lambda.imag()) <= 1e-8 && std::abs(t.lambda.real()) <= 1.0 + 1e-12;
        er.rhat_bound = rhat_bound;
        if (er.in_interval) {
            cd lam(t.lambda.real(), 0.0);
            PEigenPair pe = p_eigenpair(p, lam, rep.p_norm);
            er.rhat = cond_ratio(p, one, pe, rep.p_norm, rep.l_norm);
            er.ok = er.rhat <= rhat_bound * (1 + 1e-12);
            all_ok = all_ok && er.ok;
        }
        rep.eigs.push_back(er);
    }
    rep.pass = all_ok;
    return rep;
}

/// Full report: the given instance plus `trials` random instances of the
/// same shape (entries uniform in [-1, 1]), deterministically seeded.
inline ConditioningReport bound_report(const MatPoly<double>& p, int trials,
                                       std::uint64_t seed) {
    ConditioningReport report;
    report.seed = seed;
    report.instances.push_back(bound_report_instance(p));
    std::mt19937_64 eng(seed);
    for (int t = 0; t < trials; ++t) {
        MatPoly<double> q = MatPoly<double>::zero(p.n(), p.grade(), p.basis());
        for (Index i = 0; i <= p.grade(); ++i)
            for (Index r = 0; r < p.n(); ++r)
                for (Index c = 0; c < p.n(); ++c)
                    q.coeff(i)(r, c) =
                        -1.0 + 2.0 * (static_cast<double>(eng() >> 11) * 0x1.0p-53);
        report.instances.push_back(bound_report_instance(q));
    }
    for (const auto& inst : report.instances) report.pass = report.pass && inst.pass;
    return report;
}

// ---------------------------------------------------------------------------
// First-order perturbation probe
// ---------------------------------------------------------------------------

struct PerturbationProbe {
    cd lambda;           // unperturbed simple eigenvalue
    cd predicted;        // first-order prediction for the perturbed one
    cd actual;           // recomputed eigenvalue of P + dP
    double err = 0;      // |actual - predicted|
    double tol = 0;      // 100 eps^2 * scale
    double scale = 1;    // recorded problem-scale factor
    double eps = 0;
    bool ok = false;
    double limit_identity_rel_err = 0;  // yhat* X xhat vs v(lam) y* P'(lam) x
    bool limit_identity_ok = false;
};

/// Checks the first-order expansion
///   lambda(P + dP) = lambda - (y* dP(lam) x)/(y* P'(lam) x) + O(||dP||^2)
/// on a random direction with ||dP(.)|| = eps, plus the limit identity used
/// to collapse the linearized denominator.
inline PerturbationProbe perturbation_probe(const MatPoly<double>& p, std::mt19937_64& rng,
                                            double eps) {
    const Index n = p.n(), k = p.grade();
    PerturbationProbe probe;
    probe.eps = eps;

    Ansatz<double> one = Ansatz<double>::one(k, p.basis());
    Pencil<double> l = dl_pencil(p, one);
    double pnorm = poly_norm(p);

    auto triples = eigensolve(l);
    // best-separated finite simple eigenvalue near the domain of interest
    // (the normalization ||dP(.)|| is a sup over [-1, 1], so eigenvalues far
    // outside see a much larger local perturbation)
    double best_sep = -1;
    cd lam0;
    for (const auto& t : triples) {
        if (!t.finite || !t.simple) continue;
        if (std::abs(t.lambda) > 1.25) continue;
        double sep = std::numeric_limits<double>::infinity();
        for (const auto& u : triples) {
            if (&u == &t || !u.finite) continue;
            sep = std::min(sep, std::abs(t.lambda - u.lambda));
        }
        if (sep > best_sep) {
            best_sep = sep;
            lam0 = t.lambda;
        }
    }
    if (best_sep < 1e-2)
        throw error("perturbation_probe: no well-separated eigenvalue near [-1, 1]");
    probe.lambda = lam0;

    PEigenPair pe = p_eigenpair(p, lam0, pnorm);
    MatC pprime = cheb_derivative_eval(p, lam0);
    cd denom = (pe.y.adjoint() * pprime * pe.x)(0);

    // random direction, normalized to ||dP(.)|| = eps
    MatPoly<double> dir = MatPoly<double>::zero(n, k, p.basis());
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (Index i = 0; i <= k; ++i)
        for (Index r = 0; r < n; ++r)
            for (Index c = 0; c < n; ++c) dir.coeff(i)(r, c) = u(rng);
    double dnorm = poly_norm(dir);
    MatPoly<double> dp = (eps / dnorm) * dir;

    MatPoly<cd> dpc = MatPoly<cd>::zero(n, k, Basis<cd>::chebyshev_t());
    for (Index i = 0; i <= k; ++i) dpc.coeff(i) = detail::to_complex(dp.coeff(i));
    cd numer = (pe.y.adjoint() * dpc.eval(lam0) * pe.x)(0);
    probe.predicted = lam0 - numer / denom;

    MatPoly<double> p2 = p + dp;
    cd best = 0;
    double bestd = std::numeric_limits<double>::infinity();
    for (const auto& t : eigensolve(dl_pencil(p2, one))) {
        if (!t.finite) continue;
        double d = std::abs(t.lambda - lam0);
        if (d < bestd) {
            bestd = d;
            best = t.lambda;
        }
    }
    probe.actual = best;
    probe.err = std::abs(probe.actual - probe.predicted);
    double rel = pe.x.norm() * pe.y.norm() * pnorm / std::abs(denom);
    double local = detail::spectral_norm(dpc.eval(lam0)) / eps;  // local vs sup-norm size
    probe.scale = std::max(1.0, rel * rel) * std::max(1.0, local * local);
    probe.tol = 100.0 * eps * eps * probe.scale;
    probe.ok = probe.err <= probe.tol;

    // yhat* X xhat = v(lam) y* P'(lam) x   (v = 1 here)
    VecC lamvec = cheb_lambda_vec(k, lam0);
    VecC xhat = kron_vec_c(lamvec, pe.x);
    VecC yhat = kron_vec_c(lamvec.conjugate(), pe.y);
    cd lhs = (yhat.adjoint() * detail::to_complex(l.X.a) * xhat)(0);
    cd rhs = denom;  // v(lam) = 1
    probe.limit_identity_rel_err = std::abs(lhs - rhs) / std::abs(rhs);
    probe.limit_identity_ok = probe.limit_identity_rel_err <= 1e-8;
    return probe;
}

}  // namespace bezlin

#endif  // BEZLIN_CONDITIONING_HPP
