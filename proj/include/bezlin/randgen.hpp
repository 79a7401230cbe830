#ifndef BEZLIN_RANDGEN_HPP
#define BEZLIN_RANDGEN_HPP

/*
 * Deterministic seeded generators for random instances: rational scalars
 * with bounded numerators/denominators, matrices, matrix polynomials, and
 * distinct evaluation points for polynomial identity testing.  Used by the
 * test suites and by the `condition` trials; all draws go through next_u64
 * so streams are reproducible across platforms.
 */

#include <cstdint>
#include <random>
#include <vector>

#include "bezlin/dl.hpp"

namespace bezlin {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    /// Uniform in [lo, hi] (inclusive); deterministic across platforms.
    long long next_int(long long lo, long long hi) {
        return lo + static_cast<long long>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    double next_real(double lo, double hi) {
        return lo + (hi - lo) * (static_cast<double>(next_u64() >> 11) * 0x1.0p-53);
    }

    std::mt19937_64& engine() { return eng_; }

private:
    std::mt19937_64 eng_;
};

/// Rational with |numerator| <= num_max and denominator in [1, den_max].
inline Rational random_rational(Rng& rng, long long num_max = 9, long long den_max = 4) {
    return Rational(rng.next_int(-num_max, num_max)) / Rational(rng.next_int(1, den_max));
}

inline GaussianRational random_gaussian(Rng& rng, long long num_max = 9, long long den_max = 4) {
    return {random_rational(rng, num_max, den_max), random_rational(rng, num_max, den_max)};
}

template <class S>
S random_scalar(Rng& rng) {
    if constexpr (std::is_same_v<S, Rational>) {
        return random_rational(rng);
    } else if constexpr (std::is_same_v<S, GaussianRational>) {
        return random_gaussian(rng);
    } else if constexpr (std::is_same_v<S, double>) {
        return rng.next_real(-1.0, 1.0);
    } else if constexpr (std::is_same_v<S, std::complex<double>>) {
        return {rng.next_real(-1.0, 1.0), rng.next_real(-1.0, 1.0)};
    } else {
        static_assert(std::is_same_v<S, GFp>, "unsupported scalar");
        return S(rng.next_int(0, 1000), 0);  // caller binds the modulus
    }
}

template <class S>
Mat<S> random_matrix(Rng& rng, Index rows, Index cols) {
    Mat<S> m(rows, cols);
    for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < cols; ++j) m(i, j) = random_scalar<S>(rng);
    return m;
}

/// Random matrix retried until nonsingular.
template <class S>
Mat<S> random_invertible(Rng& rng, Index n) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        Mat<S> m = random_matrix<S>(rng, n, n);
        if (!is_zero(determinant<S>(m))) return m;
    }
    throw error("random_invertible: too many singular draws");
}

/// Random matrix polynomial with nonzero (by default invertible) leading
/// coefficient, so grade = degree.
template <class S>
MatPoly<S> random_matpoly(Rng& rng, Index n, Index k, const Basis<S>& basis,
                          bool invertible_lead = false) {
    MatPoly<S> p = MatPoly<S>::zero(n, k, basis);
    for (Index i = 0; i < k; ++i) p.coeff(i) = random_matrix<S>(rng, n, n);
    p.coeff(k) = invertible_lead ? random_invertible<S>(rng, n) : random_matrix<S>(rng, n, n);
    while (mat_is_zero(p.coeff(k))) p.coeff(k) = random_matrix<S>(rng, n, n);
    return p;
}

/// Monic random matrix polynomial (leading coefficient I).
template <class S>
MatPoly<S> random_monic_matpoly(Rng& rng, Index n, Index k, const Basis<S>& basis) {
    MatPoly<S> p = random_matpoly<S>(rng, n, k, basis);
    p.coeff(k) = Mat<S>::Identity(n, n);
    return p;
}

template <class S>
Ansatz<S> random_ansatz(Rng& rng, Index k, const Basis<S>& basis) {
    Vec<S> v(k);
    bool nonzero = false;
    for (Index i = 0; i < k; ++i) {
        v(i) = random_scalar<S>(rng);
        nonzero = nonzero || !is_zero(v(i));
    }
    if (!nonzero) v(k - 1) = S(1);
    return Ansatz<S>::from_descending(std::move(v), basis);
}

/// Distinct rational points for polynomial identity testing.
inline std::vector<Rational> distinct_rationals(Rng& rng, std::size_t count,
                                                long long num_max = 100, long long den_max = 10) {
    std::vector<Rational> pts;
    while (pts.size() < count) {
        Rational c = random_rational(rng, num_max, den_max);
        bool fresh = true;
        for (const auto& p : pts) fresh = fresh && !(p == c);
        if (fresh) pts.push_back(c);
    }
    return pts;
}

}  // namespace bezlin

#endif  // BEZLIN_RANDGEN_HPP
