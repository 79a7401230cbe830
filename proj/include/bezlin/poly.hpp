#ifndef BEZLIN_POLY_HPP
#define BEZLIN_POLY_HPP

/*
 * Univariate scalar polynomials with monomial coefficients, over any field
 * scalar.  Used for determinants of matrix polynomials, ansatz polynomials
 * and the gcd-based eigenvalue sharing tests.
 */

#include <algorithm>
#include <utility>
#include <vector>

#include "bezlin/scalars.hpp"

namespace bezlin {

template <class S>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<S> ascending) : c_(std::move(ascending)) { trim(); }
    Poly(std::initializer_list<S> ascending) : c_(ascending) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly constant(S v) { return Poly({std::move(v)}); }
    static Poly x() { return Poly({S(0), S(1)}); }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    S coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(i)] : S(0);
    }
    const std::vector<S>& coeffs() const { return c_; }

    S eval(const S& x) const {
        S acc = S(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<S> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * S(static_cast<int>(i));
        return Poly(std::move(d));
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<S> r(std::max(a.c_.size(), b.c_.size()), S(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = r[i] + a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    Poly operator-() const {
        std::vector<S> r(c_);
        for (auto& v : r) v = -v;
        return Poly(std::move(r));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<S> r(a.c_.size() + b.c_.size() - 1, S(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        return Poly(std::move(r));
    }
    friend Poly operator*(const S& s, const Poly& p) {
        std::vector<S> r(p.c_);
        for (auto& v : r) v = s * v;
        return Poly(std::move(r));
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Quotient and remainder; the divisor must be nonzero.
    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw input_error("poly divmod: division by zero polynomial");
        Poly rem = a;
        std::vector<S> q(a.c_.size() > b.c_.size() ? a.c_.size() - b.c_.size() + 1 : 1, S(0));
        S lead_inv = S(1) / b.c_.back();
        while (!rem.is_zero() && rem.degree() >= b.degree()) {
            int shift = rem.degree() - b.degree();
            S f = rem.c_.back() * lead_inv;
            q[static_cast<std::size_t>(shift)] = f;
            for (std::size_t i = 0; i < b.c_.size(); ++i) {
                std::size_t k = i + static_cast<std::size_t>(shift);
                rem.c_[k] = rem.c_[k] - f * b.c_[i];
            }
            rem.trim();
        }
        return {Poly(std::move(q)), rem};
    }

    Poly monic() const {
        if (is_zero()) return *this;
        return (S(1) / c_.back()) * *this;
    }

private:
    void trim() {
        while (!c_.empty() && bezlin::is_zero(c_.back())) c_.pop_back();
    }

    std::vector<S> c_;  // ascending degree, no trailing zeros
};

/// Monic gcd by the Euclidean algorithm; exact fields only.
template <class S>
Poly<S> gcd_monic(Poly<S> a, Poly<S> b) {
    if constexpr (!is_exact_field_v<S>)
        throw input_error("gcd_monic: exact field required");
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

}  // namespace bezlin

#endif  // BEZLIN_POLY_HPP
