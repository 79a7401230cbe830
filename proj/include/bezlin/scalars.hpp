#ifndef BEZLIN_SCALARS_HPP
#define BEZLIN_SCALARS_HPP

/*
 * Field scalars used throughout the library:
 *
 *   Rational          exact arbitrary-precision rationals
 *   GaussianRational  a + b*i with rational a, b, with conjugation
 *   GFp               integers mod a prime p (runtime modulus)
 *   double            inexact real field
 *   std::complex<double>
 *
 * Exact values are always kept canonical (rationals in lowest terms with
 * positive denominator, GFp values in [0, p)).  All values are immutable
 * after construction.  Rational wraps boost cpp_int for the integer parts;
 * the wrapper keeps boost's operator templates out of scalar/matrix
 * overload sets.
 */

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/miller_rabin.hpp>

#include <Eigen/Core>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>

namespace bezlin {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad input or violated precondition (CLI exit code 2).
struct input_error : error {
    using error::error;
};

// A theorem-guaranteed identity failed to hold; signals a bug (exit code 3).
struct internal_error : error {
    using error::error;
};

using BigInt = boost::multiprecision::cpp_int;

// ---------------------------------------------------------------------------
// Rational
// ---------------------------------------------------------------------------

/// Exact rational number, always in lowest terms with positive denominator.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(int v) : num_(v), den_(1) {}        // NOLINT: implicit by design
    Rational(long long v) : num_(v), den_(1) {}  // NOLINT
    Rational(BigInt v) : num_(std::move(v)), den_(1) {}  // NOLINT
    Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_ == 0) throw input_error("Rational: zero denominator");
        normalize();
    }

    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw input_error("Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    std::string str() const {
        return den_ == 1 ? num_.str() : num_.str() + "/" + den_.str();
    }

    double to_double() const {
        return num_.convert_to<double>() / den_.convert_to<double>();
    }

private:
    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    BigInt num_, den_;
};

// ---------------------------------------------------------------------------
// GF(p)
// ---------------------------------------------------------------------------

/// Element of the prime field GF(p).  The modulus travels with the value.
/// A default/int-constructed element has p == 0 and acts as an integer
/// literal that binds to a modulus on the first mixed operation; Eigen's
/// Scalar(0)/Scalar(1) go through this state.
class GFp {
public:
    GFp() : v_(0), p_(0) {}
    GFp(int v) : v_(v), p_(0) {}                // NOLINT: implicit by design
    GFp(long long v) : v_(v), p_(0) {}          // NOLINT
    GFp(long long v, std::uint64_t p) : v_(0), p_(p) {
        if (p == 0) throw input_error("GFp: zero modulus");
        v_ = reduce(v, p);
    }

    static GFp zero(std::uint64_t p) { return GFp(0, p); }
    static GFp one(std::uint64_t p) { return GFp(1, p); }

    std::uint64_t modulus() const { return p_; }
    bool bound() const { return p_ != 0; }
    /// Canonical representative in [0, p); literals return their raw value.
    long long value() const { return v_; }

    friend GFp operator+(const GFp& a, const GFp& b) {
        auto [x, y, p] = align(a, b);
        if (p == 0) return GFp(x + y);
        return GFp(x + y, p);
    }
    friend GFp operator-(const GFp& a, const GFp& b) {
        auto [x, y, p] = align(a, b);
        if (p == 0) return GFp(x - y);
        return GFp(x - y, p);
    }
    GFp operator-() const { return bound() ? GFp(-v_, p_) : GFp(-v_); }
    friend GFp operator*(const GFp& a, const GFp& b) {
        auto [x, y, p] = align(a, b);
        if (p == 0) return GFp(x * y);
        auto prod = static_cast<unsigned __int128>(static_cast<std::uint64_t>(x)) *
                    static_cast<std::uint64_t>(y);
        return GFp(static_cast<long long>(prod % p), p);
    }
    friend GFp operator/(const GFp& a, const GFp& b) { return a * b.inverse(); }

    GFp& operator+=(const GFp& o) { return *this = *this + o; }
    GFp& operator-=(const GFp& o) { return *this = *this - o; }
    GFp& operator*=(const GFp& o) { return *this = *this * o; }
    GFp& operator/=(const GFp& o) { return *this = *this / o; }

    GFp inverse() const {
        if (!bound()) {
            if (v_ == 1 || v_ == -1) return *this;
            throw input_error("GFp: cannot invert an unbound literal");
        }
        if (v_ == 0) throw input_error("GFp: division by zero");
        long long t = 0, newt = 1;
        long long r = static_cast<long long>(p_), newr = v_;
        while (newr != 0) {
            long long q = r / newr;
            t = std::exchange(newt, t - q * newt);
            r = std::exchange(newr, r - q * newr);
        }
        return GFp(t, p_);
    }

    friend bool operator==(const GFp& a, const GFp& b) {
        auto [x, y, p] = align(a, b);
        return p == 0 ? x == y : reduce(x, p) == reduce(y, p);
    }
    friend bool operator!=(const GFp& a, const GFp& b) { return !(a == b); }

private:
    static long long reduce(long long v, std::uint64_t p) {
        auto m = static_cast<long long>(p);
        long long r = v % m;
        return r < 0 ? r + m : r;
    }
    // Returns both values on a common modulus (0 when both are literals).
    static std::tuple<long long, long long, std::uint64_t> align(const GFp& a, const GFp& b) {
        if (a.p_ != 0 && b.p_ != 0 && a.p_ != b.p_)
            throw input_error("GFp: mixing elements of different moduli");
        std::uint64_t p = a.p_ != 0 ? a.p_ : b.p_;
        if (p == 0) return {a.v_, b.v_, 0};
        return {reduce(a.v_, p), reduce(b.v_, p), p};
    }

    long long v_;
    std::uint64_t p_;
};

inline bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    return boost::multiprecision::miller_rabin_test(BigInt(p), 32);
}

// ---------------------------------------------------------------------------
// Gaussian rationals
// ---------------------------------------------------------------------------

/// a + b*i with exact rational a, b.
struct GaussianRational {
    Rational re, im;

    GaussianRational() = default;
    GaussianRational(int v) : re(v), im(0) {}   // NOLINT
    GaussianRational(Rational r) : re(std::move(r)), im(0) {}  // NOLINT
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    GaussianRational operator-() const { return {-re, -im}; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        Rational n = b.re * b.re + b.im * b.im;
        if (n == Rational(0)) throw input_error("GaussianRational: division by zero");
        return a * GaussianRational{b.re / n, -b.im / n};
    }

    GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
    GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
    GaussianRational& operator/=(const GaussianRational& o) { return *this = *this / o; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
};

// ---------------------------------------------------------------------------
// Field traits and generic helpers
// ---------------------------------------------------------------------------

template <class S>
struct field_traits;

template <>
struct field_traits<Rational> {
    static constexpr bool exact = true;
    static constexpr bool complex_like = false;
    static constexpr const char* name = "rational";
};
template <>
struct field_traits<GaussianRational> {
    static constexpr bool exact = true;
    static constexpr bool complex_like = true;
    static constexpr const char* name = "gaussian-rational";
};
template <>
struct field_traits<GFp> {
    static constexpr bool exact = true;
    static constexpr bool complex_like = false;
    static constexpr const char* name = "gf";
};
template <>
struct field_traits<double> {
    static constexpr bool exact = false;
    static constexpr bool complex_like = false;
    static constexpr const char* name = "f64";
};
template <>
struct field_traits<std::complex<double>> {
    static constexpr bool exact = false;
    static constexpr bool complex_like = true;
    static constexpr const char* name = "c64";
};

template <class S>
inline constexpr bool is_exact_field_v = field_traits<S>::exact;

/// Conjugation; the identity on fields without a distinguished involution.
inline Rational conj_of(const Rational& s) { return s; }
inline GFp conj_of(const GFp& s) { return s; }
inline double conj_of(double s) { return s; }
inline std::complex<double> conj_of(const std::complex<double>& s) { return std::conj(s); }
inline GaussianRational conj_of(const GaussianRational& s) { return {s.re, -s.im}; }

/// num/den as an element of the field containing `proto` (GFp needs the
/// prototype to know its modulus; other fields ignore it).
template <class S>
S from_fraction(long long num, long long den, const S& proto) {
    (void)proto;
    if (den == 0) throw input_error("from_fraction: zero denominator");
    if constexpr (std::is_same_v<S, GFp>) {
        if (!proto.bound()) throw input_error("GFp: fraction needs a bound prototype element");
        return GFp(num, proto.modulus()) / GFp(den, proto.modulus());
    } else if constexpr (std::is_same_v<S, double>) {
        return static_cast<double>(num) / static_cast<double>(den);
    } else if constexpr (std::is_same_v<S, std::complex<double>>) {
        return {static_cast<double>(num) / static_cast<double>(den), 0.0};
    } else {
        return S(num) / S(den);
    }
}

// ---------------------------------------------------------------------------
// Literal grammar:  rational "p/q" or "p", gaussian "a+b*i", GFp integers
// ---------------------------------------------------------------------------

namespace detail {
inline BigInt parse_integer(std::string_view s) {
    if (s.empty()) throw input_error("empty integer literal");
    bool negative = s[0] == '-';
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) throw input_error("bad integer literal: '" + std::string(s) + "'");
    for (std::size_t j = i; j < s.size(); ++j)
        if (s[j] < '0' || s[j] > '9')
            throw input_error("bad integer literal: '" + std::string(s) + "'");
    BigInt v(std::string(s.substr(i)));
    return negative ? BigInt(-v) : v;
}
}  // namespace detail

inline Rational parse_rational(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(detail::parse_integer(s));
    BigInt num = detail::parse_integer(s.substr(0, slash));
    BigInt den = detail::parse_integer(s.substr(slash + 1));
    if (den == 0) throw input_error("rational literal with zero denominator: '" + std::string(s) + "'");
    return Rational(std::move(num), std::move(den));
}

inline std::string to_string(const Rational& r) { return r.str(); }

/// "a+b*i" with either part optional; accepts "a", "b*i", "i", "-i".
inline GaussianRational parse_gaussian(std::string_view s) {
    if (s.empty()) throw input_error("empty gaussian literal");
    if (s.back() == 'i') {
        std::string_view body = s.substr(0, s.size() - 1);
        if (!body.empty() && body.back() == '*') body.remove_suffix(1);
        // split at the last +/- that is not a leading sign
        std::size_t cut = std::string_view::npos;
        for (std::size_t j = body.size(); j-- > 1;) {
            if (body[j] == '+' || body[j] == '-') {
                cut = j;
                break;
            }
        }
        std::string_view re_part = cut == std::string_view::npos ? std::string_view{} : body.substr(0, cut);
        std::string_view im_part = cut == std::string_view::npos ? body : body.substr(cut);
        Rational im;
        if (im_part.empty() || im_part == "+")
            im = 1;
        else if (im_part == "-")
            im = -1;
        else
            im = parse_rational(im_part);
        Rational re = re_part.empty() ? Rational(0) : parse_rational(re_part);
        return {re, im};
    }
    return {parse_rational(s), Rational(0)};
}

inline std::string to_string(const GaussianRational& g) {
    if (g.im == Rational(0)) return g.re.str();
    std::string im = g.im.str() + "*i";
    if (g.re == Rational(0)) return im;
    return g.im > Rational(0) ? g.re.str() + "+" + im : g.re.str() + im;
}

inline std::string to_string(const GFp& v) {
    if (!v.bound()) throw input_error("GFp: cannot print an unbound literal");
    return std::to_string(v.value());
}

}  // namespace bezlin

// ---------------------------------------------------------------------------
// Eigen glue for the custom scalars.  All three exact types are treated as
// opaque field elements; conjugation-aware operations are spelled out by
// this library.
// ---------------------------------------------------------------------------

namespace Eigen {

template <>
struct NumTraits<bezlin::Rational> : GenericNumTraits<bezlin::Rational> {
    using Real = bezlin::Rational;
    using NonInteger = bezlin::Rational;
    using Nested = bezlin::Rational;
    using Literal = long long;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 4,
        AddCost = 50,
        MulCost = 50,
    };
    static inline Real epsilon() { return bezlin::Rational(0); }
    static inline Real dummy_precision() { return bezlin::Rational(0); }
    static inline int digits10() { return 0; }
};

template <>
struct NumTraits<bezlin::GFp> : GenericNumTraits<bezlin::GFp> {
    using Real = bezlin::GFp;
    using NonInteger = bezlin::GFp;
    using Nested = bezlin::GFp;
    using Literal = long long;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 6,
        MulCost = 8,
    };
    static inline Real epsilon() { return bezlin::GFp(0); }
    static inline Real dummy_precision() { return bezlin::GFp(0); }
    static inline int digits10() { return 0; }
};

template <>
struct NumTraits<bezlin::GaussianRational> : GenericNumTraits<bezlin::GaussianRational> {
    using Real = bezlin::GaussianRational;
    using NonInteger = bezlin::GaussianRational;
    using Nested = bezlin::GaussianRational;
    using Literal = int;
    enum {
        IsComplex = 0,  // opaque: the library applies conjugation explicitly
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 100,
        MulCost = 200,
    };
    static inline Real epsilon() { return bezlin::GaussianRational(0); }
    static inline Real dummy_precision() { return bezlin::GaussianRational(0); }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen

#endif  // BEZLIN_SCALARS_HPP
