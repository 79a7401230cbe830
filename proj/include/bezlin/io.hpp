#ifndef BEZLIN_IO_HPP
#define BEZLIN_IO_HPP

/*
 * File formats and literal grammars.
 *
 * Matrix polynomial documents are JSON objects
 *
 *   {
 *     "field":  "rational" | {"gf": p} | "gaussian-rational" | "f64" | "c64",
 *     "basis":  "monomial" | "chebyshev-t"
 *               | {"orthogonal": {"a": [...], "b": [...], "c": [...]}},
 *     "n":      block size,
 *     "grade":  declared grade g,
 *     "coeffs": [P_0, ..., P_g]          // ascending degree, each n x n
 *   }
 *
 * Scalar literals: rationals "p/q" or "p", gaussian rationals "a+b*i",
 * prime-field elements as integers, doubles as JSON numbers, complex
 * doubles "a+b*i" with decimal parts.  Pencil documents carry "X" and "Y"
 * (nk x nk) plus "k" instead of "grade"/"coeffs".  Parse/serialize is a
 * round trip; exact output is canonical and bit-stable.
 */

#include <json.hpp>

#include <charconv>
#include <cstdio>
#include <string>

#include "bezlin/blockpoly.hpp"
#include "bezlin/matpoly.hpp"

namespace bezlin {

using Json = nlohmann::ordered_json;

struct FieldTag {
    enum class Kind { Rational, GF, Gaussian, F64, C64 };
    Kind kind = Kind::Rational;
    std::uint64_t p = 0;  // GF only

    friend bool operator==(const FieldTag& a, const FieldTag& b) {
        return a.kind == b.kind && a.p == b.p;
    }
};

inline FieldTag parse_field_tag(const Json& j) {
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (s == "rational") return {FieldTag::Kind::Rational, 0};
        if (s == "gaussian-rational") return {FieldTag::Kind::Gaussian, 0};
        if (s == "f64") return {FieldTag::Kind::F64, 0};
        if (s == "c64") return {FieldTag::Kind::C64, 0};
        throw input_error("unknown field tag: '" + s + "'");
    }
    if (j.is_object() && j.contains("gf")) {
        std::uint64_t p = j.at("gf").get<std::uint64_t>();
        if (!is_prime(p)) throw input_error("gf modulus " + std::to_string(p) + " is not prime");
        return {FieldTag::Kind::GF, p};
    }
    throw input_error("malformed field tag");
}

inline Json field_tag_to_json(const FieldTag& ft) {
    switch (ft.kind) {
        case FieldTag::Kind::Rational: return Json("rational");
        case FieldTag::Kind::GF: return Json{{"gf", ft.p}};
        case FieldTag::Kind::Gaussian: return Json("gaussian-rational");
        case FieldTag::Kind::F64: return Json("f64");
        case FieldTag::Kind::C64: return Json("c64");
    }
    throw internal_error("unreachable field tag");
}

/// "gf7" / "gf:7" / named tags, as used by command-line --field options.
inline FieldTag parse_field_name(const std::string& s) {
    if (s.rfind("gf", 0) == 0) {
        std::string digits = s.substr(2);
        if (!digits.empty() && digits[0] == ':') digits = digits.substr(1);
        std::uint64_t p = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
        if (ec != std::errc() || ptr != digits.data() + digits.size())
            throw input_error("bad prime-field spec: '" + s + "'");
        if (!is_prime(p)) throw input_error("gf modulus " + std::to_string(p) + " is not prime");
        return {FieldTag::Kind::GF, p};
    }
    return parse_field_tag(Json(s));
}

namespace detail {

inline std::string double_repr(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline double parse_double_str(const std::string& s) {
    try {
        std::size_t pos = 0;
        double v = std::stod(s, &pos);
        if (pos != s.size()) throw input_error("bad float literal: '" + s + "'");
        return v;
    } catch (const std::exception&) {
        throw input_error("bad float literal: '" + s + "'");
    }
}

inline std::complex<double> parse_c64(const std::string& s) {
    if (s.empty()) throw input_error("empty complex literal");
    if (s.back() != 'i') return {parse_double_str(s), 0.0};
    std::string body = s.substr(0, s.size() - 1);
    if (!body.empty() && body.back() == '*') body.pop_back();
    std::size_t cut = std::string::npos;
    for (std::size_t j = body.size(); j-- > 1;) {
        char c = body[j];
        if ((c == '+' || c == '-') && body[j - 1] != 'e' && body[j - 1] != 'E') {
            cut = j;
            break;
        }
    }
    std::string re = cut == std::string::npos ? "" : body.substr(0, cut);
    std::string im = cut == std::string::npos ? body : body.substr(cut);
    double imv = (im.empty() || im == "+") ? 1.0 : (im == "-" ? -1.0 : parse_double_str(im));
    double rev = re.empty() ? 0.0 : parse_double_str(re);
    return {rev, imv};
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Typed scalar <-> JSON
// ---------------------------------------------------------------------------

template <class S>
S scalar_from_json(const Json& j, const FieldTag& ft);

template <>
inline Rational scalar_from_json<Rational>(const Json& j, const FieldTag&) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw input_error("rational literal must be a string or integer");
}
template <>
inline GaussianRational scalar_from_json<GaussianRational>(const Json& j, const FieldTag&) {
    if (j.is_number_integer()) return GaussianRational(static_cast<int>(j.get<long long>()));
    if (j.is_string()) return parse_gaussian(j.get<std::string>());
    throw input_error("gaussian literal must be a string or integer");
}
template <>
inline GFp scalar_from_json<GFp>(const Json& j, const FieldTag& ft) {
    if (ft.p == 0) throw input_error("prime-field literal without a modulus");
    if (j.is_number_integer()) return GFp(j.get<long long>(), ft.p);
    if (j.is_string()) {
        BigInt b = detail::parse_integer(j.get<std::string>());
        return GFp(static_cast<long long>(b % BigInt(ft.p)), ft.p);
    }
    throw input_error("prime-field literal must be an integer");
}
template <>
inline double scalar_from_json<double>(const Json& j, const FieldTag&) {
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) return detail::parse_double_str(j.get<std::string>());
    throw input_error("f64 literal must be a number");
}
template <>
inline std::complex<double> scalar_from_json<std::complex<double>>(const Json& j,
                                                                   const FieldTag&) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_string()) return detail::parse_c64(j.get<std::string>());
    throw input_error("c64 literal must be a number or 'a+b*i' string");
}

inline Json scalar_to_json(const Rational& s) { return Json(to_string(s)); }
inline Json scalar_to_json(const GaussianRational& s) { return Json(to_string(s)); }
inline Json scalar_to_json(const GFp& s) { return Json(s.value()); }
inline Json scalar_to_json(double s) { return Json(s); }
inline Json scalar_to_json(const std::complex<double>& s) {
    if (s.imag() == 0.0) return Json(s.real());
    std::string out = detail::double_repr(s.imag()) + "*i";
    if (s.real() != 0.0) {
        std::string re = detail::double_repr(s.real());
        out = s.imag() > 0 ? re + "+" + out : re + out;
    }
    return Json(out);
}

/// Embeds a rational literal (from the CLI polynomial grammar) into S.
template <class S>
S scalar_from_rational_literal(const Rational& q, const FieldTag& ft) {
    if constexpr (std::is_same_v<S, Rational>) {
        (void)ft;
        return q;
    } else if constexpr (std::is_same_v<S, GaussianRational>) {
        (void)ft;
        return GaussianRational(q);
    } else if constexpr (std::is_same_v<S, GFp>) {
        GFp n(static_cast<long long>(q.numerator() % BigInt(ft.p)), ft.p);
        GFp d(static_cast<long long>(q.denominator() % BigInt(ft.p)), ft.p);
        return n / d;
    } else if constexpr (std::is_same_v<S, double>) {
        (void)ft;
        return q.to_double();
    } else {
        (void)ft;
        return std::complex<double>(q.to_double(), 0.0);
    }
}

// ---------------------------------------------------------------------------
// Basis <-> JSON
// ---------------------------------------------------------------------------

template <class S>
S field_one(const FieldTag& ft) {
    if constexpr (std::is_same_v<S, GFp>)
        return GFp::one(ft.p);
    else
        return S(1);
}

template <class S>
Basis<S> basis_from_json(const Json& j, const FieldTag& ft) {
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (s == "monomial") return Basis<S>::monomial();
        if (s == "chebyshev-t") return Basis<S>::chebyshev_t(field_one<S>(ft));
        throw input_error("unknown basis tag: '" + s + "'");
    }
    if (j.is_object() && j.contains("orthogonal")) {
        const Json& o = j.at("orthogonal");
        auto read = [&](const char* key) {
            std::vector<S> v;
            for (const Json& e : o.at(key)) v.push_back(scalar_from_json<S>(e, ft));
            return v;
        };
        return Basis<S>::orthogonal(read("a"), read("b"), read("c"));
    }
    throw input_error("malformed basis tag");
}

template <class S>
Json basis_to_json(const Basis<S>& b) {
    switch (b.kind()) {
        case BasisKind::Monomial: return Json("monomial");
        case BasisKind::ChebyshevT: return Json("chebyshev-t");
        case BasisKind::Orthogonal: {
            Json a = Json::array(), bb = Json::array(), c = Json::array();
            for (const S& v : b.orth_a()) a.push_back(scalar_to_json(v));
            for (const S& v : b.orth_b()) bb.push_back(scalar_to_json(v));
            for (const S& v : b.orth_c()) c.push_back(scalar_to_json(v));
            return Json{{"orthogonal", Json{{"a", a}, {"b", bb}, {"c", c}}}};
        }
        case BasisKind::DegreeGraded:
            throw input_error("degree-graded bases have no file representation");
    }
    throw internal_error("unreachable basis kind");
}

// ---------------------------------------------------------------------------
// Matrices, matrix polynomials, pencils
// ---------------------------------------------------------------------------

template <class S>
Mat<S> matrix_from_json(const Json& j, Index rows, Index cols, const FieldTag& ft) {
    if (!j.is_array() || static_cast<Index>(j.size()) != rows)
        throw input_error("matrix: expected " + std::to_string(rows) + " rows");
    Mat<S> m(rows, cols);
    for (Index r = 0; r < rows; ++r) {
        const Json& row = j.at(static_cast<std::size_t>(r));
        if (!row.is_array() || static_cast<Index>(row.size()) != cols)
            throw input_error("matrix: expected " + std::to_string(cols) + " columns");
        for (Index c = 0; c < cols; ++c)
            m(r, c) = scalar_from_json<S>(row.at(static_cast<std::size_t>(c)), ft);
    }
    return m;
}

template <class S>
Json matrix_to_json(const Mat<S>& m) {
    Json rows = Json::array();
    for (Index r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (Index c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

template <class S>
MatPoly<S> matpoly_from_json(const Json& doc, const FieldTag& ft) {
    Index n = doc.at("n").get<Index>();
    Index grade = doc.at("grade").get<Index>();
    if (n < 1) throw input_error("document: n must be positive");
    if (grade < 0) throw input_error("document: grade must be nonnegative");
    Basis<S> basis = basis_from_json<S>(doc.at("basis"), ft);
    const Json& coeffs = doc.at("coeffs");
    if (!coeffs.is_array() || static_cast<Index>(coeffs.size()) != grade + 1)
        throw input_error("document: coeffs must hold grade+1 matrices");
    std::vector<Mat<S>> c;
    for (Index i = 0; i <= grade; ++i)
        c.push_back(matrix_from_json<S>(coeffs.at(static_cast<std::size_t>(i)), n, n, ft));
    return MatPoly<S>(n, grade, std::move(c), std::move(basis));
}

template <class S>
Json matpoly_to_json(const MatPoly<S>& p, const FieldTag& ft) {
    Json coeffs = Json::array();
    for (Index i = 0; i <= p.grade(); ++i) coeffs.push_back(matrix_to_json<S>(p.coeff(i)));
    return Json{{"field", field_tag_to_json(ft)},
                {"basis", basis_to_json(p.basis())},
                {"n", p.n()},
                {"grade", p.grade()},
                {"coeffs", std::move(coeffs)}};
}

template <class S>
Pencil<S> pencil_from_json(const Json& doc_in, const FieldTag& ft) {
    const Json& doc = doc_in.contains("pencil") ? doc_in.at("pencil") : doc_in;
    Index n = doc.at("n").get<Index>();
    Index k = doc.at("k").get<Index>();
    if (n < 1 || k < 1) throw input_error("pencil document: n and k must be positive");
    Basis<S> basis = basis_from_json<S>(doc.at("basis"), ft);
    Mat<S> x = matrix_from_json<S>(doc.at("X"), n * k, n * k, ft);
    Mat<S> y = matrix_from_json<S>(doc.at("Y"), n * k, n * k, ft);
    return Pencil<S>(BlockMat<S>(std::move(x), k, k, n), BlockMat<S>(std::move(y), k, k, n),
                     std::move(basis));
}

template <class S>
Json pencil_to_json(const Pencil<S>& l, const FieldTag& ft) {
    return Json{{"field", field_tag_to_json(ft)}, {"basis", basis_to_json(l.basis)},
                {"n", l.n()},                     {"k", l.k()},
                {"X", matrix_to_json<S>(l.X.a)},  {"Y", matrix_to_json<S>(l.Y.a)}};
}

// ---------------------------------------------------------------------------
// Command-line scalar polynomial grammar (monomials only):  "x^2+3/2*x-1"
// ---------------------------------------------------------------------------

template <class S>
std::vector<S> parse_poly_string(const std::string& text, const FieldTag& ft) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw input_error("empty polynomial");

    std::vector<std::pair<Rational, int>> terms;  // (coefficient, power)
    std::size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            if (s[i] == '-') sign = -sign;
            ++i;
        }
        if (i >= s.size()) throw input_error("dangling sign in polynomial: '" + text + "'");
        std::size_t start = i;
        while (i < s.size() && s[i] != '+' && s[i] != '-') ++i;
        std::string term = s.substr(start, i - start);

        Rational coeff(1);
        int power = 0;
        std::size_t xpos = term.find('x');
        if (xpos == std::string::npos) {
            coeff = parse_rational(term);
        } else {
            std::string pre = term.substr(0, xpos);
            if (!pre.empty() && pre.back() == '*') pre.pop_back();
            if (!pre.empty()) coeff = parse_rational(pre);
            std::string post = term.substr(xpos + 1);
            if (post.empty()) {
                power = 1;
            } else if (post[0] == '^') {
                try {
                    std::size_t used = 0;
                    power = std::stoi(post.substr(1), &used);
                    if (used != post.size() - 1) throw input_error("");
                } catch (const std::exception&) {
                    throw input_error("bad exponent in term '" + term + "'");
                }
                if (power < 0) throw input_error("negative exponent in polynomial");
            } else {
                throw input_error("bad term '" + term + "' in polynomial");
            }
        }
        if (sign < 0) coeff = -coeff;
        terms.emplace_back(coeff, power);
    }

    int deg = 0;
    for (const auto& [c, p] : terms) deg = std::max(deg, p);
    std::vector<S> out(static_cast<std::size_t>(deg) + 1, S(0));
    for (const auto& [c, p] : terms) {
        S add = scalar_from_rational_literal<S>(c, ft);
        out[static_cast<std::size_t>(p)] = out[static_cast<std::size_t>(p)] + add;
    }
    return out;
}

}  // namespace bezlin

#endif  // BEZLIN_IO_HPP
