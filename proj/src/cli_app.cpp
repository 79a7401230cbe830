#include "bezlin/cli_app.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

#include "bezlin/bdl.hpp"
#include "bezlin/conditioning.hpp"
#include "bezlin/io.hpp"
#include "bezlin/randgen.hpp"

namespace bezlin {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRejected = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const Json::exception& e) {
        throw input_error("malformed JSON in '" + path + "': " + e.what());
    }
    return j;
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    if (out.empty()) throw input_error("empty list");
    return out;
}

template <class F>
auto with_field(const FieldTag& ft, F&& f) {
    switch (ft.kind) {
        case FieldTag::Kind::Rational: return f(std::type_identity<Rational>{});
        case FieldTag::Kind::GF: return f(std::type_identity<GFp>{});
        case FieldTag::Kind::Gaussian: return f(std::type_identity<GaussianRational>{});
        case FieldTag::Kind::F64: return f(std::type_identity<double>{});
        case FieldTag::Kind::C64: return f(std::type_identity<std::complex<double>>{});
    }
    throw internal_error("unreachable field kind");
}

template <class S>
std::vector<S> parse_scalar_list(const std::string& csv, const FieldTag& ft) {
    std::vector<S> out;
    for (const std::string& item : split_csv(csv))
        out.push_back(scalar_from_json<S>(Json(item), ft));
    return out;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

// ---- dl ------------------------------------------------------------------

int cmd_dl(const std::string& file, const std::string& ansatz_csv, std::ostream& out) {
    Json doc = load_json(file);
    FieldTag ft = parse_field_tag(doc.at("field"));
    return with_field(ft, [&](auto tt) -> int {
        using S = typename decltype(tt)::type;
        MatPoly<S> p = matpoly_from_json<S>(doc, ft);
        Ansatz<S> a = Ansatz<S>::from_ascending(parse_scalar_list<S>(ansatz_csv, ft), p.basis());
        Pencil<S> l = dl_pencil(p, a);

        Json res{{"schema", "v1"}, {"command", "dl"}};
        res["pencil"] = pencil_to_json<S>(l, ft);
        Json asc = Json::array();
        for (const S& c : a.ascending()) asc.push_back(scalar_to_json(c));
        res["ansatz"] = std::move(asc);

        int code = kExitOk;
        if constexpr (is_exact_field_v<S>) {
            ExclusionResult<S> ex = exclusion_check(p, a);
            switch (ex.kind) {
                case Exclusion::Linearization:
                    res["verdict"] = "linearization";
                    break;
                case Exclusion::SharedFiniteRoot: {
                    res["verdict"] = "shared-finite-eigenvalue";
                    Json w = Json::array();
                    for (const S& c : ex.witness.coeffs()) w.push_back(scalar_to_json(c));
                    res["witness_gcd"] = std::move(w);
                    code = kExitRejected;
                    break;
                }
                case Exclusion::SharedInfiniteEigenvalue:
                    res["verdict"] = "shared-infinite-eigenvalue";
                    code = kExitRejected;
                    break;
            }
        } else {
            res["verdict"] = "skipped-inexact-field";
        }
        emit(out, res);
        return code;
    });
}

// ---- bdl -----------------------------------------------------------------

int cmd_bdl(const std::string& file, const std::string& v_csv, std::ostream& out) {
    Json doc = load_json(file);
    FieldTag ft = parse_field_tag(doc.at("field"));
    return with_field(ft, [&](auto tt) -> int {
        using S = typename decltype(tt)::type;
        MatPoly<S> p = matpoly_from_json<S>(doc, ft);
        Poly<S> v(parse_scalar_list<S>(v_csv, ft));
        BdlPencil<S> b = bdl_pencil(p, v);
        Json res{{"schema", "v1"}, {"command", "bdl"}};
        res["pencil"] = pencil_to_json<S>(b.pencil, ft);
        res["Q"] = matpoly_to_json<S>(b.right_ansatz, ft);
        res["S"] = matpoly_to_json<S>(b.left_ansatz, ft);
        res["A"] = matpoly_to_json<S>(b.quotient, ft);
        emit(out, res);
        return kExitOk;
    });
}

// ---- bezout ----------------------------------------------------------------

int cmd_bezout(const std::string& p1_str, const std::string& p2_str, Index grade,
               const std::string& field_name, const std::vector<std::string>& lt_multipliers,
               std::ostream& out) {
    FieldTag ft = parse_field_name(field_name);
    return with_field(ft, [&](auto tt) -> int {
        using S = typename decltype(tt)::type;
        if constexpr (!is_exact_field_v<S>) {
            throw input_error("bezout: exact field required (kernel dimensions are exact data)");
        } else {
            Basis<S> basis = Basis<S>::monomial();
            std::vector<S> p1 = parse_poly_string<S>(p1_str, ft);
            std::vector<S> p2 = parse_poly_string<S>(p2_str, ft);

            BezoutResult<S> bz = [&] {
                if (!lt_multipliers.empty()) {
                    std::vector<S> m1 = parse_poly_string<S>(lt_multipliers[0], ft);
                    std::vector<S> m2 = parse_poly_string<S>(lt_multipliers[1], ft);
                    Index ell = static_cast<Index>(std::max(m1.size(), m2.size())) - 1;
                    auto lift = [&](const std::vector<S>& c, Index g) {
                        return MatPoly<S>::scalar_times_identity(c, 1, g, basis);
                    };
                    return bezout_lt(lift(p1, grade), lift(p2, grade), lift(m1, ell),
                                     lift(m2, ell));
                }
                return bezout_scalar(p1, p2, grade, basis);
            }();

            Json res{{"schema", "v1"}, {"command", "bezout"}};
            res["rows"] = bz.matrix.a.rows();
            res["cols"] = bz.matrix.a.cols();
            res["matrix"] = matrix_to_json<S>(bz.matrix.a);
            res["kernel_dimension"] = kernel_basis<S>(bz.matrix.a).size();
            if (bz.matrix.a.rows() == bz.matrix.a.cols())
                res["determinant"] = scalar_to_json(determinant<S>(bz.matrix.a));
            emit(out, res);
            return kExitOk;
        }
    });
}

// ---- companion -------------------------------------------------------------

int cmd_companion(const std::string& file, int which, std::ostream& out) {
    Json doc = load_json(file);
    FieldTag ft = parse_field_tag(doc.at("field"));
    return with_field(ft, [&](auto tt) -> int {
        using S = typename decltype(tt)::type;
        MatPoly<S> p = matpoly_from_json<S>(doc, ft);
        Mat<S> c = which == 1 ? companion_first(p) : companion_second(p);
        Json res{{"schema", "v1"}, {"command", "companion"}, {"which", which}};
        res["matrix"] = matrix_to_json<S>(c);
        emit(out, res);
        return kExitOk;
    });
}

// ---- divide ----------------------------------------------------------------

int cmd_divide(const std::string& v_file, const std::string& p_file, const std::string& side_name,
               std::ostream& out) {
    Json v_doc = load_json(v_file), p_doc = load_json(p_file);
    FieldTag ft = parse_field_tag(v_doc.at("field"));
    if (!(ft == parse_field_tag(p_doc.at("field"))))
        throw input_error("divide: the two documents use different fields");
    Side side;
    if (side_name == "left")
        side = Side::Left;
    else if (side_name == "right")
        side = Side::Right;
    else
        throw input_error("divide: --side must be left or right");
    return with_field(ft, [&](auto tt) -> int {
        using S = typename decltype(tt)::type;
        MatPoly<S> v = matpoly_from_json<S>(v_doc, ft);
        MatPoly<S> p = matpoly_from_json<S>(p_doc, ft);
        DivisionResult<S> d = matdiv(v, p, side);
        Json res{{"schema", "v1"}, {"command", "divide"}, {"side", side_name}};
        res["quotient"] = matpoly_to_json<S>(d.quotient, ft);
        res["remainder"] = matpoly_to_json<S>(d.remainder, ft);
        emit(out, res);
        return kExitOk;
    });
}

// ---- check -----------------------------------------------------------------

int cmd_check(const std::string& pencil_file, const std::string& p_file, std::ostream& out) {
    Json l_doc = load_json(pencil_file), p_doc = load_json(p_file);
    const Json& l_body = l_doc.contains("pencil") ? l_doc.at("pencil") : l_doc;
    FieldTag ft = parse_field_tag(l_body.at("field"));
    if (!(ft == parse_field_tag(p_doc.at("field"))))
        throw input_error("check: pencil and polynomial use different fields");
    return with_field(ft, [&](auto tt) -> int {
        using S = typename decltype(tt)::type;
        if constexpr (!is_exact_field_v<S>) {
            throw input_error("check: exact field required");
        } else {
            Pencil<S> l = pencil_from_json<S>(l_doc, ft);
            MatPoly<S> p = matpoly_from_json<S>(p_doc, ft);
            AnsatzRecovery<S> r = recover_ansatz(l, p);
            Json res{{"schema", "v1"}, {"command", "check"}, {"member", r.member}};
            if (r.member) {
                Json asc = Json::array();
                Ansatz<S> a = Ansatz<S>::from_descending(r.v, p.basis());
                for (const S& c : a.ascending()) asc.push_back(scalar_to_json(c));
                res["ansatz"] = std::move(asc);
                emit(out, res);
                return kExitOk;
            }
            res["failure"] = r.failure;
            res["witness_block_row"] = r.witness_block_row;
            emit(out, res);
            return kExitRejected;
        }
    });
}

// ---- condition -------------------------------------------------------------

Json instance_report_json(const InstanceReport& rep) {
    Json eigs = Json::array();
    for (const EigReport& e : rep.eigs) {
        eigs.push_back(Json{{"lambda_re", e.lambda.real()},
                            {"lambda_im", e.lambda.imag()},
                            {"in_interval", e.in_interval},
                            {"rhat", e.rhat},
                            {"rhat_bound", e.rhat_bound},
                            {"residual", e.residual},
                            {"ok", e.ok}});
    }
    return Json{{"n", rep.n},
                {"k", rep.k},
                {"p_norm", rep.p_norm},
                {"l_norm", rep.l_norm},
                {"l_norm_bound", rep.l_norm_bound},
                {"l_norm_ok", rep.l_norm_ok},
                {"eigenvalues", std::move(eigs)},
                {"pass", rep.pass}};
}

int cmd_condition(const std::string& file, int trials, std::uint64_t seed, bool as_json,
                  std::ostream& out) {
    Json doc = load_json(file);
    FieldTag ft = parse_field_tag(doc.at("field"));
    if (ft.kind != FieldTag::Kind::F64)
        throw input_error("condition: f64 document required (conditioning is a floating-point analysis)");
    MatPoly<double> p = matpoly_from_json<double>(doc, ft);
    if (p.basis().kind() != BasisKind::ChebyshevT)
        throw input_error("condition: chebyshev-t basis required");

    ConditioningReport report = bound_report(p, trials, seed);

    if (as_json) {
        Json res{{"schema", "v1"}, {"command", "condition"}, {"seed", seed}};
        Json insts = Json::array();
        for (const auto& inst : report.instances) insts.push_back(instance_report_json(inst));
        res["instances"] = std::move(insts);
        res["pass"] = report.pass;
        emit(out, res);
    } else {
        out << "conditioning report (seed " << seed << ")\n";
        for (std::size_t i = 0; i < report.instances.size(); ++i) {
            const auto& inst = report.instances[i];
            out << "instance " << i << ": n=" << inst.n << " k=" << inst.k
                << "  |P|=" << inst.p_norm << "  |L|=" << inst.l_norm
                << "  bound=" << inst.l_norm_bound << (inst.l_norm_ok ? "  ok" : "  VIOLATED")
                << "\n";
            for (const auto& e : inst.eigs) {
                out << "  lambda = " << e.lambda.real();
                if (e.lambda.imag() != 0) out << (e.lambda.imag() > 0 ? "+" : "") << e.lambda.imag() << "i";
                if (e.in_interval)
                    out << "  rhat = " << e.rhat << " <= " << e.rhat_bound
                        << (e.ok ? "  ok" : "  VIOLATED");
                else
                    out << "  (outside [-1,1], not checked)";
                out << "\n";
            }
        }
        out << (report.pass ? "all bounds hold\n" : "BOUND VIOLATIONS FOUND\n");
    }
    return report.pass ? kExitOk : kExitRejected;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"matrix polynomial linearizations via Bezout block matrices"};
    app.name("bezlin");
    app.require_subcommand(0, 1);

    std::string file, ansatz_csv, v_csv, p1_str, p2_str;
    std::vector<std::string> lt_multipliers;
    std::string field_name = "rational", side_name = "left";
    std::string v_file, p_file, pencil_file;
    Index grade = 0;
    int which = 1;
    int trials = 0;
    std::uint64_t seed = 1;
    bool as_json = false;

    auto* dl = app.add_subcommand("dl", "block-symmetric pencil for an ansatz vector");
    dl->add_option("file", file, "matrix polynomial document")->required();
    dl->add_option("--ansatz", ansatz_csv, "ansatz coefficients, ascending degree (v0 first)")
        ->required();

    auto* bdl = app.add_subcommand("bdl", "pencil for a scalar polynomial of any degree");
    bdl->add_option("file", file, "matrix polynomial document")->required();
    bdl->add_option("--v", v_csv, "polynomial coefficients, ascending degree")->required();

    auto* bez = app.add_subcommand("bezout", "Bezout matrix of two scalar polynomials");
    bez->add_option("p1", p1_str, "first polynomial, e.g. \"x^2+3/2*x-1\"")->required();
    bez->add_option("p2", p2_str, "second polynomial")->required();
    bez->add_option("--grade", grade, "declared grade of both polynomials")->required();
    bez->add_option("--field", field_name, "rational | gf<p> | gaussian-rational");
    bez->add_option("--lt", lt_multipliers, "two multiplier polynomials M1 M2 with M1*p1 = M2*p2")
        ->expected(2);

    auto* comp = app.add_subcommand("companion", "companion matrix of a matrix polynomial");
    comp->add_option("file", file)->required();
    comp->add_option("--which", which, "1 (first) or 2 (second)")->check(CLI::IsMember({1, 2}));

    auto* divi = app.add_subcommand("divide", "matrix polynomial Euclidean division");
    divi->add_option("V", v_file, "dividend document")->required();
    divi->add_option("P", p_file, "divisor document")->required();
    divi->add_option("--side", side_name, "left: V = A P + Q; right: V = P A + S");

    auto* chk = app.add_subcommand("check", "recover the ansatz of a pencil, or reject");
    chk->add_option("pencil", pencil_file, "pencil document")->required();
    chk->add_option("P", p_file, "matrix polynomial document")->required();

    auto* cond = app.add_subcommand("condition", "conditioning report for a Chebyshev polynomial");
    cond->add_option("file", file)->required();
    cond->add_option("--trials", trials, "extra random instances of the same shape");
    cond->add_option("--seed", seed, "seed for the random trials");
    cond->add_flag("--json", as_json, "machine-readable report");

    std::vector<const char*> argv;
    argv.push_back("bezlin");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    }

    try {
        if (*dl) return cmd_dl(file, ansatz_csv, out);
        if (*bdl) return cmd_bdl(file, v_csv, out);
        if (*bez) return cmd_bezout(p1_str, p2_str, grade, field_name, lt_multipliers, out);
        if (*comp) return cmd_companion(file, which, out);
        if (*divi) return cmd_divide(v_file, p_file, side_name, out);
        if (*chk) return cmd_check(pencil_file, p_file, out);
        if (*cond) return cmd_condition(file, trials, seed, as_json, out);
        out << app.help();
        return kExitOk;
    } catch (const internal_error& e) {
        err << "internal assertion failure: " << e.what() << "\n";
        return kExitInternal;
    } catch (const input_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const Json::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    }
}

}  // namespace bezlin
