#include "quadzeta/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "quadzeta/arcspace.hpp"
#include "quadzeta/discriminate.hpp"
#include "quadzeta/error.hpp"
#include "quadzeta/inertia.hpp"
#include "quadzeta/json_io.hpp"
#include "quadzeta/recover.hpp"
#include "quadzeta/scissor.hpp"
#include "quadzeta/selfcheck.hpp"
#include "quadzeta/split.hpp"

namespace quadzeta::cli {

namespace {

using json = nlohmann::json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_stream(std::istream& in)
{
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// "-" is stdin, an existing path is read, anything else is taken literally
// when `allow_literal` is set.
std::string read_source(const std::string& arg, std::istream& in, bool allow_literal)
{
    if (arg == "-") {
        return read_stream(in);
    }
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec)) {
        std::ifstream file(arg);
        if (!file) {
            throw UsageError("cannot open " + arg);
        }
        return read_stream(file);
    }
    if (!allow_literal) {
        throw UsageError("no such file: " + arg);
    }
    return arg;
}

json parse_json_text(const std::string& text)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::syntax_error, std::string("invalid JSON: ") + e.what());
    }
}

bool looks_like_json(const std::string& text)
{
    const auto pos = text.find_first_not_of(" \t\r\n");
    return pos != std::string::npos && (text[pos] == '{' || text[pos] == '[');
}

LaurentPolynomial read_coefficient(const std::string& arg, std::istream& in)
{
    const std::string text = read_source(arg, in, true);
    if (looks_like_json(text)) {
        return json_io::decode_laurent(parse_json_text(text));
    }
    return parse_laurent(text);
}

PolynomialGerm read_germ(const std::string& arg, std::istream& in, std::optional<int> dim)
{
    const std::string text = read_source(arg, in, true);
    if (looks_like_json(text)) {
        auto germ = json_io::decode_germ(parse_json_text(text));
        if (dim && *dim != germ.nvars()) {
            throw Error(ErrorKind::dimension_mismatch, "--dim disagrees with the JSON nvars");
        }
        return germ;
    }
    return parse_germ(text, dim);
}

void print_json(std::ostream& out, const json& value)
{
    out << value.dump() << '\n';
}

std::string change_text(const SplitResult& r)
{
    std::ostringstream out;
    for (std::size_t i = 0; i < r.change.size(); ++i) {
        out << "  x" << i + 1 << " -> " << to_string(r.change[i]) << '\n';
    }
    return out.str();
}

json discrimination_json(const Discrimination& d)
{
    json out{{"verdict", d.distinguished ? "distinguished" : "not_distinguished"},
             {"compared_up_to", d.compared_up_to},
             {"conditional", d.conditional},
             {"inertia_f", json_io::encode(d.f_inertia)},
             {"inertia_g", json_io::encode(d.g_inertia)}};
    if (d.distinguished) {
        out["witness"] = json{{"selector", std::string(to_string(d.selector))}, {"n", d.n}};
    }
    return out;
}

struct Options {
    bool json = false;

    // beta
    int m = -1;
    int big_m = -1;
    int s = -1;
    int t = -1;
    std::string expr_source;

    // zeta
    int dim = 0;
    int plus = 0;
    int minus = 0;
    std::string selector = "naive";
    int order = 6;
    bool strata = false;

    // recover
    std::string plus_coeff;
    std::string minus_coeff;
    std::string naive_coeff;

    // germs
    std::string poly;
    std::optional<int> poly_dim;
    int jet = 3;
    std::string f;
    std::string g;

    int max = 12;
    const selfcheck::ClosedForms* forms = nullptr;
};

int dispatch(CLI::App& app, const Options& o, std::ostream& out, std::istream& in)
{
    auto beta_out = [&](const LaurentPolynomial& p) {
        if (o.json) {
            print_json(out, json_io::encode(p));
        } else {
            out << to_string(p) << '\n';
        }
        return 0;
    };

    if (auto* beta = app.get_subcommand("beta"); beta->parsed()) {
        if (beta->get_subcommand("x0")->parsed()) {
            return beta_out(scissor::beta_x0(o.m, o.big_m));
        }
        if (beta->get_subcommand("z")->parsed()) {
            return beta_out(scissor::beta_z(o.m, o.big_m));
        }
        if (beta->get_subcommand("x1")->parsed()) {
            return beta_out(scissor::beta_x1(o.s, o.t));
        }
        if (beta->get_subcommand("xneg1")->parsed()) {
            return beta_out(scissor::beta_xneg1(o.s, o.t));
        }
        const std::string text = read_source(o.expr_source, in, looks_like_json(o.expr_source));
        const auto expression = json_io::decode_set_expression(parse_json_text(text));
        return beta_out(scissor::beta_eval(expression));
    }

    if (app.get_subcommand("zeta")->parsed()) {
        const QuadraticGerm germ{o.dim, o.plus, o.minus};
        germ.validate();
        const Selector selector = parse_selector(o.selector);
        const auto series = arcspace::zeta(germ, selector, o.order);
        if (o.json) {
            if (!o.strata) {
                print_json(out, json_io::encode(series));
                return 0;
            }
            json reports = json::array();
            for (int n = 1; n <= o.order; ++n) {
                reports.push_back(json_io::encode(arcspace::stratify(germ, n, selector)));
            }
            print_json(out, json{{"series", json_io::encode(series)}, {"strata", reports}});
            return 0;
        }
        out << to_string(series) << '\n';
        if (o.strata) {
            for (int n = 1; n <= o.order; ++n) {
                const auto report = arcspace::stratify(germ, n, selector);
                out << "n=" << n << " (" << to_string(selector) << "): beta(A_n) = " << to_string(report.total_beta)
                    << '\n';
                for (const auto& stratum : report.strata) {
                    out << "  " << stratum.description << "\n    " << to_string(stratum.set)
                        << "  beta = " << to_string(scissor::beta_eval(stratum.set)) << '\n';
                }
            }
        }
        return 0;
    }

    if (app.get_subcommand("recover")->parsed()) {
        const auto result = recover_signature(read_coefficient(o.plus_coeff, in), read_coefficient(o.minus_coeff, in));
        if (o.json) {
            print_json(out, json{{"s", result.s}, {"t", result.t}});
        } else {
            out << "s = " << result.s << ", t = " << result.t << '\n';
        }
        return 0;
    }

    if (app.get_subcommand("recover-naive")->parsed()) {
        const auto r = recover_minmax_naive(read_coefficient(o.naive_coeff, in));
        if (o.json) {
            json j{{"status", r.determined ? "determined" : "ambiguous"}};
            if (r.determined) {
                j["m"] = r.min;
                j["M"] = r.max;
            } else {
                j["reason"] = r.reason;
            }
            print_json(out, j);
        } else if (r.determined) {
            out << "m = " << r.min << ", M = " << r.max << '\n';
        } else {
            out << "ambiguous: " << r.reason << '\n';
        }
        return 0;
    }

    if (app.get_subcommand("inertia")->parsed()) {
        const auto inertia = hessian_inertia(read_germ(o.poly, in, o.poly_dim));
        if (o.json) {
            print_json(out, json_io::encode(inertia));
        } else {
            out << "s = " << inertia.plus << ", t = " << inertia.minus << ", rank = " << inertia.rank()
                << ", corank = " << inertia.corank() << ", index = " << inertia.index() << '\n';
        }
        return 0;
    }

    if (app.get_subcommand("split")->parsed()) {
        const auto f = read_germ(o.poly, in, o.poly_dim);
        const auto r = split_jet(f, o.jet);
        const bool verified = verify_split(f, r);
        if (o.json) {
            json change = json::array();
            for (const auto& c : r.change) {
                change.push_back(to_string(c));
            }
            json diagonal = json::array();
            for (const auto& d : r.diagonal) {
                diagonal.push_back(d.get_str());
            }
            print_json(out, json{{"jet_order", r.jet_order},
                                 {"inertia", json_io::encode(r.inertia)},
                                 {"change", change},
                                 {"diagonal", diagonal},
                                 {"quadratic_part", to_string(r.quadratic_part)},
                                 {"normal_form", to_string(r.normal_form())},
                                 {"remainder", to_string(r.remainder)},
                                 {"verified", verified}});
        } else {
            out << "inertia: s = " << r.inertia.plus << ", t = " << r.inertia.minus
                << ", corank = " << r.inertia.corank() << '\n'
                << "change (to order " << r.jet_order << "):\n"
                << change_text(r) << "quadratic part: " << to_string(r.quadratic_part) << '\n'
                << "normal form: " << to_string(r.normal_form()) << '\n'
                << "remainder: " << to_string(r.remainder) << '\n'
                << "verified: " << (verified ? "yes" : "NO") << '\n';
        }
        return verified ? 0 : 1;
    }

    if (app.get_subcommand("discriminate")->parsed()) {
        const auto d = discriminate(read_germ(o.f, in, o.poly_dim), read_germ(o.g, in, o.poly_dim), o.order);
        if (o.json) {
            print_json(out, discrimination_json(d));
        } else if (d.distinguished) {
            out << "distinguished at T^" << d.n << " (" << to_string(d.selector)
                << " zeta): not blow-Nash equivalent" << (d.conditional ? " (conditional on the quadratic reduction)" : "")
                << '\n';
        } else {
            out << "not distinguished up to T^" << d.compared_up_to
                << (d.conditional ? " (conditional on the quadratic reduction)" : "") << '\n';
        }
        return 0;
    }

    if (app.get_subcommand("selfcheck")->parsed()) {
        const auto report = selfcheck::run(o.max, *o.forms);
        if (o.json) {
            json checks = json::array();
            for (const auto& c : report.checks) {
                checks.push_back(json{{"name", c.name},
                                      {"checked", c.checked},
                                      {"failed", c.failed},
                                      {"first_failure", c.first_failure}});
            }
            print_json(out, json{{"max", report.max}, {"ok", report.ok()}, {"checks", checks}});
        } else {
            out << report.to_text();
        }
        return report.ok() ? 0 : 1;
    }
    throw UsageError("no command given");
}

void envelope(std::ostream& stream, std::string_view name, const std::string& detail)
{
    stream << json{{"error", std::string(name)}, {"detail", detail}}.dump() << '\n';
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in)
{
    return run(args, out, err, in, selfcheck::default_closed_forms());
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in,
        const selfcheck::ClosedForms& forms)
{
    CLI::App app{"Virtual Poincare polynomials and zeta functions of quadratic Nash germs", "quadzeta"};
    app.fallthrough();
    app.require_subcommand(1);
    Options o;
    o.forms = &forms;
    app.add_flag("--json", o.json, "Machine-readable JSON output");

    auto* beta = app.add_subcommand("beta", "Virtual Poincare polynomial of a quadric or set expression");
    beta->require_subcommand(1);
    for (const char* name : {"x0", "z"}) {
        auto* sub = beta->add_subcommand(name, std::string(name) == "x0" ? "Cone X_{m,M}" : "Projective quadric Z_{m,M}");
        sub->add_option("--m", o.m, "m")->required()->check(CLI::NonNegativeNumber);
        sub->add_option("--M", o.big_m, "M")->required()->check(CLI::NonNegativeNumber);
    }
    for (const char* name : {"x1", "xneg1"}) {
        auto* sub = beta->add_subcommand(name, std::string(name) == "x1" ? "Level set X^1_{s,t}" : "Level set X^-1_{s,t}");
        sub->add_option("--s", o.s, "number of positive squares")->required()->check(CLI::NonNegativeNumber);
        sub->add_option("--t", o.t, "number of negative squares")->required()->check(CLI::NonNegativeNumber);
    }
    auto* expr = beta->add_subcommand("expr", "Set expression given as JSON (file, '-' for stdin, or inline)");
    expr->add_option("source", o.expr_source, "JSON file, '-' or inline JSON")->required();

    auto* zeta = app.add_subcommand("zeta", "Naive or signed zeta function of sum x^2 - sum y^2");
    zeta->add_option("--dim", o.dim, "ambient dimension d")->required();
    zeta->add_option("--plus", o.plus, "number of positive squares s")->required();
    zeta->add_option("--minus", o.minus, "number of negative squares t")->required();
    zeta->add_option("--selector", o.selector, "naive, plus or minus")
        ->check(CLI::IsMember({"naive", "plus", "minus"}));
    zeta->add_option("--order", o.order, "truncation order N")->check(CLI::PositiveNumber);
    zeta->add_flag("--strata", o.strata, "Dump the arc-space stratification for every n");

    auto* recover = app.add_subcommand("recover", "Recover (s, t) from signed T^2 coefficients");
    recover->add_option("--plus-coeff", o.plus_coeff, "T^2 coefficient of Z^{+1} (JSON or text)")->required();
    recover->add_option("--minus-coeff", o.minus_coeff, "T^2 coefficient of Z^{-1} (JSON or text)")->required();

    auto* recover_naive = app.add_subcommand("recover-naive", "Recover (min, max) from the naive T^2 coefficient");
    recover_naive->add_option("--coeff", o.naive_coeff, "T^2 coefficient of Z (JSON or text)")->required();

    auto* inertia = app.add_subcommand("inertia", "Hessian inertia (s, t, corank, index) of a germ");
    inertia->add_option("--poly", o.poly, "germ text, JSON, file or '-'")->required();
    inertia->add_option("--dim", o.poly_dim, "number of variables");

    auto* split = app.add_subcommand("split", "Jet-level splitting f o phi = Q + F");
    split->add_option("--poly", o.poly, "germ text, JSON, file or '-'")->required();
    split->add_option("--jet", o.jet, "jet order (>= 3)")->check(CLI::Range(3, 64));
    split->add_option("--dim", o.poly_dim, "number of variables");

    auto* disc = app.add_subcommand("discriminate", "Compare zeta data of two germs");
    disc->add_option("--f", o.f, "first germ")->required();
    disc->add_option("--g", o.g, "second germ")->required();
    disc->add_option("--order", o.order, "compare up to T^N")->check(CLI::PositiveNumber);
    disc->add_option("--dim", o.poly_dim, "number of variables");

    auto* check = app.add_subcommand("selfcheck", "Run the identity grids");
    check->add_option("--max", o.max, "largest quadric index")->check(CLI::Range(2, 40));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        return dispatch(app, o, out, in);
    } catch (const Error& e) {
        envelope(o.json ? out : err, e.name(), e.what());
        return 1;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    }
}

} // namespace quadzeta::cli
