#include "quadzeta/json_io.hpp"

#include <string>

#include "quadzeta/error.hpp"

namespace quadzeta::json_io {

namespace {

[[noreturn]] void shape_error(const std::string& what)
{
    throw Error(ErrorKind::syntax_error, "malformed JSON: " + what);
}

void require(bool condition, const std::string& what)
{
    if (!condition) {
        shape_error(what);
    }
}

Integer decode_integer(const json& value)
{
    if (value.is_number_integer()) {
        return Integer(std::to_string(value.get<long long>()));
    }
    require(value.is_string(), "expected a decimal integer string");
    try {
        return Integer(value.get<std::string>());
    } catch (const std::invalid_argument&) {
        shape_error("bad integer '" + value.get<std::string>() + "'");
    }
}

int small_int(const json& object, const char* key)
{
    require(object.contains(key) && object.at(key).is_number_integer(), std::string("missing integer '") + key + "'");
    return object.at(key).get<int>();
}

} // namespace

json encode(const LaurentPolynomial& p)
{
    json out = json::array();
    for (const auto& [e, c] : p.terms()) {
        out.push_back(json::array({e, c.get_str()}));
    }
    return out;
}

json encode(const TruncatedSeries& series)
{
    json terms = json::array();
    for (const auto& [n, value] : series.coefficients()) {
        terms.push_back(json::array({n, encode(value)}));
    }
    return json{{"order", series.order()}, {"terms", terms}};
}

json encode(const SetExpression& e)
{
    using K = SetExpression::Kind;
    auto node = [&e](const char* op) {
        json children = json::array();
        for (const auto& child : e.children()) {
            children.push_back(encode(child));
        }
        return json{{"op", op}, {"children", children}};
    };
    switch (e.kind()) {
    case K::affine_space: return json{{"atom", "affine_space"}, {"dim", e.dim()}};
    case K::punctured_line: return json{{"atom", "punctured_line"}};
    case K::point: return json{{"atom", "point"}};
    case K::sphere: return json{{"atom", "sphere"}, {"dim", e.dim()}};
    case K::projective_space: return json{{"atom", "projective_space"}, {"dim", e.dim()}};
    case K::quadric_affine:
        return json{{"atom", "quadric_affine"}, {"c", e.level()}, {"s", e.plus()}, {"t", e.minus()}};
    case K::quadric_projective: return json{{"atom", "quadric_projective"}, {"m", e.plus()}, {"M", e.minus()}};
    case K::product: return node("product");
    case K::disjoint_union: return node("disjoint_union");
    case K::difference: return node("difference");
    }
    return json();
}

json encode(const PolynomialGerm& germ)
{
    json terms = json::array();
    for (const auto& [e, c] : germ.polynomial().terms()) {
        terms.push_back(json::array({e, c.get_str()}));
    }
    return json{{"nvars", germ.nvars()}, {"terms", terms}};
}

json encode(const Inertia& inertia)
{
    return json{{"nvars", inertia.nvars}, {"s", inertia.plus},         {"t", inertia.minus},
                {"rank", inertia.rank()}, {"corank", inertia.corank()}, {"index", inertia.index()}};
}

json encode(const ArcStratumReport& report)
{
    json strata = json::array();
    for (const auto& stratum : report.strata) {
        strata.push_back(json{{"description", stratum.description},
                              {"set", encode(stratum.set)},
                              {"set_text", to_string(stratum.set)}});
    }
    return json{{"n", report.order},
                {"selector", std::string(to_string(report.selector))},
                {"strata", strata},
                {"total_beta", encode(report.total_beta)}};
}

LaurentPolynomial decode_laurent(const json& value)
{
    require(value.is_array(), "polynomial must be an array of [exponent, coefficient] pairs");
    LaurentPolynomial p;
    for (const auto& term : value) {
        require(term.is_array() && term.size() == 2 && term[0].is_number_integer(),
                "polynomial term must be [exponent, coefficient]");
        p += LaurentPolynomial::monomial(term[0].get<Exponent>(), decode_integer(term[1]));
    }
    return p;
}

TruncatedSeries decode_series(const json& value)
{
    require(value.is_object(), "series must be an object");
    const int order = small_int(value, "order");
    require(order >= 1, "series order must be at least 1");
    require(value.contains("terms") && value.at("terms").is_array(), "series needs a 'terms' array");
    TruncatedSeries::CoefficientMap coefficients;
    for (const auto& term : value.at("terms")) {
        require(term.is_array() && term.size() == 2 && term[0].is_number_integer(), "series term must be [n, polynomial]");
        const int n = term[0].get<int>();
        require(n >= 1 && n <= order, "series index out of range");
        require(coefficients.emplace(n, decode_laurent(term[1])).second, "repeated series index");
    }
    return TruncatedSeries(order, coefficients);
}

SetExpression decode_set_expression(const json& value)
{
    using SE = SetExpression;
    if (!value.is_object()) {
        throw Error(ErrorKind::malformed_expression, "set expression node must be an object");
    }
    if (value.contains("atom")) {
        if (!value.at("atom").is_string()) {
            throw Error(ErrorKind::malformed_expression, "'atom' must be a string");
        }
        const auto atom = value.at("atom").get<std::string>();
        auto field = [&value](const char* key) {
            if (!value.contains(key) || !value.at(key).is_number_integer()) {
                throw Error(ErrorKind::malformed_expression, std::string("atom needs integer '") + key + "'");
            }
            return value.at(key).get<int>();
        };
        if (atom == "affine_space") return SE::affine_space(field("dim"));
        if (atom == "punctured_line") return SE::punctured_line();
        if (atom == "point") return SE::point();
        if (atom == "sphere") return SE::sphere(field("dim"));
        if (atom == "projective_space") return SE::projective_space(field("dim"));
        if (atom == "quadric_affine") return SE::quadric_affine(field("c"), field("s"), field("t"));
        if (atom == "quadric_projective") return SE::quadric_projective(field("m"), field("M"));
        throw Error(ErrorKind::malformed_expression, "unknown atom '" + atom + "'");
    }
    if (!value.contains("op") || !value.at("op").is_string() || !value.contains("children")
        || !value.at("children").is_array()) {
        throw Error(ErrorKind::malformed_expression, "node needs 'atom', or 'op' with 'children'");
    }
    std::vector<SE> children;
    for (const auto& child : value.at("children")) {
        children.push_back(decode_set_expression(child));
    }
    const auto op = value.at("op").get<std::string>();
    if (op == "product") return SE::product(std::move(children));
    if (op == "disjoint_union") return SE::disjoint_union(std::move(children));
    if (op == "difference") {
        if (children.size() != 2) {
            throw Error(ErrorKind::malformed_expression, "difference takes [ambient, closed subset]");
        }
        return SE::difference(children[0], children[1]);
    }
    throw Error(ErrorKind::malformed_expression, "unknown op '" + op + "'");
}

PolynomialGerm decode_germ(const json& value)
{
    require(value.is_object(), "germ must be an object");
    const int nvars = small_int(value, "nvars");
    require(nvars >= 1, "nvars must be positive");
    require(value.contains("terms") && value.at("terms").is_array(), "germ needs a 'terms' array");
    Polynomial p(nvars);
    for (const auto& term : value.at("terms")) {
        require(term.is_array() && term.size() == 2 && term[0].is_array(), "germ term must be [[e1..ed], \"p/q\"]");
        require(static_cast<int>(term[0].size()) == nvars, "exponent vector length must equal nvars");
        ExponentVector e;
        for (const auto& x : term[0]) {
            require(x.is_number_integer() && x.get<int>() >= 0, "exponents must be nonnegative integers");
            e.push_back(x.get<int>());
        }
        Rational c;
        if (term[1].is_number_integer()) {
            c = Rational(decode_integer(term[1]));
        } else {
            require(term[1].is_string(), "coefficient must be a \"p/q\" string");
            try {
                c = Rational(term[1].get<std::string>());
            } catch (const std::invalid_argument&) {
                shape_error("bad rational '" + term[1].get<std::string>() + "'");
            }
            require(c.get_den() != 0, "zero denominator");
            c.canonicalize();
        }
        p += Polynomial(nvars, {{e, c}});
    }
    return PolynomialGerm(std::move(p));
}

} // namespace quadzeta::json_io
