#include "quadzeta/arcspace.hpp"

#include <stdexcept>

#include "quadzeta/error.hpp"
#include "quadzeta/scissor.hpp"

namespace quadzeta {

std::string_view to_string(Selector selector) noexcept
{
    switch (selector) {
    case Selector::naive: return "naive";
    case Selector::plus: return "plus";
    case Selector::minus: return "minus";
    }
    return "naive";
}

Selector parse_selector(std::string_view text)
{
    if (text == "naive") {
        return Selector::naive;
    }
    if (text == "plus" || text == "+1" || text == "1") {
        return Selector::plus;
    }
    if (text == "minus" || text == "-1") {
        return Selector::minus;
    }
    throw std::invalid_argument("unknown selector '" + std::string(text) + "'");
}

void QuadraticGerm::validate() const
{
    if (plus < 0 || minus < 0 || rank() < 1 || rank() > dim) {
        throw Error(ErrorKind::invalid_germ,
                    "need 1 <= s + t <= d, got d=" + std::to_string(dim) + " s=" + std::to_string(plus)
                        + " t=" + std::to_string(minus));
    }
}

namespace arcspace {

namespace {

using LP = LaurentPolynomial;
using SE = SetExpression;

int level_of(Selector selector)
{
    return selector == Selector::plus ? 1 : -1;
}

void require_order(int n)
{
    if (n < 1) {
        throw std::invalid_argument("arc order must be at least 1");
    }
}

} // namespace

// Arc gamma = a_1 t + ... + a_n t^n, a_i in R^d; w denotes the (x, y)-block
// of a coefficient vector and B the polar form of f on it (nondegenerate).
// With a_1^w = ... = a_{e-1}^w = 0 and a_e^w != 0, the coefficient of t^k in
// f o gamma vanishes for k < 2e, equals f(a_e^w) at k = 2e, and for k > 2e is
// 2 B(a_e^w, a_{k-e}^w) plus terms in a_{e+1}^w .. a_{k-e-1}^w.
//
//  * 2e < n: f(a_e^w) = 0 puts a_e^w on the cone minus the origin; the
//    conditions at t^(2e+1) .. t^(n-1) each cut one affine hyperplane in
//    a_{e+1}^w .. a_{n-e-1}^w; the condition at t^n is a hyperplane (signed)
//    or its complement (naive) in a_{n-e}^w; a_{n-e+1}^w .. a_n^w are free.
//    Covering the cone by the loci where a given coordinate of B(a_e^w, .) is
//    the first nonzero one makes each piece an algebraic product, so every
//    hyperplane contributes u^(q-1) and its complement u^(q-1)(u-1).
//  * 2e = n: f(a_e^w) = +-1 (signed) or != 0 (naive); a_{e+1}^w .. free.
//  * 2e > n: the t^n coefficient vanishes, no contribution.
// The z-block (d - q coordinates of every a_i) is free throughout.
ArcStratumReport stratify(const QuadraticGerm& germ, int n, Selector selector)
{
    germ.validate();
    require_order(n);
    const int q = germ.rank();
    const int s = germ.plus;
    const int t = germ.minus;
    const SE free_z = SE::affine_space(n * (germ.dim - q));

    ArcStratumReport report;
    report.order = n;
    report.selector = selector;

    for (int e = 1; 2 * e <= n; ++e) {
        const SE free_tail = SE::affine_space(e * q);
        std::string description;
        std::vector<SE> factors;
        if (2 * e < n) {
            const SE cone = SE::quadric_affine(0, s, t);
            const SE leading = SE::difference(cone, SE::point());
            const int forced = n - 2 * e;
            factors.push_back(leading);
            if (selector == Selector::naive) {
                factors.push_back(SE::affine_space((forced - 1) * (q - 1)));
                factors.push_back(SE::product({SE::affine_space(q - 1), SE::punctured_line()}));
            } else {
                factors.push_back(SE::affine_space(forced * (q - 1)));
            }
            factors.push_back(free_tail);
            factors.push_back(free_z);
            description = "e=" + std::to_string(e) + ": leading coefficient on the cone minus origin, "
                + std::to_string(forced) + " hyperplane condition(s)"
                + (selector == Selector::naive ? " (last one open)" : "") + ", " + std::to_string(e)
                + " free coefficient(s)";
        } else {
            SE leading = selector == Selector::naive
                ? SE::difference(SE::affine_space(q), SE::quadric_affine(0, s, t))
                : SE::quadric_affine(level_of(selector), s, t);
            factors = {leading, free_tail, free_z};
            description = "e=" + std::to_string(e) + ": leading coefficient "
                + (selector == Selector::naive ? std::string("off the cone")
                                               : std::string("on the level set ") + (selector == Selector::plus ? "+1" : "-1"))
                + ", " + std::to_string(e) + " free coefficient(s)";
        }
        ArcStratum stratum{std::move(description), SE::product(std::move(factors))};
        report.total_beta += scissor::beta_eval(stratum.set);
        report.strata.push_back(std::move(stratum));
    }
    return report;
}

LaurentPolynomial arc_beta_closed(const QuadraticGerm& germ, int n, Selector selector)
{
    germ.validate();
    require_order(n);
    const int q = germ.rank();
    const LP cone = scissor::beta_x0(germ.plus, germ.minus);
    const LP punctured_cone = cone - LP(1);

    LP bracket;
    for (int e = 1; 2 * e < n; ++e) {
        const int forced = n - 2 * e;
        LP fibre;
        if (selector == Selector::naive) {
            fibre = LP::monomial((forced - 1) * (q - 1)) * (LP::monomial(q) - LP::monomial(q - 1));
        } else {
            fibre = LP::monomial(forced * (q - 1));
        }
        bracket += punctured_cone * fibre * LP::monomial(e * q);
    }
    if (n % 2 == 0) {
        const int e = n / 2;
        LP leading;
        if (selector == Selector::naive) {
            leading = LP::monomial(q) - cone;
        } else {
            leading = scissor::beta_quadric(level_of(selector), germ.plus, germ.minus);
        }
        bracket += leading * LP::monomial(e * q);
    }
    return bracket.shifted(static_cast<Exponent>(n) * (germ.dim - q));
}

TruncatedSeries zeta(const QuadraticGerm& germ, Selector selector, int order)
{
    germ.validate();
    TruncatedSeries::CoefficientMap coefficients;
    for (int n = 1; n <= order; ++n) {
        coefficients.emplace(n, stratify(germ, n, selector).total_beta.shifted(-static_cast<Exponent>(n) * germ.dim));
    }
    return TruncatedSeries(order, coefficients);
}

TruncatedSeries zeta_closed(const QuadraticGerm& germ, Selector selector, int order)
{
    germ.validate();
    TruncatedSeries::CoefficientMap coefficients;
    for (int n = 1; n <= order; ++n) {
        coefficients.emplace(n, arc_beta_closed(germ, n, selector).shifted(-static_cast<Exponent>(n) * germ.dim));
    }
    return TruncatedSeries(order, coefficients);
}

LaurentPolynomial t2_signed_closed(int s, int t, Sign sign)
{
    if (s < 0 || t < 0 || s + t < 1) {
        throw Error(ErrorKind::invalid_germ, "need s + t >= 1");
    }
    const LP beta = sign == Sign::plus ? scissor::beta_x1(s, t) : scissor::beta_xneg1(s, t);
    return beta.shifted(-(s + t));
}

LaurentPolynomial t2_naive_closed(int s, int t)
{
    if (s < 0 || t < 0 || s + t < 1) {
        throw Error(ErrorKind::invalid_germ, "need s + t >= 1");
    }
    return (LP::monomial(s + t) - scissor::beta_x0(s, t)).shifted(-(s + t));
}

} // namespace arcspace

} // namespace quadzeta
