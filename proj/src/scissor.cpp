#include "quadzeta/scissor.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <tuple>

#include "quadzeta/error.hpp"

namespace quadzeta::scissor {

namespace {

using LP = LaurentPolynomial;

LP u_pow(Exponent k)
{
    return LP::monomial(k);
}

std::string signature(int s, int t)
{
    return "(" + std::to_string(s) + ", " + std::to_string(t) + ")";
}

void require_nonnegative(int s, int t)
{
    if (s < 0 || t < 0) {
        throw std::invalid_argument("quadric indices must be nonnegative, got " + signature(s, t));
    }
}

// Keyed by (kind tag, level, s, t); tag 0 = affine, 1 = projective.
class QuadricCache {
public:
    bool lookup(const std::tuple<int, int, int, int>& key, LP& out)
    {
        std::lock_guard lock(mutex_);
        auto it = values_.find(key);
        if (it == values_.end()) {
            return false;
        }
        out = it->second;
        return true;
    }

    void store(const std::tuple<int, int, int, int>& key, const LP& value)
    {
        std::lock_guard lock(mutex_);
        values_.insert_or_assign(key, value);
    }

private:
    std::mutex mutex_;
    std::map<std::tuple<int, int, int, int>, LP> values_;
};

QuadricCache& cache()
{
    static QuadricCache instance;
    return instance;
}

} // namespace

LaurentPolynomial beta_x0(int m, int big_m)
{
    require_nonnegative(m, big_m);
    const int lo = std::min(m, big_m);
    const int hi = std::max(m, big_m);
    if (lo == 0) {
        return LP(1);
    }
    return u_pow(lo + hi - 1) - u_pow(hi - 1) + u_pow(lo);
}

LaurentPolynomial beta_z(int m, int big_m)
{
    require_nonnegative(m, big_m);
    if (m == 0 || big_m == 0) {
        throw Error(ErrorKind::empty_projective_quadric,
                    "Z" + signature(m, big_m) + " has no real points");
    }
    const int lo = std::min(m, big_m);
    const int hi = std::max(m, big_m);
    return (LP(1) + u_pow(hi - 1)) * LP::geometric_sum(lo);
}

LaurentPolynomial beta_x1(int s, int t)
{
    require_nonnegative(s, t);
    if (s == 0) {
        return LP();
    }
    if (s <= t) {
        return u_pow(t - 1) * (u_pow(s) - LP(1));
    }
    return u_pow(t) * (u_pow(s - 1) + LP(1));
}

LaurentPolynomial beta_xneg1(int s, int t)
{
    return beta_x1(t, s);
}

LaurentPolynomial beta_quadric(int level, int s, int t)
{
    switch (level) {
    case 0: return beta_x0(s, t);
    case 1: return beta_x1(s, t);
    case -1: return beta_xneg1(s, t);
    default: throw std::invalid_argument("quadric level must be -1, 0 or 1");
    }
}

bool cone_relation_check(int m, int big_m)
{
    return beta_x0(m, big_m) == LP(1) + (LP::u() - LP(1)) * beta_z(m, big_m);
}

SetExpression quadric_reduce(int level, int s, int t)
{
    require_nonnegative(s, t);
    if (s == 0 || t == 0) {
        throw Error(ErrorKind::not_reducible,
                    "X^" + std::to_string(level) + signature(s, t) + " is a base case");
    }
    using SE = SetExpression;
    return SE::disjoint_union({
        SE::product({SE::punctured_line(), SE::affine_space(s + t - 2)}),
        SE::product({SE::quadric_affine(level, s - 1, t - 1), SE::affine_space(1)}),
    });
}

SetExpression projective_quadric_reduce(int m, int big_m)
{
    using SE = SetExpression;
    if (m < 1 || big_m < 1) {
        throw Error(ErrorKind::empty_projective_quadric, "Z" + signature(m, big_m) + " has no real points");
    }
    if (big_m == 1) {
        return SE::disjoint_union({SE::quadric_affine(1, m, 0)});
    }
    return SE::disjoint_union({SE::quadric_affine(1, m, big_m - 1), SE::quadric_projective(m, big_m - 1)});
}

SetExpression quadric_base_case(int level, int s, int t)
{
    require_nonnegative(s, t);
    using SE = SetExpression;
    if (s != 0 && t != 0) {
        throw Error(ErrorKind::malformed_expression,
                    "X^" + std::to_string(level) + signature(s, t) + " is not a base case");
    }
    switch (level) {
    case 0:
        return SE::point();
    case 1:
        return s == 0 ? SE::empty() : SE::sphere(s - 1);
    case -1:
        return t == 0 ? SE::empty() : SE::sphere(t - 1);
    default:
        throw Error(ErrorKind::malformed_expression, "quadric level must be -1, 0 or 1");
    }
}

LaurentPolynomial beta_eval(const SetExpression& e)
{
    using K = SetExpression::Kind;
    switch (e.kind()) {
    case K::affine_space:
        return u_pow(e.dim());
    case K::punctured_line:
        return LP::u() - LP(1);
    case K::point:
        return LP(1);
    case K::sphere:
        // S^0 is two points
        return LP(1) + u_pow(e.dim());
    case K::projective_space:
        return LP::geometric_sum(e.dim() + 1);
    case K::quadric_affine: {
        const std::tuple key{0, e.level(), e.plus(), e.minus()};
        LP value;
        if (cache().lookup(key, value)) {
            return value;
        }
        if (e.plus() == 0 || e.minus() == 0) {
            value = beta_eval(quadric_base_case(e.level(), e.plus(), e.minus()));
        } else {
            value = beta_eval(quadric_reduce(e.level(), e.plus(), e.minus()));
        }
        cache().store(key, value);
        return value;
    }
    case K::quadric_projective: {
        const std::tuple key{1, 0, e.plus(), e.minus()};
        LP value;
        if (cache().lookup(key, value)) {
            return value;
        }
        value = beta_eval(projective_quadric_reduce(e.plus(), e.minus()));
        cache().store(key, value);
        return value;
    }
    case K::product: {
        LP value(1);
        for (const auto& child : e.children()) {
            value *= beta_eval(child);
        }
        return value;
    }
    case K::disjoint_union: {
        LP value;
        for (const auto& child : e.children()) {
            value += beta_eval(child);
        }
        return value;
    }
    case K::difference:
        if (e.children().size() != 2) {
            throw Error(ErrorKind::malformed_expression, "difference needs exactly two operands");
        }
        return beta_eval(e.children()[0]) - beta_eval(e.children()[1]);
    }
    throw Error(ErrorKind::malformed_expression, "unknown set expression node");
}

Integer euler_characteristic(const SetExpression& expression)
{
    return evaluate(beta_eval(expression), Rational(-1)).get_num();
}

} // namespace quadzeta::scissor
