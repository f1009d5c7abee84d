#include <doctest.h>

#include <random>

#include "quadzeta/error.hpp"
#include "quadzeta/json_io.hpp"
#include "quadzeta/laurent.hpp"
#include "quadzeta/series.hpp"

using namespace quadzeta;
using LP = LaurentPolynomial;

namespace {

LP random_laurent(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> count(0, 5);
    std::uniform_int_distribution<int> exponent(-6, 6);
    std::uniform_int_distribution<long> coefficient(-50, 50);
    LP p;
    for (int i = count(rng); i > 0; --i) {
        p += LP::monomial(exponent(rng), coefficient(rng));
    }
    return p;
}

TruncatedSeries random_series(std::mt19937_64& rng, int order)
{
    TruncatedSeries::CoefficientMap map;
    for (int n = 1; n <= order; ++n) {
        map[n] = random_laurent(rng);
    }
    return TruncatedSeries(order, map);
}

} // namespace

TEST_CASE("laurent arithmetic examples")
{
    const LP u = LP::u();
    CHECK((u - 1) * (u + 1) == u * u - 1);
    CHECK(to_string((u - 1) * (u + 1)) == "u^2 - 1");
    const LP toric = u.pow(3) + u * u - u;
    CHECK(toric + LP() == toric);
    CHECK((LP::monomial(-1) + LP::monomial(-2)) * LP::monomial(2) == u + 1);
}

TEST_CASE("zero coefficients are pruned")
{
    const LP u = LP::u();
    const LP p = (u + 1) - (u + 1);
    CHECK(p.is_zero());
    CHECK(p.term_count() == 0);
    CHECK(p == LP());
    CHECK((u * 0).is_zero());
}

TEST_CASE("factor_monomial")
{
    const LP u = LP::u();
    auto f = factor_monomial(u.pow(5) + u.pow(4));
    CHECK(f.shift == 4);
    CHECK(f.reduced == u + 1);

    f = factor_monomial(LP::monomial(-1) - LP::monomial(-2));
    CHECK(f.shift == -2);
    CHECK(f.reduced == u - 1);

    f = factor_monomial(LP(2));
    CHECK(f.shift == 0);
    CHECK(f.reduced == LP(2));

    CHECK_THROWS_AS(factor_monomial(LP()), Error);
    try {
        factor_monomial(LP());
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::zero_polynomial);
        CHECK(e.name() == "ZeroPolynomial");
    }
}

TEST_CASE("evaluate")
{
    const LP u = LP::u();
    CHECK(evaluate(u.pow(3) + u * u - u, -1) == 1);
    CHECK(evaluate(u + 1, -1) == 0);
    CHECK(evaluate(LP::monomial(-1), 2) == Rational(1, 2));
    CHECK(evaluate(u + 1, 0) == 1);
    try {
        evaluate(LP::monomial(-1), 0);
        FAIL("expected PoleAtZero");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::pole_at_zero);
    }
}

TEST_CASE("big coefficients stay exact")
{
    const LP p = (LP::u() + 1).pow(80);
    Integer binom;
    mpz_bin_uiui(binom.get_mpz_t(), 80, 40);
    CHECK(p.coefficient(40) == binom);
    CHECK(evaluate(p, 1) == Rational(Integer(1) << 80));
}

TEST_CASE("ring axioms on random inputs")
{
    std::mt19937_64 rng(7);
    for (int i = 0; i < 300; ++i) {
        const LP a = random_laurent(rng);
        const LP b = random_laurent(rng);
        const LP c = random_laurent(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == LP());
        if (!a.is_zero()) {
            const auto f = factor_monomial(a);
            CHECK(f.reduced.shifted(f.shift) == a);
            CHECK(f.reduced.min_exponent() == 0);
        }
    }
}

TEST_CASE("text rendering round trips")
{
    const LP u = LP::u();
    CHECK(to_string(u.pow(5) + u.pow(4)) == "u^5 + u^4");
    CHECK(to_string(LP::monomial(-1, 2)) == "2*u^-1");
    CHECK(to_string(LP()) == "0");
    CHECK(to_string(u.pow(3) + u * u - u) == "u^3 + u^2 - u");
    CHECK(parse_laurent("u^3 + u^2 - u") == u.pow(3) + u * u - u);
    CHECK(parse_laurent("1 - u^-1") == LP(1) - LP::monomial(-1));
    CHECK_THROWS_AS(parse_laurent("u^"), SyntaxError);

    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        const LP a = random_laurent(rng);
        CHECK(parse_laurent(to_string(a)) == a);
        CHECK(json_io::decode_laurent(json_io::encode(a)) == a);
    }
}

TEST_CASE("laurent json layout")
{
    const LP p = LP::monomial(-1) + LP::monomial(-2);
    CHECK(json_io::encode(p).dump() == R"([[-2,"1"],[-1,"1"]])");
}

TEST_CASE("series arithmetic examples")
{
    const LP u = LP::u();
    const TruncatedSeries t2(4, {{2, LP(1)}});
    const TruncatedSeries t3(4, {{3, LP(1)}});
    CHECK(t2 + t2 == TruncatedSeries(4, {{2, LP(2)}}));
    CHECK((t2 * t3).is_zero());
    const TruncatedSeries ut(4, {{1, u}});
    CHECK(ut * ut == TruncatedSeries(4, {{2, u * u}}));

    try {
        (void)(t2 + TruncatedSeries(5));
        FAIL("expected OrderMismatch");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::order_mismatch);
    }
    CHECK_THROWS_AS((void)(t2 * TruncatedSeries(3)), Error);
}

TEST_CASE("series drop terms beyond the order")
{
    const TruncatedSeries s(3, {{2, LP(1)}, {5, LP(4)}});
    CHECK(s.coefficients().size() == 1);
    CHECK(s.coefficient(5).is_zero());
    CHECK_THROWS(TruncatedSeries(0));
    CHECK_THROWS(TruncatedSeries(3, {{0, LP(1)}}));
}

TEST_CASE("series product is the truncated convolution")
{
    std::mt19937_64 rng(3);
    for (int order = 1; order <= 8; ++order) {
        for (int trial = 0; trial < 10; ++trial) {
            const TruncatedSeries a = random_series(rng, order);
            const TruncatedSeries b = random_series(rng, order);
            const TruncatedSeries c = a * b;
            for (int n = 1; n <= order; ++n) {
                LP expected;
                for (int i = 1; i < n; ++i) {
                    expected += a.coefficient(i) * b.coefficient(n - i);
                }
                CHECK(c.coefficient(n) == expected);
            }
            CHECK(a * b == b * a);
        }
    }
}

TEST_CASE("series text and json round trip")
{
    const TruncatedSeries s(7, {{2, LP::monomial(-1, 2)}, {4, LP::monomial(-2, 2)}, {6, LP::monomial(-3, 2)}});
    CHECK(to_string(s) == "(2*u^-1)*T^2 + (2*u^-2)*T^4 + (2*u^-3)*T^6 + O(T^8)");
    CHECK(parse_series(to_string(s)) == s);
    CHECK(json_io::decode_series(json_io::encode(s)) == s);
    CHECK(to_string(TruncatedSeries(3)) == "O(T^4)");
    CHECK(parse_series("O(T^4)") == TruncatedSeries(3));

    std::mt19937_64 rng(5);
    for (int i = 0; i < 50; ++i) {
        const TruncatedSeries r = random_series(rng, 1 + i % 8);
        CHECK(parse_series(to_string(r)) == r);
        CHECK(json_io::decode_series(json_io::encode(r)) == r);
    }
}
