#include <doctest.h>

#include <random>

#include "quadzeta/arcspace.hpp"
#include "quadzeta/discriminate.hpp"
#include "quadzeta/error.hpp"
#include "quadzeta/inertia.hpp"
#include "quadzeta/json_io.hpp"
#include "quadzeta/polynomial.hpp"
#include "quadzeta/recover.hpp"
#include "quadzeta/selfcheck.hpp"
#include "quadzeta/split.hpp"

using namespace quadzeta;
using LP = LaurentPolynomial;
namespace arc = quadzeta::arcspace;

namespace {

ErrorKind kind_of(auto&& call)
{
    try {
        call();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error thrown");
    return ErrorKind::syntax_error;
}

Inertia inertia(int nvars, int s, int t)
{
    return Inertia{nvars, s, t};
}

Polynomial poly(const char* text, int dim)
{
    return parse_germ(text, dim).polynomial();
}

// A random invertible linear substitution, built as a product of a
// permutation with unit lower and upper triangular factors.
std::vector<Polynomial> random_linear_change(std::mt19937_64& rng, int n)
{
    std::uniform_int_distribution<int> entry(-3, 3);
    std::uniform_int_distribution<int> diagonal(1, 3);
    RationalMatrix lower = RationalMatrix::identity(n);
    RationalMatrix upper = RationalMatrix::identity(n);
    for (int i = 0; i < n; ++i) {
        upper(i, i) = Rational(diagonal(rng) * (entry(rng) < 0 ? -1 : 1), diagonal(rng));
        for (int j = 0; j < i; ++j) {
            lower(i, j) = entry(rng);
            upper(j, i) = Rational(entry(rng), diagonal(rng));
        }
    }
    const RationalMatrix m = lower * upper;
    std::vector<Polynomial> images;
    for (int i = 0; i < n; ++i) {
        Polynomial image(n);
        for (int j = 0; j < n; ++j) {
            image += Polynomial::variable(n, j) * m(i, j);
        }
        images.push_back(image);
    }
    return images;
}

} // namespace

TEST_CASE("parse_germ examples")
{
    const auto f = parse_germ("x1^2 - x2^2");
    CHECK(f.nvars() == 2);
    CHECK(f.is_quadratic_form());
    CHECK(f.polynomial().coefficient({2, 0}) == 1);
    CHECK(f.polynomial().coefficient({0, 2}) == -1);

    const auto g = parse_germ("3/2*x1^2*x2 + x3");
    CHECK(g.nvars() == 3);
    CHECK(g.polynomial().coefficient({2, 1, 0}) == Rational(3, 2));
    CHECK(!g.is_singular());

    try {
        parse_germ("x1^");
        FAIL("expected a syntax error");
    } catch (const SyntaxError& e) {
        CHECK(e.offset() == 3);
    }
    CHECK(kind_of([] { parse_germ("x1^2 + 1"); }) == ErrorKind::not_a_germ);
    CHECK(kind_of([] { parse_germ("x3^2", 2); }) == ErrorKind::dimension_mismatch);
    CHECK(kind_of([] { parse_germ("x0^2"); }) == ErrorKind::syntax_error);
    CHECK(kind_of([] { parse_germ("x1^0"); }) == ErrorKind::syntax_error);
    CHECK(kind_of([] { parse_germ("2*"); }) == ErrorKind::syntax_error);
    CHECK(kind_of([] { parse_germ("x1 / x2"); }) == ErrorKind::syntax_error);
}

TEST_CASE("parse_germ grammar details")
{
    CHECK(parse_germ(" - x1 * x2 +2/4*x2^3 ", 2).polynomial()
          == Polynomial(2, {{{1, 1}, Rational(-1)}, {{0, 3}, Rational(1, 2)}}));
    CHECK(parse_germ("x1^2", 4).nvars() == 4);
    CHECK(parse_germ("x1^2 - x1^2 + x2^3").polynomial() == Polynomial(2, {{{0, 3}, Rational(1)}}));
    CHECK(to_string(parse_germ("3/2*x1^2*x2 + x3").polynomial()) == "x3 + 3/2*x1^2*x2");
}

TEST_CASE("germ text and json round trip")
{
    std::mt19937_64 rng(23);
    for (int i = 0; i < 100; ++i) {
        const PolynomialGerm f = selfcheck::random_germ(rng, 1 + i % 4, 4);
        CHECK(parse_germ(to_string(f.polynomial()), f.nvars()) == f);
        CHECK(json_io::decode_germ(json_io::encode(f)) == f);
    }
    const auto encoded = json_io::encode(parse_germ("3/2*x1^2*x2 + x3"));
    CHECK(encoded.dump() == R"({"nvars":3,"terms":[[[0,0,1],"1"],[[2,1,0],"3/2"]]})");
}

TEST_CASE("hessian_inertia examples")
{
    CHECK(hessian_inertia(parse_germ("x1*x2")) == inertia(2, 1, 1));
    CHECK(hessian_inertia(parse_germ("x1^2 + 4*x1*x2 + x2^2")) == inertia(2, 1, 1));
    const Inertia i = hessian_inertia(parse_germ("x1^2 + x2^2 - x3^2 + x4^3"));
    CHECK(i == inertia(4, 2, 1));
    CHECK(i.corank() == 1);
    CHECK(i.index() == 1);
    CHECK(i.rank() == 3);
    CHECK(hessian_inertia(parse_germ("x1^3 + x2^4")) == inertia(2, 0, 0));
    CHECK(kind_of([] { hessian_inertia(parse_germ("x1 + x2^2")); }) == ErrorKind::not_singular_at_origin);
}

TEST_CASE("congruence pivots of x1^2 + 4 x1 x2 + x2^2")
{
    const auto a = quadratic_form_matrix(parse_germ("x1^2 + 4*x1*x2 + x2^2"));
    CHECK(a(0, 1) == 2);
    const auto c = congruence_diagonalize(a);
    // B^T A B = diag(D)
    const RationalMatrix d = c.basis.transpose() * a * c.basis;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            CHECK(d(i, j) == (i == j ? c.diagonal[i] : Rational(0)));
        }
    }
    CHECK(c.diagonal[0] * c.diagonal[1] == -3);
    CHECK(oracle::characteristic_polynomial(a) == std::vector<Rational>{-3, -2, 1});
}

TEST_CASE("zero pivot uses the hyperbolic move")
{
    RationalMatrix a(3);
    a(0, 2) = a(2, 0) = 1;
    a(1, 1) = -5;
    const auto c = congruence_diagonalize(a);
    const RationalMatrix d = c.basis.transpose() * a * c.basis;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            CHECK(d(i, j) == (i == j ? c.diagonal[i] : Rational(0)));
        }
    }
    CHECK(inertia_of(a) == inertia(3, 1, 2));
}

TEST_CASE("congruence inertia matches the sign-variation oracle")
{
    std::mt19937_64 rng(20061016);
    for (int trial = 0; trial < 400; ++trial) {
        const RationalMatrix a = selfcheck::random_symmetric_matrix(rng, 1 + trial % 8);
        const auto c = congruence_diagonalize(a);
        const RationalMatrix d = c.basis.transpose() * a * c.basis;
        bool diagonal = true;
        for (int i = 0; i < a.size(); ++i) {
            for (int j = 0; j < a.size(); ++j) {
                diagonal = diagonal && d(i, j) == (i == j ? c.diagonal[i] : Rational(0));
            }
        }
        CHECK(diagonal);
        CHECK(inertia_of(a) == oracle::inertia_by_sign_variations(a));
    }
}

TEST_CASE("inertia is invariant under linear changes of coordinates")
{
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + trial % 5;
        const RationalMatrix a = selfcheck::random_symmetric_matrix(rng, n);
        Polynomial q(n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                q += Polynomial::variable(n, i) * Polynomial::variable(n, j) * a(i, j);
            }
        }
        if (q.is_zero()) {
            continue;
        }
        const PolynomialGerm f(q);
        const auto images = random_linear_change(rng, n);
        const PolynomialGerm moved(substitute(q, images, 2));
        CHECK(hessian_inertia(moved) == hessian_inertia(f));
        CHECK(hessian_inertia(f) == inertia_of(a));
    }
}

TEST_CASE("split_jet examples")
{
    SUBCASE("x1^2 + 2 x1 x2^2")
    {
        const auto f = parse_germ("x1^2 + 2*x1*x2^2");
        const auto r = split_jet(f, 4);
        CHECK(r.change[0] == poly("x1 - x2^2", 2));
        CHECK(r.change[1] == poly("x2", 2));
        CHECK(r.quadratic_part == poly("x1^2", 2));
        CHECK(r.remainder == poly("-x2^4", 2));
        CHECK(r.inertia == inertia(2, 1, 0));
        CHECK(verify_split(f, r));
    }
    SUBCASE("already split")
    {
        const auto f = parse_germ("x1^2 - x2^2 + x3^3");
        const auto r = split_jet(f, 3);
        for (int i = 0; i < 3; ++i) {
            CHECK(r.change[i] == Polynomial::variable(3, i));
        }
        CHECK(r.quadratic_part == poly("x1^2 - x2^2", 3));
        CHECK(r.remainder == poly("x3^3", 3));
        CHECK(verify_split(f, r));
    }
    SUBCASE("x1^2 + x1 x3^3")
    {
        const auto f = parse_germ("x1^2 + x1*x3^3");
        const auto r = split_jet(f, 5);
        CHECK(r.change[0] == poly("x1 - 1/2*x3^3", 3));
        CHECK(r.quadratic_part == poly("x1^2", 3));
        CHECK(r.remainder.is_zero());
        CHECK(verify_split(f, r));
    }
    SUBCASE("xy + y^3")
    {
        const auto f = parse_germ("x1*x2 + x2^3");
        for (int jet = 3; jet <= 6; ++jet) {
            const auto r = split_jet(f, jet);
            CHECK(r.inertia == inertia(2, 1, 1));
            CHECK(r.remainder.is_zero());
            CHECK(verify_split(f, r));
        }
    }
    CHECK_THROWS(split_jet(parse_germ("x1^2"), 2));
    CHECK(kind_of([] { split_jet(parse_germ("x1 + x1^2"), 3); }) == ErrorKind::not_singular_at_origin);
}

TEST_CASE("normal form has unit coefficients")
{
    const auto r = split_jet(parse_germ("2*x1^2 - 3*x2^2 + x1*x2 + x3^4"), 4);
    CHECK(r.normal_form() == poly("x1^2 - x2^2", 3));
    CHECK(r.remainder == poly("x3^4", 3));
}

TEST_CASE("split_jet on random germs")
{
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 100; ++trial) {
        const PolynomialGerm f = selfcheck::random_germ(rng, 1 + trial % 4, 4);
        for (int jet = 3; jet <= 6; ++jet) {
            const auto r = split_jet(f, jet);
            CHECK(verify_split(f, r));
            CHECK(r.inertia == hessian_inertia(f));
            for (int i = 0; i < r.inertia.rank(); ++i) {
                CHECK(!r.remainder.involves(i));
            }
            if (!r.remainder.is_zero()) {
                CHECK(*r.remainder.order() >= 3);
            }
        }
    }
}

TEST_CASE("verify_split rejects a wrong result")
{
    const auto f = parse_germ("x1^2 + 2*x1*x2^2");
    auto r = split_jet(f, 4);
    r.remainder = Polynomial(2);
    CHECK(!verify_split(f, r));
}

TEST_CASE("recover_signature examples")
{
    const LP plus = LP::monomial(-1) + LP::monomial(-2);
    const LP minus = LP::monomial(-1) - LP::monomial(-2);
    CHECK(recover_signature(plus, minus) == SignaturePair{2, 1});
    CHECK(recover_signature(LP(), plus) == SignaturePair{0, 2});
    CHECK(kind_of([] { recover_signature(LP::u() * LP::u() + LP::u() + 1, LP()); })
          == ErrorKind::not_signature_form);
}

TEST_CASE("signature round trip on d <= 8")
{
    for (int d = 1; d <= 8; ++d) {
        for (int s = 0; s <= d; ++s) {
            for (int t = 0; s + t <= d; ++t) {
                if (s + t == 0) {
                    continue;
                }
                const auto plus = arc::zeta({d, s, t}, Selector::plus, 2).coefficient(2);
                const auto minus = arc::zeta({d, s, t}, Selector::minus, 2).coefficient(2);
                CHECK(recover_signature(plus, minus) == SignaturePair{s, t});
                CHECK(recover_signature(arc::t2_signed_closed(s, t, Sign::plus),
                                        arc::t2_signed_closed(s, t, Sign::minus))
                      == SignaturePair{s, t});
            }
        }
    }
}

TEST_CASE("recover_minmax_naive examples")
{
    const LP inv = LP::monomial(-1);
    auto r = recover_minmax_naive(1 - inv - inv * inv + inv.pow(3));
    CHECK(r.determined);
    CHECK(r.min == 2);
    CHECK(r.max == 2);

    r = recover_minmax_naive(1 - inv);
    CHECK(!r.determined);
    CHECK(r.reason.find("M = m+1") != std::string::npos);

    r = recover_minmax_naive(1 - inv + inv * inv - inv.pow(3));
    CHECK(r.determined);
    CHECK(r.min == 1);
    CHECK(r.max == 3);

    r = recover_minmax_naive(1 - inv.pow(4));
    CHECK(!r.determined);
    CHECK(r.max == 4);
    CHECK(r.reason.find("m = 0") != std::string::npos);

    CHECK(kind_of([] { recover_minmax_naive(LP::u()); }) == ErrorKind::not_signature_form);
}

TEST_CASE("naive recovery inverts the naive T^2 closed form")
{
    for (int s = 0; s <= 10; ++s) {
        for (int t = 0; t <= 10; ++t) {
            if (s + t == 0) {
                continue;
            }
            const int m = std::min(s, t);
            const int big_m = std::max(s, t);
            const auto r = recover_minmax_naive(arc::t2_naive_closed(s, t));
            if (big_m == m + 1) {
                CHECK(!r.determined);
                CHECK(arc::t2_naive_closed(s, t) == 1 - LP::monomial(-1));
            } else if (m == 0) {
                CHECK(!r.determined);
            } else {
                CHECK(r.determined);
                CHECK(r.min == m);
                CHECK(r.max == big_m);
            }
        }
    }
}

TEST_CASE("discriminate examples")
{
    const auto f = parse_germ("x1^2 + x2^2 - x3^2");
    const auto g = parse_germ("x1^2 - x2^2 - x3^2");
    const auto d = discriminate(f, g, 2);
    CHECK(d.distinguished);
    CHECK(d.n == 2);
    CHECK(d.selector == Selector::plus);
    CHECK(!d.conditional);

    const auto same = discriminate(parse_germ("x1^2 + x2^2"), parse_germ("x1^2 + 2*x1*x2 + 2*x2^2"), 6);
    CHECK(!same.distinguished);
    CHECK(same.compared_up_to == 6);
    CHECK(same.f_inertia == same.g_inertia);

    CHECK(!discriminate(f, f, 4).distinguished);

    CHECK(kind_of([] { discriminate(parse_germ("x1^2"), parse_germ("x1^2 + x2^2"), 2); })
          == ErrorKind::dimension_mismatch);
    CHECK(kind_of([] { discriminate(parse_germ("x1 + x2^2"), parse_germ("x1^2 + x2^2"), 2); })
          == ErrorKind::not_singular_at_origin);
}

TEST_CASE("discriminate flags verdicts that rely on the quadratic reduction")
{
    const auto d = discriminate(parse_germ("x1^2 + x2^2 + x3^3"), parse_germ("x1^2 - x2^2 + x3^3"), 2);
    CHECK(d.distinguished);
    CHECK(d.n == 2);
    CHECK(!d.conditional); // T^2 depends on the Hessian only

    const auto e = discriminate(parse_germ("x1^2 + x3^3"), parse_germ("x1^2 + x3^4"), 4);
    CHECK(!e.distinguished);
    CHECK(e.conditional);
}

TEST_CASE("discriminate separates exactly by inertia")
{
    std::vector<PolynomialGerm> germs;
    for (int s = 0; s <= 3; ++s) {
        for (int t = 0; s + t <= 3; ++t) {
            if (s + t == 0) {
                continue;
            }
            Polynomial q(3);
            for (int i = 0; i < s + t; ++i) {
                const Polynomial x = Polynomial::variable(3, i);
                q += x * x * Rational(i < s ? 1 : -1);
            }
            germs.emplace_back(q);
        }
    }
    for (const auto& f : germs) {
        for (const auto& g : germs) {
            const bool same = hessian_inertia(f) == hessian_inertia(g);
            CHECK(discriminate(f, g, 2).distinguished == !same);
        }
    }
}
