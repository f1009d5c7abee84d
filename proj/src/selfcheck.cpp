#include "quadzeta/selfcheck.hpp"

#include <algorithm>
#include <sstream>

#include "quadzeta/arcspace.hpp"
#include "quadzeta/recover.hpp"
#include "quadzeta/scissor.hpp"
#include "quadzeta/split.hpp"

namespace quadzeta::selfcheck {

namespace {

using LP = LaurentPolynomial;

class Tally {
public:
    explicit Tally(std::string name) { result_.name = std::move(name); }

    void expect(bool ok, const std::string& where)
    {
        ++result_.checked;
        if (!ok) {
            if (result_.failed == 0) {
                result_.first_failure = where;
            }
            ++result_.failed;
        }
    }

    CheckResult take() { return std::move(result_); }

private:
    CheckResult result_;
};

std::string triple(const char* label, int a, int b, int c)
{
    std::ostringstream out;
    out << label << "=(" << a << ',' << b << ',' << c << ')';
    return out.str();
}

Rational small_rational(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 4);
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

} // namespace

ClosedForms default_closed_forms()
{
    return {scissor::beta_x0, scissor::beta_z, scissor::beta_x1, scissor::beta_xneg1};
}

bool Report::ok() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.failed == 0; });
}

std::string Report::to_text() const
{
    std::ostringstream out;
    for (const auto& c : checks) {
        out << c.name << ": " << c.checked << " identities ";
        if (c.failed == 0) {
            out << "OK\n";
        } else {
            out << "FAILED (" << c.failed << " failures, first at " << c.first_failure << ")\n";
        }
    }
    out << (ok() ? "all checks passed" : "SELFCHECK FAILED") << '\n';
    return out.str();
}

RationalMatrix random_symmetric_matrix(std::mt19937_64& rng, int size)
{
    RationalMatrix a(size);
    std::uniform_int_distribution<int> mode(0, 2);
    if (mode(rng) == 0 && size > 1) {
        // B^T D B with a few zero diagonal entries
        RationalMatrix b(size);
        RationalMatrix d(size);
        std::uniform_int_distribution<int> sign(-1, 1);
        for (int i = 0; i < size; ++i) {
            d(i, i) = sign(rng);
            for (int j = 0; j < size; ++j) {
                b(i, j) = small_rational(rng);
            }
        }
        return b.transpose() * d * b;
    }
    for (int i = 0; i < size; ++i) {
        for (int j = i; j < size; ++j) {
            a(i, j) = small_rational(rng);
            a(j, i) = a(i, j);
        }
    }
    return a;
}

PolynomialGerm random_germ(std::mt19937_64& rng, int nvars, int max_degree)
{
    std::uniform_int_distribution<int> var(0, nvars - 1);
    std::uniform_int_distribution<int> term_count(1, 2 * nvars + 2);
    Polynomial p(nvars);
    for (int degree = 2; degree <= max_degree; ++degree) {
        const int count = term_count(rng);
        for (int k = 0; k < count; ++k) {
            ExponentVector e(nvars, 0);
            for (int j = 0; j < degree; ++j) {
                ++e[var(rng)];
            }
            p += Polynomial(nvars, {{e, small_rational(rng)}});
        }
    }
    return PolynomialGerm(std::move(p));
}

Report run(int max, const ClosedForms& forms)
{
    if (max < 2) {
        throw std::invalid_argument("selfcheck needs max >= 2");
    }
    Report report;
    report.max = max;
    using SE = SetExpression;

    {
        Tally t("closed-form/oracle grid");
        for (int c = -1; c <= 1; ++c) {
            for (int s = 0; s <= max; ++s) {
                for (int u = 0; u <= max; ++u) {
                    const LP closed = c == 0 ? forms.x0(s, u) : c == 1 ? forms.x1(s, u) : forms.xneg1(s, u);
                    t.expect(scissor::beta_eval(SE::quadric_affine(c, s, u)) == closed, triple("(c,s,t)", c, s, u));
                }
            }
        }
        report.checks.push_back(t.take());
    }
    {
        Tally t("projective closed-form/oracle grid");
        for (int m = 1; m <= max; ++m) {
            for (int big_m = 1; big_m <= max; ++big_m) {
                t.expect(scissor::beta_eval(SE::quadric_projective(m, big_m)) == forms.z(m, big_m),
                         triple("(m,M,_)", m, big_m, 0));
            }
        }
        report.checks.push_back(t.take());
    }
    {
        Tally t("X^-1_{s,t} = X^1_{t,s} symmetry");
        for (int s = 0; s <= max; ++s) {
            for (int u = 0; u <= max; ++u) {
                t.expect(forms.xneg1(s, u) == forms.x1(u, s), triple("(s,t,_)", s, u, 0));
            }
        }
        report.checks.push_back(t.take());
    }
    {
        Tally t("cone relation beta(X0) = 1 + (u-1) beta(Z)");
        for (int m = 1; m <= max; ++m) {
            for (int big_m = 1; big_m <= max; ++big_m) {
                t.expect(forms.x0(m, big_m) == LP(1) + (LP::u() - LP(1)) * forms.z(m, big_m),
                         triple("(m,M,_)", m, big_m, 0));
            }
        }
        report.checks.push_back(t.take());
    }
    {
        Tally t("projective difference beta(X1) = beta(Z') - beta(Z)");
        for (int s = 1; s <= max; ++s) {
            for (int u = 1; u <= max; ++u) {
                const LP expected = s <= u ? forms.z(s, u + 1) - forms.z(s, u) : forms.z(u + 1, s) - forms.z(u, s);
                t.expect(forms.x1(s, u) == expected, triple("(s,t,_)", s, u, 0));
            }
        }
        report.checks.push_back(t.take());
    }
    {
        Tally t("quadric degree = s+t-1");
        for (int c = -1; c <= 1; ++c) {
            for (int s = 0; s <= max; ++s) {
                for (int u = 0; u <= max; ++u) {
                    const LP beta = scissor::beta_eval(SE::quadric_affine(c, s, u));
                    const bool positive_dim = s + u >= 2 && !beta.is_zero() && !(c == 0 && (s == 0 || u == 0));
                    if (positive_dim) {
                        t.expect(beta.degree() == s + u - 1, triple("(c,s,t)", c, s, u));
                    }
                }
            }
        }
        report.checks.push_back(t.take());
    }

    const int zeta_dim = std::min(6, max);
    constexpr Selector selectors[] = {Selector::naive, Selector::plus, Selector::minus};
    {
        Tally consistency("zeta stratification = closed form");
        Tally stable("zeta stabilization d -> d+1");
        Tally swap("zeta sign swap (s,t,+) = (t,s,-)");
        Tally odd("zeta odd coefficients plus = minus");
        Tally shape("zeta T^1 = 0 and u-degree <= 0");
        for (int d = 1; d <= zeta_dim; ++d) {
            for (int s = 0; s <= d; ++s) {
                for (int u = 0; s + u <= d; ++u) {
                    if (s + u == 0) {
                        continue;
                    }
                    const QuadraticGerm germ{d, s, u};
                    const std::string where = triple("(d,s,t)", d, s, u);
                    for (Selector sel : selectors) {
                        const auto series = arcspace::zeta(germ, sel, zeta_dim);
                        consistency.expect(series == arcspace::zeta_closed(germ, sel, zeta_dim), where);
                        stable.expect(series == arcspace::zeta(QuadraticGerm{d + 1, s, u}, sel, zeta_dim), where);
                        shape.expect(series.coefficient(1).is_zero(), where);
                        for (const auto& [n, value] : series.coefficients()) {
                            shape.expect(value.degree() <= 0, where);
                        }
                    }
                    const auto plus = arcspace::zeta(germ, Selector::plus, zeta_dim);
                    const auto minus = arcspace::zeta(germ, Selector::minus, zeta_dim);
                    swap.expect(plus == arcspace::zeta(QuadraticGerm{d, u, s}, Selector::minus, zeta_dim), where);
                    for (int n = 1; n <= zeta_dim; n += 2) {
                        odd.expect(plus.coefficient(n) == minus.coefficient(n), where);
                    }
                }
            }
        }
        report.checks.push_back(consistency.take());
        report.checks.push_back(stable.take());
        report.checks.push_back(swap.take());
        report.checks.push_back(odd.take());
        report.checks.push_back(shape.take());
    }
    {
        Tally t("signature round trip from T^2 signed coefficients");
        const int bound = std::min(8, max);
        for (int d = 1; d <= bound; ++d) {
            for (int s = 0; s <= d; ++s) {
                for (int u = 0; s + u <= d; ++u) {
                    if (s + u == 0) {
                        continue;
                    }
                    const QuadraticGerm germ{d, s, u};
                    const auto plus = arcspace::zeta(germ, Selector::plus, 2).coefficient(2);
                    const auto minus = arcspace::zeta(germ, Selector::minus, 2).coefficient(2);
                    bool ok = false;
                    try {
                        ok = recover_signature(plus, minus) == SignaturePair{s, u};
                    } catch (const std::exception&) {
                    }
                    t.expect(ok, triple("(d,s,t)", d, s, u));
                }
            }
        }
        report.checks.push_back(t.take());
    }
    {
        Tally t("T^2 signed coefficients separate (s,t)");
        const int bound = std::min(5, max);
        std::vector<std::pair<QuadraticGerm, std::pair<LP, LP>>> germs;
        for (int d = 1; d <= bound; ++d) {
            for (int s = 0; s <= d; ++s) {
                for (int u = 0; s + u <= d; ++u) {
                    if (s + u == 0) {
                        continue;
                    }
                    const QuadraticGerm germ{d, s, u};
                    germs.push_back({germ,
                                     {arcspace::zeta(germ, Selector::plus, 2).coefficient(2),
                                      arcspace::zeta(germ, Selector::minus, 2).coefficient(2)}});
                }
            }
        }
        for (const auto& [a, ca] : germs) {
            for (const auto& [b, cb] : germs) {
                const bool same_signature = a.plus == b.plus && a.minus == b.minus;
                t.expect((ca == cb) == same_signature, triple("(s,t,s')", a.plus, a.minus, b.plus));
            }
        }
        report.checks.push_back(t.take());
    }
    {
        Tally t("naive T^2 min/max recovery");
        for (int s = 0; s <= max; ++s) {
            for (int u = 0; u <= max; ++u) {
                if (s + u == 0) {
                    continue;
                }
                const int m = std::min(s, u);
                const int big_m = std::max(s, u);
                bool ok = false;
                try {
                    const auto r = recover_minmax_naive(arcspace::t2_naive_closed(s, u));
                    const bool should_determine = m >= 1 && big_m != m + 1;
                    ok = r.determined == should_determine && (!r.determined || (r.min == m && r.max == big_m));
                } catch (const std::exception&) {
                }
                t.expect(ok, triple("(s,t,_)", s, u, 0));
            }
        }
        report.checks.push_back(t.take());
    }
    {
        Tally t("congruence inertia = characteristic polynomial sign variations");
        std::mt19937_64 rng(20061016);
        const int size_bound = std::min(8, max);
        std::uniform_int_distribution<int> size(1, size_bound);
        for (int k = 0; k < 100 * size_bound; ++k) {
            const auto a = random_symmetric_matrix(rng, size(rng));
            t.expect(inertia_of(a) == oracle::inertia_by_sign_variations(a), "matrix #" + std::to_string(k));
        }
        report.checks.push_back(t.take());
    }
    {
        Tally t("split_jet residual vanishes");
        const char* corpus[] = {"x1^2 + 2*x1*x2^2", "x1^2 + x1*x3^3", "x1*x2 + x2^3", "x1^2 - x2^2 + x3^3"};
        for (const char* text : corpus) {
            const auto f = parse_germ(text);
            for (int jet = 3; jet <= 6; ++jet) {
                t.expect(verify_split(f, split_jet(f, jet)), std::string(text) + " @" + std::to_string(jet));
            }
        }
        std::mt19937_64 rng(4);
        std::uniform_int_distribution<int> nvars(1, 4);
        std::uniform_int_distribution<int> jet(3, 6);
        for (int k = 0; k < 10 * std::min(max, 10); ++k) {
            const auto f = random_germ(rng, nvars(rng), 4);
            const int j = jet(rng);
            t.expect(verify_split(f, split_jet(f, j)), "random germ #" + std::to_string(k));
        }
        report.checks.push_back(t.take());
    }
    return report;
}

} // namespace quadzeta::selfcheck
