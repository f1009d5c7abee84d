#include "quadzeta/recover.hpp"

#include "quadzeta/error.hpp"

namespace quadzeta {

namespace {

using LP = LaurentPolynomial;

int recover_count(const LP& coefficient, const char* which)
{
    if (coefficient.is_zero()) {
        return 0;
    }
    const MonomialFactor factor = factor_monomial(coefficient);
    const LP& r = factor.reduced;
    if (r == LP(2)) {
        return 1;
    }
    const Exponent k = r.degree();
    if (k >= 1 && r.term_count() == 2 && r.coefficient(k) == 1) {
        if (r.coefficient(0) == -1) {
            return static_cast<int>(k);
        }
        if (r.coefficient(0) == 1) {
            return static_cast<int>(k + 1);
        }
    }
    throw Error(ErrorKind::not_signature_form,
                std::string(which) + " coefficient " + to_string(coefficient) + " reduces to " + to_string(r)
                    + ", not u^k - 1 or u^k + 1");
}

} // namespace

SignaturePair recover_signature(const LaurentPolynomial& plus_coefficient,
                                const LaurentPolynomial& minus_coefficient)
{
    return {recover_count(plus_coefficient, "plus"), recover_count(minus_coefficient, "minus")};
}

NaiveRecovery recover_minmax_naive(const LaurentPolynomial& naive_coefficient)
{
    const LP base = LP(1) - LP::monomial(-1);
    const LP rest = naive_coefficient - base;
    if (rest.is_zero()) {
        return {false, 0, 0, "M = m+1 family: every (m, m+1) gives 1 - u^-1"};
    }
    // rest = u^-(m+1) - u^-M
    if (rest.term_count() == 2) {
        const auto& terms = rest.terms();
        Exponent positive = 0;
        Exponent negative = 0;
        int pos_count = 0;
        int neg_count = 0;
        for (const auto& [e, c] : terms) {
            if (c == 1) {
                positive = e;
                ++pos_count;
            } else if (c == -1) {
                negative = e;
                ++neg_count;
            }
        }
        if (pos_count == 1 && neg_count == 1 && positive <= -1 && negative <= -1) {
            const int m = static_cast<int>(-positive - 1);
            const int big_m = static_cast<int>(-negative);
            if (m == 0) {
                return {false, 0, big_m,
                        "m = 0: coefficient 1 - u^-" + std::to_string(big_m)
                            + " (M = " + std::to_string(big_m)
                            + " is readable only if the cone {-sum y^2 = 0} counts as a point)"};
            }
            if (big_m >= m && big_m != m + 1) {
                return {true, m, big_m, ""};
            }
        }
    }
    throw Error(ErrorKind::not_signature_form,
                "naive coefficient " + to_string(naive_coefficient) + " is not 1 - u^-1 + u^-(m+1) - u^-M");
}

} // namespace quadzeta
