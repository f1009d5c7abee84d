#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace quadzeta {

using Integer = mpz_class;
using Rational = mpq_class;
using Exponent = std::int64_t;

/// Polynomial in u with integer coefficients and exponents of either sign,
/// i.e. an element of Z[u, u^-1].
///
/// The term map never stores a zero coefficient, so structural equality of
/// the maps is equality in the ring.
class LaurentPolynomial {
public:
    using TermMap = std::map<Exponent, Integer>;

    LaurentPolynomial() = default;
    LaurentPolynomial(long constant);
    LaurentPolynomial(const Integer& constant);
    explicit LaurentPolynomial(TermMap terms);

    static LaurentPolynomial monomial(Exponent exponent, const Integer& coefficient = 1);
    static LaurentPolynomial u() { return monomial(1); }
    /// 1 + u + ... + u^(count-1); zero when count <= 0.
    static LaurentPolynomial geometric_sum(Exponent count);

    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }
    Integer coefficient(Exponent exponent) const;

    // Both require a nonzero polynomial.
    Exponent min_exponent() const;
    Exponent degree() const;

    bool has_negative_exponents() const noexcept;

    LaurentPolynomial shifted(Exponent by) const;
    LaurentPolynomial pow(unsigned exponent) const;

    LaurentPolynomial operator-() const;
    LaurentPolynomial& operator+=(const LaurentPolynomial& other);
    LaurentPolynomial& operator-=(const LaurentPolynomial& other);
    LaurentPolynomial& operator*=(const LaurentPolynomial& other);

    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);

    friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b)
    {
        return a.terms_ == b.terms_;
    }

private:
    void add_term(Exponent exponent, const Integer& coefficient);

    TermMap terms_;
};

/// p = u^shift * reduced, with reduced having a nonzero constant term.
struct MonomialFactor {
    Exponent shift;
    LaurentPolynomial reduced;
};

/// Pulls out the largest power of u dividing p. Throws ZeroPolynomial on 0.
MonomialFactor factor_monomial(const LaurentPolynomial& p);

/// Exact evaluation at a rational point. Throws PoleAtZero when value is 0
/// and p has negative exponents.
Rational evaluate(const LaurentPolynomial& p, const Rational& value);

/// Renders as "u^3 + u^2 - u", "2*u^-1", "0"; highest exponent first.
std::string to_string(const LaurentPolynomial& p);

/// Inverse of to_string. Throws SyntaxError.
LaurentPolynomial parse_laurent(std::string_view text);

} // namespace quadzeta
