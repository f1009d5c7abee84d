#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "quadzeta/laurent.hpp"

namespace quadzeta {

using ExponentVector = std::vector<int>;

/// Sparse multivariate polynomial in x1..x_nvars with rational coefficients.
class Polynomial {
public:
    using TermMap = std::map<ExponentVector, Rational>;

    explicit Polynomial(int nvars = 1);
    Polynomial(int nvars, const TermMap& terms);

    static Polynomial variable(int nvars, int index);
    static Polynomial constant(int nvars, const Rational& value);

    int nvars() const noexcept { return nvars_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Rational coefficient(const ExponentVector& exponents) const;

    // Lowest / highest total degree of a term; nullopt for zero.
    std::optional<int> order() const;
    std::optional<int> degree() const;

    Polynomial homogeneous_part(int degree) const;
    Polynomial truncated(int max_degree) const;
    bool involves(int index) const;

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Rational& scalar);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial& a, const Polynomial& b)
    {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    /// Product with all terms of degree > max_degree discarded.
    static Polynomial multiply_truncated(const Polynomial& a, const Polynomial& b, int max_degree);

private:
    void add_term(const ExponentVector& exponents, const Rational& coefficient);

    int nvars_;
    TermMap terms_;
};

int total_degree(const ExponentVector& exponents);

/// p(images[0], ..., images[nvars-1]), discarding terms of degree >
/// max_degree. All images must share one variable count.
Polynomial substitute(const Polynomial& p, std::span<const Polynomial> images, int max_degree);

/// "3/2*x1^2*x2 + x3", terms by ascending degree.
std::string to_string(const Polynomial& p);

/// Polynomial vanishing at the origin.
class PolynomialGerm {
public:
    /// Throws NotAGerm if p has a nonzero constant term.
    explicit PolynomialGerm(Polynomial p);

    int nvars() const noexcept { return poly_.nvars(); }
    const Polynomial& polynomial() const noexcept { return poly_; }
    bool is_singular() const { return poly_.homogeneous_part(1).is_zero(); }
    /// True if every term has degree 2.
    bool is_quadratic_form() const;

    friend bool operator==(const PolynomialGerm& a, const PolynomialGerm& b) { return a.poly_ == b.poly_; }

private:
    Polynomial poly_;
};

/// Grammar: [sign] term {(+|-) term}; term = coefficient ["*" power {"*" power}]
/// | power {"*" power}; coefficient = digits ["/" digits]; power = "x" K ["^" E]
/// with K, E >= 1. Whitespace is ignored. The variable count is the largest
/// K used unless `dim` is given (which must then be at least that large).
PolynomialGerm parse_germ(std::string_view text, std::optional<int> dim = std::nullopt);

} // namespace quadzeta
