#include "quadzeta/laurent.hpp"

#include <cctype>
#include <sstream>

#include "quadzeta/error.hpp"
#include "text_scanner.hpp"

namespace quadzeta {

LaurentPolynomial::LaurentPolynomial(long constant)
{
    add_term(0, Integer(constant));
}

LaurentPolynomial::LaurentPolynomial(const Integer& constant)
{
    add_term(0, constant);
}

LaurentPolynomial::LaurentPolynomial(TermMap terms)
{
    for (auto& [e, c] : terms) {
        add_term(e, c);
    }
}

LaurentPolynomial LaurentPolynomial::monomial(Exponent exponent, const Integer& coefficient)
{
    LaurentPolynomial p;
    p.add_term(exponent, coefficient);
    return p;
}

LaurentPolynomial LaurentPolynomial::geometric_sum(Exponent count)
{
    LaurentPolynomial p;
    for (Exponent e = 0; e < count; ++e) {
        p.terms_.emplace(e, 1);
    }
    return p;
}

Integer LaurentPolynomial::coefficient(Exponent exponent) const
{
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Integer(0) : it->second;
}

Exponent LaurentPolynomial::min_exponent() const
{
    if (terms_.empty()) {
        throw Error(ErrorKind::zero_polynomial, "zero polynomial has no minimal exponent");
    }
    return terms_.begin()->first;
}

Exponent LaurentPolynomial::degree() const
{
    if (terms_.empty()) {
        throw Error(ErrorKind::zero_polynomial, "zero polynomial has no degree");
    }
    return terms_.rbegin()->first;
}

bool LaurentPolynomial::has_negative_exponents() const noexcept
{
    return !terms_.empty() && terms_.begin()->first < 0;
}

LaurentPolynomial LaurentPolynomial::shifted(Exponent by) const
{
    LaurentPolynomial p;
    for (const auto& [e, c] : terms_) {
        p.terms_.emplace_hint(p.terms_.end(), e + by, c);
    }
    return p;
}

LaurentPolynomial LaurentPolynomial::pow(unsigned exponent) const
{
    LaurentPolynomial result(1);
    LaurentPolynomial base = *this;
    while (exponent != 0) {
        if (exponent & 1u) {
            result *= base;
        }
        exponent >>= 1;
        if (exponent != 0) {
            base *= base;
        }
    }
    return result;
}

void LaurentPolynomial::add_term(Exponent exponent, const Integer& coefficient)
{
    if (coefficient == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

LaurentPolynomial LaurentPolynomial::operator-() const
{
    LaurentPolynomial p = *this;
    for (auto& [e, c] : p.terms_) {
        c = -c;
    }
    return p;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other)
{
    for (const auto& [e, c] : other.terms_) {
        add_term(e, c);
    }
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other)
{
    for (const auto& [e, c] : other.terms_) {
        add_term(e, -c);
    }
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& other)
{
    *this = *this * other;
    return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b)
{
    LaurentPolynomial p;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            p.add_term(ea + eb, ca * cb);
        }
    }
    return p;
}

MonomialFactor factor_monomial(const LaurentPolynomial& p)
{
    if (p.is_zero()) {
        throw Error(ErrorKind::zero_polynomial, "cannot factor a monomial out of 0");
    }
    const Exponent shift = p.min_exponent();
    return {shift, p.shifted(-shift)};
}

Rational evaluate(const LaurentPolynomial& p, const Rational& value)
{
    if (value == 0) {
        if (p.has_negative_exponents()) {
            throw Error(ErrorKind::pole_at_zero, "negative exponent evaluated at u = 0");
        }
        return Rational(p.coefficient(0));
    }
    Rational sum = 0;
    for (const auto& [e, c] : p.terms()) {
        Rational power = 1;
        const Rational factor = e < 0 ? Rational(1) / value : value;
        for (Exponent k = 0; k < (e < 0 ? -e : e); ++k) {
            power *= factor;
        }
        sum += Rational(c) * power;
    }
    sum.canonicalize();
    return sum;
}

std::string to_string(const LaurentPolynomial& p)
{
    if (p.is_zero()) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        Integer magnitude = abs(c);
        if (first) {
            if (c < 0) {
                out << '-';
            }
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (e == 0) {
            out << magnitude.get_str();
            continue;
        }
        if (magnitude != 1) {
            out << magnitude.get_str() << '*';
        }
        out << 'u';
        if (e != 1) {
            out << '^' << e;
        }
    }
    return out.str();
}

LaurentPolynomial parse_laurent(std::string_view text)
{
    detail::TextScanner scan(text);
    LaurentPolynomial result;
    bool first = true;
    while (true) {
        scan.skip_space();
        int sign = 1;
        if (scan.at_end()) {
            if (first) {
                throw SyntaxError(scan.offset(), "empty polynomial");
            }
            break;
        }
        if (scan.peek() == '+' || scan.peek() == '-') {
            sign = scan.get() == '-' ? -1 : 1;
            scan.skip_space();
        } else if (!first) {
            throw SyntaxError(scan.offset(), "expected '+' or '-'");
        }
        first = false;

        Integer coefficient = 1;
        bool has_coefficient = false;
        if (std::isdigit(static_cast<unsigned char>(scan.peek()))) {
            coefficient = Integer(scan.digits());
            has_coefficient = true;
            scan.skip_space();
            if (scan.peek() == '*') {
                scan.get();
                scan.skip_space();
            } else {
                result += LaurentPolynomial(Integer(sign * coefficient));
                continue;
            }
        }
        if (scan.peek() != 'u') {
            throw SyntaxError(scan.offset(), has_coefficient ? "expected 'u'" : "expected coefficient or 'u'");
        }
        scan.get();
        scan.skip_space();
        Exponent exponent = 1;
        if (scan.peek() == '^') {
            scan.get();
            scan.skip_space();
            exponent = scan.signed_integer();
        }
        result += LaurentPolynomial::monomial(exponent, Integer(sign * coefficient));
    }
    return result;
}

} // namespace quadzeta
