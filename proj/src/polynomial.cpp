#include "quadzeta/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "quadzeta/error.hpp"
#include "text_scanner.hpp"

namespace quadzeta {

int total_degree(const ExponentVector& exponents)
{
    return std::accumulate(exponents.begin(), exponents.end(), 0);
}

Polynomial::Polynomial(int nvars) : nvars_(nvars)
{
    if (nvars < 1) {
        throw std::invalid_argument("a polynomial needs at least one variable");
    }
}

Polynomial::Polynomial(int nvars, const TermMap& terms) : Polynomial(nvars)
{
    for (const auto& [exponents, c] : terms) {
        if (static_cast<int>(exponents.size()) != nvars) {
            throw std::invalid_argument("exponent vector length does not match variable count");
        }
        add_term(exponents, c);
    }
}

Polynomial Polynomial::variable(int nvars, int index)
{
    if (index < 0 || index >= nvars) {
        throw std::out_of_range("variable index out of range");
    }
    Polynomial p(nvars);
    ExponentVector e(nvars, 0);
    e[index] = 1;
    p.add_term(e, 1);
    return p;
}

Polynomial Polynomial::constant(int nvars, const Rational& value)
{
    Polynomial p(nvars);
    p.add_term(ExponentVector(nvars, 0), value);
    return p;
}

Rational Polynomial::coefficient(const ExponentVector& exponents) const
{
    auto it = terms_.find(exponents);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<int> Polynomial::order() const
{
    std::optional<int> result;
    for (const auto& [e, c] : terms_) {
        const int d = total_degree(e);
        if (!result || d < *result) {
            result = d;
        }
    }
    return result;
}

std::optional<int> Polynomial::degree() const
{
    std::optional<int> result;
    for (const auto& [e, c] : terms_) {
        const int d = total_degree(e);
        if (!result || d > *result) {
            result = d;
        }
    }
    return result;
}

Polynomial Polynomial::homogeneous_part(int degree) const
{
    Polynomial p(nvars_);
    for (const auto& [e, c] : terms_) {
        if (total_degree(e) == degree) {
            p.terms_.emplace(e, c);
        }
    }
    return p;
}

Polynomial Polynomial::truncated(int max_degree) const
{
    Polynomial p(nvars_);
    for (const auto& [e, c] : terms_) {
        if (total_degree(e) <= max_degree) {
            p.terms_.emplace(e, c);
        }
    }
    return p;
}

bool Polynomial::involves(int index) const
{
    for (const auto& [e, c] : terms_) {
        if (e[index] != 0) {
            return true;
        }
    }
    return false;
}

void Polynomial::add_term(const ExponentVector& exponents, const Rational& coefficient)
{
    if (coefficient == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(exponents, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

static void require_same_nvars(const Polynomial& a, const Polynomial& b)
{
    if (a.nvars() != b.nvars()) {
        throw Error(ErrorKind::dimension_mismatch, "polynomials live in different numbers of variables");
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& other)
{
    require_same_nvars(*this, other);
    for (const auto& [e, c] : other.terms_) {
        add_term(e, c);
    }
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other)
{
    require_same_nvars(*this, other);
    for (const auto& [e, c] : other.terms_) {
        add_term(e, -c);
    }
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar)
{
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) {
        c *= scalar;
    }
    return *this;
}

Polynomial Polynomial::multiply_truncated(const Polynomial& a, const Polynomial& b, int max_degree)
{
    require_same_nvars(a, b);
    Polynomial p(a.nvars_);
    ExponentVector e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
        const int da = total_degree(ea);
        for (const auto& [eb, cb] : b.terms_) {
            if (da + total_degree(eb) > max_degree) {
                continue;
            }
            for (int i = 0; i < a.nvars_; ++i) {
                e[i] = ea[i] + eb[i];
            }
            p.add_term(e, ca * cb);
        }
    }
    return p;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    const int bound = a.degree().value_or(0) + b.degree().value_or(0);
    return Polynomial::multiply_truncated(a, b, bound);
}

Polynomial substitute(const Polynomial& p, std::span<const Polynomial> images, int max_degree)
{
    if (static_cast<int>(images.size()) != p.nvars()) {
        throw Error(ErrorKind::dimension_mismatch, "substitution needs one image per variable");
    }
    if (images.empty()) {
        throw std::invalid_argument("empty substitution");
    }
    const int target_nvars = images.front().nvars();
    // powers[i][k] = images[i]^k, truncated
    std::vector<std::vector<Polynomial>> powers(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) {
        if (images[i].nvars() != target_nvars) {
            throw Error(ErrorKind::dimension_mismatch, "substitution images disagree on variable count");
        }
        powers[i].push_back(Polynomial::constant(target_nvars, 1));
    }
    auto power = [&](std::size_t i, int k) -> const Polynomial& {
        while (static_cast<int>(powers[i].size()) <= k) {
            powers[i].push_back(Polynomial::multiply_truncated(powers[i].back(), images[i], max_degree));
        }
        return powers[i][k];
    };

    Polynomial result(target_nvars);
    for (const auto& [e, c] : p.terms()) {
        Polynomial term = Polynomial::constant(target_nvars, c);
        for (std::size_t i = 0; i < e.size() && !term.is_zero(); ++i) {
            if (e[i] != 0) {
                term = Polynomial::multiply_truncated(term, power(i, e[i]), max_degree);
            }
        }
        result += term;
    }
    return result;
}

std::string to_string(const Polynomial& p)
{
    if (p.is_zero()) {
        return "0";
    }
    // ascending total degree, then descending lexicographic exponents
    std::vector<std::pair<ExponentVector, Rational>> ordered(p.terms().rbegin(), p.terms().rend());
    std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
        return total_degree(a.first) < total_degree(b.first);
    });
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : ordered) {
        const Rational magnitude = abs(c);
        if (first) {
            if (c < 0) {
                out << '-';
            }
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        const bool constant = total_degree(e) == 0;
        bool need_star = false;
        if (magnitude != 1 || constant) {
            out << magnitude.get_str();
            need_star = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) {
                continue;
            }
            if (need_star) {
                out << '*';
            }
            out << 'x' << i + 1;
            if (e[i] != 1) {
                out << '^' << e[i];
            }
            need_star = true;
        }
    }
    return out.str();
}

PolynomialGerm::PolynomialGerm(Polynomial p) : poly_(std::move(p))
{
    const Rational c = poly_.coefficient(ExponentVector(poly_.nvars(), 0));
    if (c != 0) {
        throw Error(ErrorKind::not_a_germ, "constant term " + c.get_str() + " does not vanish at the origin");
    }
}

bool PolynomialGerm::is_quadratic_form() const
{
    for (const auto& [e, c] : poly_.terms()) {
        if (total_degree(e) != 2) {
            return false;
        }
    }
    return true;
}

PolynomialGerm parse_germ(std::string_view text, std::optional<int> dim)
{
    detail::TextScanner scan(text);
    // (exponent by variable index, coefficient); sized once all terms are read
    std::vector<std::pair<std::map<int, int>, Rational>> terms;
    int max_index = 0;
    bool first = true;
    while (true) {
        scan.skip_space();
        if (scan.at_end()) {
            if (first) {
                throw SyntaxError(scan.offset(), "empty polynomial");
            }
            break;
        }
        int sign = 1;
        if (scan.peek() == '+' || scan.peek() == '-') {
            sign = scan.get() == '-' ? -1 : 1;
            scan.skip_space();
        } else if (!first) {
            throw SyntaxError(scan.offset(), "expected '+' or '-'");
        }
        first = false;

        Rational coefficient = 1;
        bool expect_power = true;
        if (std::isdigit(static_cast<unsigned char>(scan.peek()))) {
            Integer num(scan.digits());
            Integer den = 1;
            scan.skip_space();
            if (scan.peek() == '/') {
                scan.get();
                scan.skip_space();
                const std::size_t at = scan.offset();
                den = Integer(scan.digits());
                if (den == 0) {
                    throw SyntaxError(at, "zero denominator");
                }
                scan.skip_space();
            }
            coefficient = Rational(num, den);
            coefficient.canonicalize();
            if (scan.peek() == '*') {
                scan.get();
                scan.skip_space();
            } else {
                expect_power = false;
            }
        }
        std::map<int, int> exponents;
        while (expect_power) {
            scan.expect('x');
            const std::size_t at = scan.offset();
            const auto index = scan.small_integer();
            if (index < 1 || index > 10000) {
                throw SyntaxError(at, "variable index must be between 1 and 10000");
            }
            scan.skip_space();
            long power = 1;
            if (scan.peek() == '^') {
                scan.get();
                scan.skip_space();
                const std::size_t pat = scan.offset();
                power = static_cast<long>(scan.small_integer());
                if (power < 1 || power > 1000) {
                    throw SyntaxError(pat, "exponent must be between 1 and 1000");
                }
                scan.skip_space();
            }
            exponents[static_cast<int>(index)] += static_cast<int>(power);
            max_index = std::max(max_index, static_cast<int>(index));
            if (scan.peek() == '*') {
                scan.get();
                scan.skip_space();
            } else {
                expect_power = false;
            }
        }
        terms.emplace_back(std::move(exponents), Rational(sign * coefficient));
    }

    int nvars = std::max(max_index, 1);
    if (dim) {
        if (*dim < max_index || *dim < 1) {
            throw Error(ErrorKind::dimension_mismatch,
                        "--dim " + std::to_string(*dim) + " is smaller than the highest variable index "
                            + std::to_string(max_index));
        }
        nvars = *dim;
    }
    Polynomial result(nvars);
    for (const auto& [exponents, c] : terms) {
        ExponentVector e(nvars, 0);
        for (const auto& [index, power] : exponents) {
            e[index - 1] = power;
        }
        result += Polynomial(nvars, {{e, c}});
    }
    return PolynomialGerm(std::move(result));
}

} // namespace quadzeta
