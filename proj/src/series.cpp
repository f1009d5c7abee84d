#include "quadzeta/series.hpp"

#include <sstream>
#include <stdexcept>

#include "quadzeta/error.hpp"
#include "text_scanner.hpp"

namespace quadzeta {

TruncatedSeries::TruncatedSeries(int order) : order_(order)
{
    if (order < 1) {
        throw std::invalid_argument("series order must be at least 1");
    }
}

TruncatedSeries::TruncatedSeries(int order, const CoefficientMap& coefficients)
    : TruncatedSeries(order)
{
    for (const auto& [n, value] : coefficients) {
        if (n < 1) {
            throw std::invalid_argument("series coefficients are indexed from 1");
        }
        accumulate(n, value);
    }
}

const LaurentPolynomial& TruncatedSeries::coefficient(int n) const
{
    static const LaurentPolynomial zero;
    auto it = coefficients_.find(n);
    return it == coefficients_.end() ? zero : it->second;
}

void TruncatedSeries::accumulate(int n, const LaurentPolynomial& value)
{
    if (n > order_ || value.is_zero()) {
        return;
    }
    auto [it, inserted] = coefficients_.try_emplace(n, value);
    if (!inserted) {
        it->second += value;
        if (it->second.is_zero()) {
            coefficients_.erase(it);
        }
    }
}

static void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b)
{
    if (a.order() != b.order()) {
        throw Error(ErrorKind::order_mismatch,
                    "series orders differ: " + std::to_string(a.order()) + " vs " + std::to_string(b.order()));
    }
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b)
{
    require_same_order(a, b);
    TruncatedSeries sum = a;
    for (const auto& [n, value] : b.coefficients_) {
        sum.accumulate(n, value);
    }
    return sum;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b)
{
    require_same_order(a, b);
    TruncatedSeries product(a.order_);
    for (const auto& [na, va] : a.coefficients_) {
        for (const auto& [nb, vb] : b.coefficients_) {
            if (na + nb > a.order_) {
                break;
            }
            product.accumulate(na + nb, va * vb);
        }
    }
    return product;
}

std::string to_string(const TruncatedSeries& series)
{
    std::ostringstream out;
    for (const auto& [n, value] : series.coefficients()) {
        out << '(' << to_string(value) << ")*T^" << n << " + ";
    }
    out << "O(T^" << series.order() + 1 << ')';
    return out.str();
}

TruncatedSeries parse_series(std::string_view text)
{
    detail::TextScanner scan(text);
    TruncatedSeries::CoefficientMap coefficients;
    while (true) {
        scan.skip_space();
        if (scan.peek() == 'O') {
            scan.get();
            scan.skip_space();
            scan.expect('(');
            scan.skip_space();
            scan.expect('T');
            scan.skip_space();
            scan.expect('^');
            scan.skip_space();
            const auto bound = scan.small_integer();
            scan.skip_space();
            scan.expect(')');
            scan.skip_space();
            if (!scan.at_end()) {
                throw SyntaxError(scan.offset(), "trailing input after O(T^n)");
            }
            if (bound < 2) {
                throw SyntaxError(scan.offset(), "truncation bound must be at least 2");
            }
            if (!coefficients.empty() && coefficients.rbegin()->first >= bound) {
                throw SyntaxError(scan.offset(), "term beyond the truncation bound");
            }
            return TruncatedSeries(static_cast<int>(bound - 1), coefficients);
        }
        scan.expect('(');
        const std::size_t start = scan.offset();
        while (!scan.at_end() && scan.peek() != ')') {
            scan.get();
        }
        LaurentPolynomial value;
        try {
            value = parse_laurent(text.substr(start, scan.offset() - start));
        } catch (const SyntaxError& e) {
            throw SyntaxError(start + e.offset(), "bad coefficient");
        }
        scan.expect(')');
        scan.skip_space();
        scan.expect('*');
        scan.skip_space();
        scan.expect('T');
        scan.skip_space();
        scan.expect('^');
        scan.skip_space();
        const std::size_t at = scan.offset();
        const auto n = scan.small_integer();
        if (n < 1 || coefficients.count(static_cast<int>(n)) != 0) {
            throw SyntaxError(at, "bad or repeated T exponent");
        }
        coefficients.emplace(static_cast<int>(n), value);
        scan.skip_space();
        scan.expect('+');
    }
}

} // namespace quadzeta
