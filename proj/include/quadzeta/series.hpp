#pragma once

#include <map>
#include <string>
#include <string_view>

#include "quadzeta/laurent.hpp"

namespace quadzeta {

/// Element of T * Z[u, u^-1][T] / (T^(order+1)): a formal power series in T
/// without constant term, known up to and including T^order.
class TruncatedSeries {
public:
    using CoefficientMap = std::map<int, LaurentPolynomial>;

    explicit TruncatedSeries(int order);
    /// Coefficients with index > order are dropped; index < 1 is rejected.
    TruncatedSeries(int order, const CoefficientMap& coefficients);

    int order() const noexcept { return order_; }
    const CoefficientMap& coefficients() const noexcept { return coefficients_; }
    const LaurentPolynomial& coefficient(int n) const;
    bool is_zero() const noexcept { return coefficients_.empty(); }

    // Both throw OrderMismatch unless the orders agree.
    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b)
    {
        return a.order_ == b.order_ && a.coefficients_ == b.coefficients_;
    }

private:
    void accumulate(int n, const LaurentPolynomial& value);

    int order_;
    CoefficientMap coefficients_;
};

/// "(2*u^-1)*T^2 + (2*u^-2)*T^4 + O(T^7)"; the zero series renders as "O(T^7)".
std::string to_string(const TruncatedSeries& series);
TruncatedSeries parse_series(std::string_view text);

} // namespace quadzeta
