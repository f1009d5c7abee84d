#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "quadzeta/laurent.hpp"
#include "quadzeta/series.hpp"
#include "quadzeta/set_expression.hpp"

namespace quadzeta {

enum class Selector { naive, plus, minus };
enum class Sign { plus, minus };

std::string_view to_string(Selector selector) noexcept;
Selector parse_selector(std::string_view text);

/// f = x_1^2 + ... + x_s^2 - y_1^2 - ... - y_t^2 on R^d; the remaining
/// d - s - t coordinates do not appear in f.
struct QuadraticGerm {
    int dim = 1;
    int plus = 0;
    int minus = 0;

    int rank() const noexcept { return plus + minus; }
    /// Throws InvalidGerm unless 1 <= s + t <= d.
    void validate() const;
};

struct ArcStratum {
    std::string description;
    SetExpression set;
};

struct ArcStratumReport {
    int order = 0;
    Selector selector = Selector::naive;
    std::vector<ArcStratum> strata;
    LaurentPolynomial total_beta;
};

namespace arcspace {

/// Partitions the arcs of order n with ord(f o gamma) = n (naive) or leading
/// coefficient +1 / -1 by the order e of the arc's (x, y)-block, and
/// evaluates each stratum with the scissor engine.
ArcStratumReport stratify(const QuadraticGerm& germ, int n, Selector selector);

/// Same quantity as stratify(...).total_beta, from closed forms:
///
///   beta(A_n^{+-1}) = u^{n(d-q)} [ sum_{1 <= e < n/2} (beta(X0) - 1) u^{(n-2e)(q-1)} u^{eq}
///                                  + [n even] beta(X^{+-1}) u^{(n/2) q} ]
///
/// with q = s + t; the naive variant uses u^q - u^(q-1) for the last forced
/// hyperplane and u^q - beta(X0) for the e = n/2 stratum.
LaurentPolynomial arc_beta_closed(const QuadraticGerm& germ, int n, Selector selector);

/// Z_f(T) (naive) or Z_f^{+-1}(T) up to T^order, coefficients beta(A_n) u^(-nd)
/// computed through stratify.
TruncatedSeries zeta(const QuadraticGerm& germ, Selector selector, int order);

/// zeta() built from arc_beta_closed instead of the stratification.
TruncatedSeries zeta_closed(const QuadraticGerm& germ, Selector selector, int order);

/// T^2 coefficient of the signed zeta function: u^-(s+t) beta(X^{+-1}_{s,t}).
/// Independent of d.
LaurentPolynomial t2_signed_closed(int s, int t, Sign sign);

/// T^2 coefficient of the naive zeta function: u^-(s+t) (u^(s+t) - beta(X0_{s,t})).
LaurentPolynomial t2_naive_closed(int s, int t);

} // namespace arcspace

} // namespace quadzeta
