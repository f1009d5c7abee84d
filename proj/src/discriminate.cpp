#include "quadzeta/discriminate.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "quadzeta/error.hpp"

namespace quadzeta {

namespace {

// Zeta series of the diagonal form with the given inertia, or nullopt for a
// germ of order >= 3 (whose T^1 and T^2 coefficients are zero).
std::optional<TruncatedSeries> quadratic_zeta(const Inertia& inertia, Selector selector, int order)
{
    if (inertia.rank() == 0) {
        return std::nullopt;
    }
    return arcspace::zeta(QuadraticGerm{inertia.nvars, inertia.plus, inertia.minus}, selector, order);
}

LaurentPolynomial coefficient_or_zero(const std::optional<TruncatedSeries>& series, int n)
{
    return series ? series->coefficient(n) : LaurentPolynomial();
}

} // namespace

Discrimination discriminate(const PolynomialGerm& f, const PolynomialGerm& g, int order)
{
    if (order < 1) {
        throw std::invalid_argument("order must be at least 1");
    }
    if (f.nvars() != g.nvars()) {
        throw Error(ErrorKind::dimension_mismatch,
                    "germs live in R^" + std::to_string(f.nvars()) + " and R^" + std::to_string(g.nvars()));
    }
    Discrimination result;
    result.f_inertia = hessian_inertia(f);
    result.g_inertia = hessian_inertia(g);

    const bool degenerate = result.f_inertia.rank() == 0 || result.g_inertia.rank() == 0;
    result.compared_up_to = degenerate ? std::min(order, 2) : order;

    constexpr Selector selectors[] = {Selector::naive, Selector::plus, Selector::minus};
    std::optional<TruncatedSeries> f_series[3];
    std::optional<TruncatedSeries> g_series[3];
    for (int k = 0; k < 3; ++k) {
        f_series[k] = quadratic_zeta(result.f_inertia, selectors[k], result.compared_up_to);
        g_series[k] = quadratic_zeta(result.g_inertia, selectors[k], result.compared_up_to);
    }

    const bool exact_inputs = f.is_quadratic_form() && g.is_quadratic_form();
    for (int n = 1; n <= result.compared_up_to; ++n) {
        for (int k = 0; k < 3; ++k) {
            if (coefficient_or_zero(f_series[k], n) != coefficient_or_zero(g_series[k], n)) {
                result.distinguished = true;
                result.selector = selectors[k];
                result.n = n;
                result.conditional = n > 2 && !exact_inputs;
                return result;
            }
        }
    }
    result.conditional = result.compared_up_to > 2 && !exact_inputs;
    return result;
}

} // namespace quadzeta
