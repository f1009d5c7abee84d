#include "quadzeta/split.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "quadzeta/error.hpp"

namespace quadzeta {

namespace {

// Exact square root of a positive rational, if it has one.
bool rational_sqrt(const Rational& value, Rational& root)
{
    if (value <= 0) {
        return false;
    }
    const Integer num = sqrt(value.get_num());
    const Integer den = sqrt(value.get_den());
    if (num * num != value.get_num() || den * den != value.get_den()) {
        return false;
    }
    root = Rational(num, den);
    root.canonicalize();
    return true;
}

std::vector<Polynomial> linear_images(const RationalMatrix& basis)
{
    const int n = basis.size();
    std::vector<Polynomial> images;
    for (int row = 0; row < n; ++row) {
        Polynomial image(n);
        for (int col = 0; col < n; ++col) {
            if (basis(row, col) != 0) {
                image += Polynomial::variable(n, col) * basis(row, col);
            }
        }
        images.push_back(std::move(image));
    }
    return images;
}

std::vector<Polynomial> compose(const std::vector<Polynomial>& outer, const std::vector<Polynomial>& inner, int jet)
{
    std::vector<Polynomial> result;
    result.reserve(outer.size());
    for (const auto& component : outer) {
        result.push_back(substitute(component, inner, jet));
    }
    return result;
}

bool linear_part_invertible(const std::vector<Polynomial>& change)
{
    const int n = static_cast<int>(change.size());
    RationalMatrix m(n);
    for (int row = 0; row < n; ++row) {
        for (int col = 0; col < n; ++col) {
            ExponentVector e(n, 0);
            e[col] = 1;
            m(row, col) = change[row].coefficient(e);
        }
    }
    // Gaussian elimination rank
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int pivot = -1;
        for (int r = rank; r < n; ++r) {
            if (m(r, col) != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) {
            continue;
        }
        for (int c = 0; c < n; ++c) {
            std::swap(m(rank, c), m(pivot, c));
        }
        for (int r = rank + 1; r < n; ++r) {
            const Rational factor = m(r, col) / m(rank, col);
            for (int c = col; c < n; ++c) {
                m(r, c) -= factor * m(rank, c);
            }
        }
        ++rank;
    }
    return rank == n;
}

} // namespace

Polynomial SplitResult::normal_form() const
{
    const int n = quadratic_part.nvars();
    Polynomial q(n);
    for (std::size_t i = 0; i < diagonal.size(); ++i) {
        const Polynomial x = Polynomial::variable(n, static_cast<int>(i));
        q += x * x * Rational(sgn(diagonal[i]));
    }
    return q;
}

SplitResult split_jet(const PolynomialGerm& f, int jet_order)
{
    if (jet_order < 3) {
        throw std::invalid_argument("jet order must be at least 3");
    }
    const Inertia inertia = hessian_inertia(f);
    const int n = f.nvars();
    const int rank = inertia.rank();

    // Diagonalise the quadratic part and order the new variables as
    // positive pivots, negative pivots, zero pivots.
    const auto diag = congruence_diagonalize(quadratic_form_matrix(f));
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
        auto rank_of = [&](int k) { return diag.diagonal[k] > 0 ? 0 : diag.diagonal[k] < 0 ? 1 : 2; };
        return rank_of(i) < rank_of(j);
    });
    RationalMatrix basis(n);
    std::vector<Rational> d(rank);
    for (int col = 0; col < n; ++col) {
        const int src = order[col];
        Rational scale = 1;
        if (col < rank) {
            Rational root;
            if (rational_sqrt(abs(diag.diagonal[src]), root)) {
                scale = 1 / root;
            }
            d[col] = diag.diagonal[src] * scale * scale;
        }
        for (int row = 0; row < n; ++row) {
            basis(row, col) = diag.basis(row, src) * scale;
        }
    }

    std::vector<Polynomial> change = linear_images(basis);
    Polynomial g = substitute(f.polynomial(), change, jet_order);

    // Degree by degree, absorb every term c * x_i * m with x_i the first
    // rank variable of the monomial through x_i -> x_i - c / (2 d_i) * m.
    // The substitution only creates terms of degree >= 2k - 2 > k.
    for (int k = 3; k <= jet_order && rank > 0; ++k) {
        std::vector<Polynomial> step;
        for (int i = 0; i < n; ++i) {
            step.push_back(Polynomial::variable(n, i));
        }
        bool any = false;
        const Polynomial part = g.homogeneous_part(k);
        for (const auto& [e, c] : part.terms()) {
            int i = 0;
            while (i < rank && e[i] == 0) {
                ++i;
            }
            if (i == rank) {
                continue;
            }
            ExponentVector m = e;
            --m[i];
            step[i] -= Polynomial(n, {{m, c / (2 * d[i])}});
            any = true;
        }
        if (!any) {
            continue;
        }
        change = compose(change, step, jet_order);
        g = substitute(g, step, jet_order);
    }

    SplitResult result{change, d, Polynomial(n), Polynomial(n), inertia, jet_order};
    for (int i = 0; i < rank; ++i) {
        const Polynomial x = Polynomial::variable(n, i);
        result.quadratic_part += x * x * d[i];
    }
    result.remainder = g - result.quadratic_part;
    for (int i = 0; i < rank; ++i) {
        if (result.remainder.involves(i)) {
            throw std::logic_error("split_jet: rank variable survived in the remainder");
        }
    }
    return result;
}

bool verify_split(const PolynomialGerm& f, const SplitResult& result)
{
    const int n = f.nvars();
    if (static_cast<int>(result.change.size()) != n || result.quadratic_part.nvars() != n
        || result.remainder.nvars() != n) {
        return false;
    }
    if (!linear_part_invertible(result.change)) {
        return false;
    }
    for (const auto& component : result.change) {
        if (component.coefficient(ExponentVector(n, 0)) != 0) {
            return false;
        }
    }
    const int rank = result.inertia.rank();
    for (int i = 0; i < rank; ++i) {
        if (result.remainder.involves(i)) {
            return false;
        }
    }
    if (const auto o = result.remainder.order(); o && *o < 3) {
        return false;
    }
    // the quadratic part must be diagonal in the first rank variables
    for (const auto& [e, c] : result.quadratic_part.terms()) {
        const auto it = std::find(e.begin(), e.end(), 2);
        if (total_degree(e) != 2 || it == e.end() || it - e.begin() >= rank) {
            return false;
        }
    }
    const Polynomial composed = substitute(f.polynomial(), result.change, result.jet_order);
    const Polynomial residual = composed - result.quadratic_part - result.remainder;
    return residual.truncated(result.jet_order).is_zero();
}

} // namespace quadzeta
