#pragma once

#include <vector>

#include "quadzeta/inertia.hpp"
#include "quadzeta/polynomial.hpp"

namespace quadzeta {

/// Jet-level splitting f o phi = Q + F (mod degree > jet_order), where
/// Q = sum_i d_i x_i^2 over the first rank variables (positive d_i first,
/// then negative) and F is a germ of order >= 3 in the last corank variables.
struct SplitResult {
    /// phi as images of x1..x_n, truncated at jet_order; linear part invertible.
    std::vector<Polynomial> change;
    /// d_i for i < rank. Rescaled to +-1 whenever |d_i| is a rational square;
    /// otherwise the sign is what matters and the square root scaling that
    /// would make it +-1 is left implicit.
    std::vector<Rational> diagonal;
    Polynomial quadratic_part;
    Polynomial remainder;
    Inertia inertia;
    int jet_order = 3;

    /// Q written with +-1 coefficients, e.g. "x1^2 + x2^2 - x3^2".
    Polynomial normal_form() const;
};

/// Throws NotSingularAtOrigin, or std::invalid_argument if jet_order < 3.
SplitResult split_jet(const PolynomialGerm& f, int jet_order);

/// Recomputes f o change by plain substitution and checks that
/// f o change - quadratic_part - remainder has no term of degree
/// <= jet_order, that the remainder has order >= 3 in the corank variables
/// only, and that the linear part of change is invertible.
bool verify_split(const PolynomialGerm& f, const SplitResult& result);

} // namespace quadzeta
