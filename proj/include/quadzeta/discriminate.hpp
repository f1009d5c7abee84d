#pragma once

#include "quadzeta/arcspace.hpp"
#include "quadzeta/inertia.hpp"
#include "quadzeta/polynomial.hpp"

namespace quadzeta {

struct Discrimination {
    bool distinguished = false;
    /// Witness, meaningful when distinguished: first (n, selector) at which
    /// the series differ, scanning n upwards and naive, plus, minus within n.
    Selector selector = Selector::naive;
    int n = 0;
    /// Highest T-power actually compared.
    int compared_up_to = 0;
    /// True when the verdict relies on replacing a germ by its quadratic
    /// part beyond T^2. Coefficients of T^1 and T^2 depend only on the
    /// Hessian, so witnesses at n <= 2 and purely quadratic inputs are
    /// unconditional.
    bool conditional = false;
    Inertia f_inertia;
    Inertia g_inertia;
};

/// Compares naive and signed zeta data of f and g (via their Hessian
/// inertia) up to T^order. A difference proves the germs are not blow-Nash
/// equivalent. Germs with zero Hessian are only compared up to T^2, where
/// all their coefficients vanish.
/// Throws NotSingularAtOrigin, DimensionMismatch.
Discrimination discriminate(const PolynomialGerm& f, const PolynomialGerm& g, int order);

} // namespace quadzeta
