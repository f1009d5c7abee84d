#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "quadzeta/inertia.hpp"
#include "quadzeta/laurent.hpp"
#include "quadzeta/polynomial.hpp"

namespace quadzeta::selfcheck {

/// The closed forms under test. Swappable so the harness itself can be
/// tested against a deliberately wrong formula.
struct ClosedForms {
    std::function<LaurentPolynomial(int, int)> x0;
    std::function<LaurentPolynomial(int, int)> z;
    std::function<LaurentPolynomial(int, int)> x1;
    std::function<LaurentPolynomial(int, int)> xneg1;
};

ClosedForms default_closed_forms();

struct CheckResult {
    std::string name;
    long checked = 0;
    long failed = 0;
    std::string first_failure;
};

struct Report {
    int max = 0;
    std::vector<CheckResult> checks;

    bool ok() const;
    /// "closed-form/oracle grid: 507 identities OK" per line.
    std::string to_text() const;
};

/// Runs every identity grid with quadric indices up to `max` (>= 2). Zeta
/// grids use d <= min(6, max), round trips d <= min(8, max), separation
/// d <= min(5, max). Deterministic.
Report run(int max, const ClosedForms& forms = default_closed_forms());

// Generators shared with the test suites.

/// Random symmetric matrix with small rational entries; about a third of
/// them are built as B^T D B with D having zeros, so that singular forms
/// show up regularly.
RationalMatrix random_symmetric_matrix(std::mt19937_64& rng, int size);

/// Random singular germ (no constant or linear part) with terms of degree
/// 2..max_degree and small rational coefficients.
PolynomialGerm random_germ(std::mt19937_64& rng, int nvars, int max_degree);

} // namespace quadzeta::selfcheck
