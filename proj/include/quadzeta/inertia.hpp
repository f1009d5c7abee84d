#pragma once

#include <vector>

#include "quadzeta/laurent.hpp"
#include "quadzeta/polynomial.hpp"

namespace quadzeta {

/// Dense square matrix of rationals, row-major.
class RationalMatrix {
public:
    explicit RationalMatrix(int size = 0) : size_(size), entries_(static_cast<std::size_t>(size) * size) {}

    static RationalMatrix identity(int size);

    int size() const noexcept { return size_; }
    Rational& operator()(int i, int j) { return entries_[static_cast<std::size_t>(i) * size_ + j]; }
    const Rational& operator()(int i, int j) const { return entries_[static_cast<std::size_t>(i) * size_ + j]; }

    bool is_symmetric() const;
    RationalMatrix transpose() const;
    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b)
    {
        return a.size_ == b.size_ && a.entries_ == b.entries_;
    }

private:
    int size_;
    std::vector<Rational> entries_;
};

struct Inertia {
    int nvars = 0;
    int plus = 0;   // s
    int minus = 0;  // t

    int rank() const noexcept { return plus + minus; }
    int corank() const noexcept { return nvars - rank(); }
    int index() const noexcept { return minus; }

    friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// basis^T * form * basis = diag(diagonal).
struct CongruenceDiagonalization {
    RationalMatrix basis;
    std::vector<Rational> diagonal;
};

/// Symmetric Gaussian elimination over Q. A zero pivot with a nonzero
/// off-diagonal entry a_ij is repaired by the hyperbolic move x_i -> x_i + x_j.
CongruenceDiagonalization congruence_diagonalize(const RationalMatrix& symmetric);

/// Signs of the congruence pivots (Sylvester's law of inertia).
Inertia inertia_of(const RationalMatrix& symmetric);

/// Matrix A of the degree-2 part, so that f_2(x) = x^T A x (half the Hessian).
RationalMatrix quadratic_form_matrix(const PolynomialGerm& f);

/// Throws NotSingularAtOrigin if f has a linear part.
Inertia hessian_inertia(const PolynomialGerm& f);

namespace oracle {

/// det(x I - A) by Faddeev-LeVerrier; coefficient of x^k at index k.
std::vector<Rational> characteristic_polynomial(const RationalMatrix& a);

/// Inertia from the characteristic polynomial: zero eigenvalues are the
/// multiplicity of the root 0, positive ones the sign variations of the
/// coefficients (exact by Descartes since the roots are real), negative ones
/// the sign variations of p(-x).
Inertia inertia_by_sign_variations(const RationalMatrix& symmetric);

} // namespace oracle

} // namespace quadzeta
