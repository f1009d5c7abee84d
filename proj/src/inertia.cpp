#include "quadzeta/inertia.hpp"

#include <stdexcept>
#include <utility>

#include "quadzeta/error.hpp"

namespace quadzeta {

RationalMatrix RationalMatrix::identity(int size)
{
    RationalMatrix m(size);
    for (int i = 0; i < size; ++i) {
        m(i, i) = 1;
    }
    return m;
}

bool RationalMatrix::is_symmetric() const
{
    for (int i = 0; i < size_; ++i) {
        for (int j = i + 1; j < size_; ++j) {
            if ((*this)(i, j) != (*this)(j, i)) {
                return false;
            }
        }
    }
    return true;
}

RationalMatrix RationalMatrix::transpose() const
{
    RationalMatrix t(size_);
    for (int i = 0; i < size_; ++i) {
        for (int j = 0; j < size_; ++j) {
            t(j, i) = (*this)(i, j);
        }
    }
    return t;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b)
{
    if (a.size_ != b.size_) {
        throw Error(ErrorKind::dimension_mismatch, "matrix sizes differ");
    }
    RationalMatrix c(a.size_);
    for (int i = 0; i < a.size_; ++i) {
        for (int k = 0; k < a.size_; ++k) {
            if (a(i, k) == 0) {
                continue;
            }
            for (int j = 0; j < a.size_; ++j) {
                c(i, j) += a(i, k) * b(k, j);
            }
        }
    }
    return c;
}

namespace {

// Simultaneous row/column operations keep `a` congruent to the input;
// the same column operations applied to `basis` record the substitution.
struct CongruenceState {
    RationalMatrix a;
    RationalMatrix basis;

    void swap(int i, int j)
    {
        if (i == j) {
            return;
        }
        const int n = a.size();
        for (int k = 0; k < n; ++k) {
            std::swap(a(i, k), a(j, k));
        }
        for (int k = 0; k < n; ++k) {
            std::swap(a(k, i), a(k, j));
            std::swap(basis(k, i), basis(k, j));
        }
    }

    // column_i += factor * column_j, and the same on rows
    void add(int i, int j, const Rational& factor)
    {
        const int n = a.size();
        for (int k = 0; k < n; ++k) {
            a(k, i) += factor * a(k, j);
            basis(k, i) += factor * basis(k, j);
        }
        for (int k = 0; k < n; ++k) {
            a(i, k) += factor * a(j, k);
        }
    }
};

} // namespace

CongruenceDiagonalization congruence_diagonalize(const RationalMatrix& symmetric)
{
    if (!symmetric.is_symmetric()) {
        throw std::invalid_argument("congruence diagonalisation needs a symmetric matrix");
    }
    const int n = symmetric.size();
    CongruenceState st{symmetric, RationalMatrix::identity(n)};

    for (int k = 0; k < n; ++k) {
        int pivot = -1;
        for (int i = k; i < n && pivot < 0; ++i) {
            if (st.a(i, i) != 0) {
                pivot = i;
            }
        }
        if (pivot < 0) {
            int pi = -1;
            int pj = -1;
            for (int i = k; i < n && pi < 0; ++i) {
                for (int j = i + 1; j < n; ++j) {
                    if (st.a(i, j) != 0) {
                        pi = i;
                        pj = j;
                        break;
                    }
                }
            }
            if (pi < 0) {
                break; // remaining block is zero
            }
            // x_i -> x_i + x_j turns a_ii into 2 a_ij
            st.add(pi, pj, 1);
            pivot = pi;
        }
        st.swap(k, pivot);
        const Rational p = st.a(k, k);
        for (int j = k + 1; j < n; ++j) {
            if (st.a(k, j) != 0) {
                st.add(j, k, -st.a(k, j) / p);
            }
        }
    }

    CongruenceDiagonalization result{st.basis, std::vector<Rational>(n)};
    for (int i = 0; i < n; ++i) {
        result.diagonal[i] = st.a(i, i);
    }
    return result;
}

Inertia inertia_of(const RationalMatrix& symmetric)
{
    Inertia inertia;
    inertia.nvars = symmetric.size();
    for (const auto& d : congruence_diagonalize(symmetric).diagonal) {
        if (d > 0) {
            ++inertia.plus;
        } else if (d < 0) {
            ++inertia.minus;
        }
    }
    return inertia;
}

RationalMatrix quadratic_form_matrix(const PolynomialGerm& f)
{
    const int n = f.nvars();
    RationalMatrix a(n);
    const Polynomial quadratic = f.polynomial().homogeneous_part(2);
    for (const auto& [e, c] : quadratic.terms()) {
        std::vector<int> idx;
        for (int i = 0; i < n; ++i) {
            for (int k = 0; k < e[i]; ++k) {
                idx.push_back(i);
            }
        }
        if (idx[0] == idx[1]) {
            a(idx[0], idx[0]) += c;
        } else {
            a(idx[0], idx[1]) += c / 2;
            a(idx[1], idx[0]) += c / 2;
        }
    }
    return a;
}

Inertia hessian_inertia(const PolynomialGerm& f)
{
    if (!f.is_singular()) {
        throw Error(ErrorKind::not_singular_at_origin,
                    "linear part " + to_string(f.polynomial().homogeneous_part(1)) + " does not vanish");
    }
    return inertia_of(quadratic_form_matrix(f));
}

namespace oracle {

std::vector<Rational> characteristic_polynomial(const RationalMatrix& a)
{
    const int n = a.size();
    std::vector<Rational> coeffs(n + 1);
    coeffs[n] = 1;
    RationalMatrix m(n); // M_0 = 0
    for (int k = 1; k <= n; ++k) {
        // M_k = A M_{k-1} + c_{n-k+1} I,  c_{n-k} = -tr(A M_k) / k
        RationalMatrix next = a * m;
        for (int i = 0; i < n; ++i) {
            next(i, i) += coeffs[n - k + 1];
        }
        const RationalMatrix am = a * next;
        Rational trace = 0;
        for (int i = 0; i < n; ++i) {
            trace += am(i, i);
        }
        coeffs[n - k] = -trace / k;
        m = std::move(next);
    }
    return coeffs;
}

namespace {

int sign_variations(const std::vector<Rational>& coeffs)
{
    int variations = 0;
    int last = 0;
    for (const auto& c : coeffs) {
        const int s = sgn(c);
        if (s == 0) {
            continue;
        }
        if (last != 0 && s != last) {
            ++variations;
        }
        last = s;
    }
    return variations;
}

} // namespace

Inertia inertia_by_sign_variations(const RationalMatrix& symmetric)
{
    if (!symmetric.is_symmetric()) {
        throw std::invalid_argument("inertia oracle needs a symmetric matrix");
    }
    const auto p = characteristic_polynomial(symmetric);
    std::vector<Rational> reflected(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) {
        reflected[k] = k % 2 == 0 ? p[k] : Rational(-p[k]);
    }
    Inertia inertia;
    inertia.nvars = symmetric.size();
    inertia.plus = sign_variations(p);
    inertia.minus = sign_variations(reflected);
    return inertia;
}

} // namespace oracle

} // namespace quadzeta
