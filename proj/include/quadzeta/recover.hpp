#pragma once

#include <string>

#include "quadzeta/laurent.hpp"

namespace quadzeta {

struct SignaturePair {
    int s = 0;
    int t = 0;

    friend bool operator==(const SignaturePair&, const SignaturePair&) = default;
};

/// Reads (s, t) off the T^2 coefficients of the signed zeta functions.
///
/// Dividing a nonzero coefficient by its lowest power of u leaves u^k - 1
/// (then s = k) or u^k + 1 (then s = k + 1, with 2 = u^0 + 1 meaning s = 1);
/// a zero plus-coefficient means s = 0. Likewise for t from the minus
/// coefficient. Throws NotSignatureForm on any other residual.
SignaturePair recover_signature(const LaurentPolynomial& plus_coefficient,
                                const LaurentPolynomial& minus_coefficient);

struct NaiveRecovery {
    bool determined = false;
    int min = 0; // m = min(s, t)
    int max = 0; // M = max(s, t)
    std::string reason;
};

/// Reads m = min(s, t) and M = max(s, t) off the naive T^2 coefficient
///   1 - u^-1 + u^-(m+1) - u^-M   (m >= 1).
/// The family M = m + 1 collapses to 1 - u^-1 and is reported ambiguous, as
/// is m = 0 (coefficient 1 - u^-M), whose reading depends on the convention
/// for the cone {-sum y^2 = 0}. Throws NotSignatureForm otherwise.
NaiveRecovery recover_minmax_naive(const LaurentPolynomial& naive_coefficient);

} // namespace quadzeta
