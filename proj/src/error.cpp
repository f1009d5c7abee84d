#include "quadzeta/error.hpp"

namespace quadzeta {

std::string_view error_name(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::zero_polynomial: return "ZeroPolynomial";
    case ErrorKind::pole_at_zero: return "PoleAtZero";
    case ErrorKind::order_mismatch: return "OrderMismatch";
    case ErrorKind::empty_projective_quadric: return "EmptyProjectiveQuadric";
    case ErrorKind::not_reducible: return "NotReducible";
    case ErrorKind::malformed_expression: return "MalformedExpression";
    case ErrorKind::invalid_germ: return "InvalidGerm";
    case ErrorKind::syntax_error: return "SyntaxError";
    case ErrorKind::not_a_germ: return "NotAGerm";
    case ErrorKind::not_singular_at_origin: return "NotSingularAtOrigin";
    case ErrorKind::not_signature_form: return "NotSignatureForm";
    case ErrorKind::dimension_mismatch: return "DimensionMismatch";
    }
    return "Unknown";
}

} // namespace quadzeta
