#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace quadzeta {

enum class ErrorKind {
    zero_polynomial,
    pole_at_zero,
    order_mismatch,
    empty_projective_quadric,
    not_reducible,
    malformed_expression,
    invalid_germ,
    syntax_error,
    not_a_germ,
    not_singular_at_origin,
    not_signature_form,
    dimension_mismatch,
};

// Stable, CamelCase names used in the JSON error envelope.
std::string_view error_name(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& detail)
        : std::runtime_error(detail), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }
    std::string_view name() const noexcept { return error_name(kind_); }

private:
    ErrorKind kind_;
};

class SyntaxError : public Error {
public:
    SyntaxError(std::size_t offset, const std::string& what)
        : Error(ErrorKind::syntax_error, what + " at offset " + std::to_string(offset)),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

} // namespace quadzeta
