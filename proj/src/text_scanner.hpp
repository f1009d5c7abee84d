#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>

#include "quadzeta/error.hpp"

namespace quadzeta::detail {

// Cursor over parser input that reports offsets into the original text.
class TextScanner {
public:
    explicit TextScanner(std::string_view text) : text_(text) {}

    bool at_end() const noexcept { return pos_ >= text_.size(); }
    std::size_t offset() const noexcept { return pos_; }
    char peek() const noexcept { return at_end() ? '\0' : text_[pos_]; }
    char get() noexcept { return at_end() ? '\0' : text_[pos_++]; }

    void skip_space() noexcept
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    void expect(char c)
    {
        if (peek() != c) {
            throw SyntaxError(pos_, std::string("expected '") + c + "'");
        }
        ++pos_;
    }

    std::string digits()
    {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        if (start == pos_) {
            throw SyntaxError(pos_, "expected digits");
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    std::int64_t small_integer()
    {
        const std::size_t start = pos_;
        std::string d = digits();
        if (d.size() > 12) {
            throw SyntaxError(start, "integer too large");
        }
        return std::stoll(d);
    }

    std::int64_t signed_integer()
    {
        bool negative = false;
        if (peek() == '-' || peek() == '+') {
            negative = get() == '-';
        }
        const std::int64_t v = small_integer();
        return negative ? -v : v;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace quadzeta::detail
