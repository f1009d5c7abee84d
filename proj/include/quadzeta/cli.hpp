#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "quadzeta/selfcheck.hpp"

namespace quadzeta::cli {

/// Runs one command line (without the program name). Returns 0 on success,
/// 1 on a domain error (reported as {"error": name, "detail": ...}), 2 on a
/// usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

/// Same, with the closed forms checked by `selfcheck` replaced.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in,
        const selfcheck::ClosedForms& forms);

} // namespace quadzeta::cli
