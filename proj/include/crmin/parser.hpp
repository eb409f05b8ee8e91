#ifndef CRMIN_PARSER_HPP
#define CRMIN_PARSER_HPP

#include <optional>
#include <string>

#include "crmin/series.hpp"

namespace crmin {

// Expression grammar (whitespace-insensitive):
//
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*            -- implicit multiplication is an error
//   factor := '-' factor | power
//   power  := atom ('^' INT)?                 -- nonnegative integer exponents
//   atom   := INT ('/' INT)? | 'i' | VAR | '(' expr ')'
//
// Variables are z1..zm, w1..wd, zeta1..zetam, xi1..xid. Constants are exact
// rationals; 'i' is the imaginary unit.
struct ParseOptions {
    // When absent, the smallest frame containing the used variables is
    // inferred (T, then M_INTRINSIC, then TAU/FULL when xi appears).
    std::optional<FrameKind> frame;
    // Degree >= precision is an error unless truncation is requested.
    bool allow_truncation = false;
};

// Parses `text` into an exact series at the given precision. Throws
// ParseError (with position) on syntax errors, unknown variables, frame
// conflicts, or out-of-range degree.
TruncatedSeries parse_expression(const std::string& text, int m, int d, int precision,
                                 const ParseOptions& options = {});

} // namespace crmin

#endif
