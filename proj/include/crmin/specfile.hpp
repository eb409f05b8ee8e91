#ifndef CRMIN_SPECFILE_HPP
#define CRMIN_SPECFILE_HPP

#include <optional>
#include <string>
#include <vector>

namespace crmin {

// Key-value model description:
//
//   # comment
//   m = 1
//   d = 1
//   order = 8
//   theta = w1 - 2*i*z1*zeta1     (one line per defining series, d of them)
//   f = 5 + 5*z1                  (optional named series)
//   g = 1 + z1
//
// Expressions follow the grammar in parser.hpp; everything after '=' up to
// a '#' is the value.
struct SpecFile {
    int m = 0;
    int d = 0;
    int order = 0;
    std::vector<std::string> theta_exprs;
    std::optional<std::string> f_expr;
    std::optional<std::string> g_expr;
    std::string raw; // original bytes, for the input digest
};

SpecFile parse_spec_text(const std::string& text);
SpecFile load_spec_file(const std::string& path);

} // namespace crmin

#endif
