#ifndef CRMIN_ORACLE_HPP
#define CRMIN_ORACLE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "crmin/series.hpp"

namespace crmin {

// Independent numeric cross-check of the symbolic engine: every model and
// series expression is rebuilt at a working order large enough that no
// truncation can occur, so evaluating a symbolic combination at a rational
// point must agree exactly with combining the pointwise values.
struct OracleOptions {
    int points = 50;        // random points; the all-zero point is always added
    std::uint64_t seed = 1;
    long max_numerator = 3; // sampled coordinates: num in [-3,3], den in [1,3]
    long max_denominator = 3;
};

struct OracleCheck {
    std::string name;   // operation under test: "defect", "wronskian_L1", ...
    int comparisons = 0;
    int mismatches = 0;
    std::string first_mismatch; // point description, empty when clean
};

struct OracleResult {
    int points_sampled = 0;
    int working_precision = 0;
    bool all_match = true;
    std::vector<OracleCheck> checks;
};

// theta_exprs / f_expr / g_expr are re-parsed internally at the inflated
// working order; when f or g is absent a seeded random polynomial is used.
OracleResult run_eval_oracle(int m, int d, const std::vector<std::string>& theta_exprs,
                             const std::string& f_expr, const std::string& g_expr,
                             const OracleOptions& options);

} // namespace crmin

#endif
