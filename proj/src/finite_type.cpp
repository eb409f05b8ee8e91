#include "crmin/finite_type.hpp"

#include <algorithm>

#include "crmin/errors.hpp"
#include "crmin/linalg.hpp"

namespace crmin {

FiniteTypeReport finite_type_check(const ManifoldModel& model, int max_depth) {
    if (max_depth < 1)
        throw ValidationError("finite_type_check: max_depth must be >= 1");
    const int full_rank = 2 * model.m() + model.d();
    // A word of length l materializes at precision >= N - l; depth N-1 is
    // the last one still carrying a coefficient.
    const int depth_cap = std::min(max_depth, model.precision() - 1);

    const auto l_fields = build_L_fields(model);
    const auto u_fields = build_U_fields(model);
    std::vector<std::pair<BracketWord, VectorField>> generators;
    for (int k = 0; k < model.m(); ++k)
        generators.emplace_back(BracketWord::generator_L(k), l_fields[k]);
    for (int k = 0; k < model.m(); ++k)
        generators.emplace_back(BracketWord::generator_U(k), u_fields[k]);

    FiniteTypeReport report;
    std::vector<std::vector<GaussianRational>> basis_rows;
    std::vector<std::pair<BracketWord, VectorField>> previous;

    for (int depth = 1; depth <= depth_cap; ++depth) {
        std::vector<std::pair<BracketWord, VectorField>> current;
        if (depth == 1) {
            current = generators;
        } else {
            for (const auto& [pw, pf] : previous) {
                for (const auto& [gw, gf] : generators) {
                    VectorField bracket = lie_bracket(gf, pf);
                    if (bracket.is_zero()) continue;
                    current.emplace_back(BracketWord::bracket(gw, pw), std::move(bracket));
                }
            }
        }
        for (const auto& [word, field] : current) {
            auto vec = evaluate_at_origin(field);
            if (static_cast<int>(basis_rows.size()) < full_rank &&
                extends_row_space(basis_rows, vec)) {
                basis_rows.push_back(std::move(vec));
                report.spanning_words.push_back(word);
                report.spanning_fields.push_back(field);
            }
        }
        report.max_depth_reached = depth;
        report.span_by_depth.emplace_back(depth, static_cast<int>(basis_rows.size()));
        if (static_cast<int>(basis_rows.size()) == full_rank) {
            report.finite_type = true;
            report.type_length = depth;
            return report;
        }
        previous = std::move(current);
    }
    // Undetermined: keep the partial frame out of the report to avoid
    // anything downstream mistaking it for a spanning one.
    report.spanning_words.clear();
    report.spanning_fields.clear();
    return report;
}

} // namespace crmin
