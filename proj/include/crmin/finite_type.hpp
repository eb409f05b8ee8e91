#ifndef CRMIN_FINITE_TYPE_HPP
#define CRMIN_FINITE_TYPE_HPP

#include <utility>
#include <vector>

#include "crmin/bracket_word.hpp"
#include "crmin/manifold.hpp"
#include "crmin/vector_field.hpp"

namespace crmin {

struct FiniteTypeReport {
    // True when the bracket words span the full tangent space at 0; false
    // means undetermined at the reached depth (a truncated model can never
    // certify infinite type).
    bool finite_type = false;
    int type_length = 0;      // least word length achieving full span
    int max_depth_reached = 0;
    std::vector<std::pair<int, int>> span_by_depth; // (depth, rank), nondecreasing

    // When finite_type: 2m+d words whose fields evaluate at the origin to a
    // basis, with the materialized fields alongside.
    std::vector<BracketWord> spanning_words;
    std::vector<VectorField> spanning_fields;
};

// Breadth-first search over left-normed bracket words [X, prev] with X a
// generator: depth 1 is the 2m generators, each next depth brackets every
// generator onto every nonzero previous-depth word. The origin evaluations
// feed an exact incremental rank computation; the search stops at full rank
// or when max_depth (capped at N-1, the deepest bracket the order supports)
// is exhausted.
FiniteTypeReport finite_type_check(const ManifoldModel& model, int max_depth);

} // namespace crmin

#endif
