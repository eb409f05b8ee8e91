#ifndef CRMIN_BRACKET_WORD_HPP
#define CRMIN_BRACKET_WORD_HPP

#include <memory>
#include <string>
#include <vector>

#include "crmin/vector_field.hpp"

namespace crmin {

// Formal bracket expression over the generators L_1..L_m (the z-direction
// tangent fields) and U_1..U_m (the zeta-direction ones): leaves are
// generators, internal nodes mean the Lie bracket of the two subtrees.
// Cheap to copy (immutable shared tree).
class BracketWord {
public:
    static BracketWord generator_L(int index); // 0-based
    static BracketWord generator_U(int index);
    static BracketWord bracket(const BracketWord& left, const BracketWord& right);

    bool is_leaf() const;
    bool leaf_is_u() const;
    int leaf_index() const;
    const BracketWord left() const;
    const BracketWord right() const;

    // Number of leaves.
    int length() const;

    // "L1", "U2", "[U1,L1]", "[L1,[U1,L1]]"
    std::string to_string() const;

private:
    struct Node;
    explicit BracketWord(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

// Recursively builds the field of a word from the generator fields.
VectorField materialize(const BracketWord& word, const std::vector<VectorField>& l_fields,
                        const std::vector<VectorField>& u_fields);

} // namespace crmin

#endif
