#include "crmin/bracket_word.hpp"

#include "crmin/errors.hpp"

namespace crmin {

struct BracketWord::Node {
    bool leaf;
    bool is_u = false;
    int index = 0;
    std::shared_ptr<const Node> l, r;
    int length;
};

BracketWord BracketWord::generator_L(int index) {
    auto n = std::make_shared<Node>();
    n->leaf = true;
    n->is_u = false;
    n->index = index;
    n->length = 1;
    return BracketWord(std::move(n));
}

BracketWord BracketWord::generator_U(int index) {
    auto n = std::make_shared<Node>();
    n->leaf = true;
    n->is_u = true;
    n->index = index;
    n->length = 1;
    return BracketWord(std::move(n));
}

BracketWord BracketWord::bracket(const BracketWord& left, const BracketWord& right) {
    auto n = std::make_shared<Node>();
    n->leaf = false;
    n->l = left.node_;
    n->r = right.node_;
    n->length = left.length() + right.length();
    return BracketWord(std::move(n));
}

bool BracketWord::is_leaf() const { return node_->leaf; }

bool BracketWord::leaf_is_u() const {
    if (!node_->leaf) throw ValidationError("not a generator word");
    return node_->is_u;
}

int BracketWord::leaf_index() const {
    if (!node_->leaf) throw ValidationError("not a generator word");
    return node_->index;
}

const BracketWord BracketWord::left() const {
    if (node_->leaf) throw ValidationError("generator word has no subtrees");
    return BracketWord(node_->l);
}

const BracketWord BracketWord::right() const {
    if (node_->leaf) throw ValidationError("generator word has no subtrees");
    return BracketWord(node_->r);
}

int BracketWord::length() const { return node_->length; }

std::string BracketWord::to_string() const {
    if (node_->leaf)
        return (node_->is_u ? "U" : "L") + std::to_string(node_->index + 1);
    return "[" + left().to_string() + "," + right().to_string() + "]";
}

VectorField materialize(const BracketWord& word, const std::vector<VectorField>& l_fields,
                        const std::vector<VectorField>& u_fields) {
    if (word.is_leaf()) {
        const auto& pool = word.leaf_is_u() ? u_fields : l_fields;
        if (word.leaf_index() < 0 || word.leaf_index() >= static_cast<int>(pool.size()))
            throw ValidationError("generator index out of range in word " + word.to_string());
        return pool[word.leaf_index()];
    }
    return lie_bracket(materialize(word.left(), l_fields, u_fields),
                       materialize(word.right(), l_fields, u_fields));
}

} // namespace crmin
