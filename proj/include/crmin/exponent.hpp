#ifndef CRMIN_EXPONENT_HPP
#define CRMIN_EXPONENT_HPP

#include <cstdint>
#include <vector>

namespace crmin {

// Multi-index of per-variable powers; the vector length is the arity of the
// frame the owning series lives in.
using Exponent = std::vector<std::uint32_t>;

std::uint64_t total_degree(const Exponent& e);

enum class Ordering { Less, Equal, Greater };

// Graded lexicographic comparison. Total degree decides first; on ties the
// power vectors are compared left to right and the larger entry sorts
// earlier ("less"). Throws on arity mismatch.
Ordering grlex_cmp(const Exponent& a, const Exponent& b);

// Strict-weak-ordering functor for grlex-keyed maps; begin() is the
// grlex-least (leading) monomial.
struct GrlexLess {
    bool operator()(const Exponent& a, const Exponent& b) const {
        return grlex_cmp(a, b) == Ordering::Less;
    }
};

Exponent exponent_sum(const Exponent& a, const Exponent& b);

// All exponents of the given arity with total degree <= max_degree, in
// grlex order.
std::vector<Exponent> enumerate_exponents(std::size_t arity, std::uint32_t max_degree);

} // namespace crmin

#endif
