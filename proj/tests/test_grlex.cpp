#include <algorithm>
#include <doctest.h>

#include "crmin/errors.hpp"
#include "crmin/exponent.hpp"
#include "crmin/frame.hpp"
#include "crmin/random.hpp"

using namespace crmin;

namespace {

// Independent comparator: sort key (total degree, negated power vector),
// compared as plain tuples. Larger entry first on ties == smaller key.
std::vector<long long> sort_key(const Exponent& e) {
    std::vector<long long> key;
    key.push_back(static_cast<long long>(total_degree(e)));
    for (auto p : e) key.push_back(-static_cast<long long>(p));
    return key;
}

bool oracle_less(const Exponent& a, const Exponent& b) { return sort_key(a) < sort_key(b); }

Exponent random_exponent(SplitMix64& rng, std::size_t arity, std::uint32_t max_entry) {
    Exponent e(arity);
    for (auto& p : e) p = static_cast<std::uint32_t>(rng.below(max_entry + 1));
    return e;
}

} // namespace

TEST_CASE("degree dominates, ties go to the larger leading entry") {
    CHECK(grlex_cmp({1, 0}, {0, 1}) == Ordering::Less);    // (1,0) precedes (0,1)
    CHECK(grlex_cmp({0, 2}, {1, 0}) == Ordering::Greater); // degree 1 precedes degree 2
    CHECK(grlex_cmp({1, 1}, {1, 1}) == Ordering::Equal);
    CHECK(grlex_cmp({2, 0, 1}, {2, 1, 0}) == Ordering::Greater);
    CHECK_THROWS_AS(grlex_cmp({1, 0}, {1, 0, 0}), ValidationError);
}

TEST_CASE("full sort of 2-variable exponents of degree <= 2 is frozen") {
    auto sorted = enumerate_exponents(2, 2);
    std::vector<Exponent> expected = {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};
    CHECK(sorted == expected);
    CHECK(std::is_sorted(sorted.begin(), sorted.end(), GrlexLess{}));
    // and matches the independent comparator ordering
    auto by_oracle = sorted;
    std::sort(by_oracle.begin(), by_oracle.end(), oracle_less);
    CHECK(by_oracle == sorted);
}

TEST_CASE("grlex agrees with the brute-force comparator on random pairs") {
    SplitMix64 rng(7);
    for (int t = 0; t < 2000; ++t) {
        std::size_t arity = 1 + rng.below(4);
        Exponent a = random_exponent(rng, arity, 5);
        Exponent b = random_exponent(rng, arity, 5);
        Ordering ord = grlex_cmp(a, b);
        if (oracle_less(a, b))
            CHECK(ord == Ordering::Less);
        else if (oracle_less(b, a))
            CHECK(ord == Ordering::Greater);
        else
            CHECK(ord == Ordering::Equal);
    }
}

TEST_CASE("grlex is a monomial order: translation invariance") {
    SplitMix64 rng(11);
    for (int t = 0; t < 1000; ++t) {
        Exponent a = random_exponent(rng, 3, 4);
        Exponent b = random_exponent(rng, 3, 4);
        Exponent c = random_exponent(rng, 3, 4);
        CHECK(grlex_cmp(a, b) == grlex_cmp(exponent_sum(a, c), exponent_sum(b, c)));
    }
    // 1 is the global minimum
    for (int t = 0; t < 100; ++t) {
        Exponent a = random_exponent(rng, 3, 4);
        if (total_degree(a) == 0) continue;
        CHECK(grlex_cmp(Exponent{0, 0, 0}, a) == Ordering::Less);
    }
}

TEST_CASE("frame variable names resolve back to their indices") {
    using namespace crmin;
    for (FrameKind kind :
         {FrameKind::T, FrameKind::Tau, FrameKind::Intrinsic, FrameKind::Full}) {
        VariableFrame frame(kind, 3, 2);
        for (std::size_t i = 0; i < frame.arity(); ++i)
            CHECK(frame.find_var(frame.var_name(i)) == i);
        CHECK(!frame.find_var("z4"));
        CHECK(!frame.find_var("zeta0"));
        CHECK(!frame.find_var("q1"));
    }
    VariableFrame t(FrameKind::T, 2, 1);
    CHECK(!t.find_var("zeta1"));
    CHECK(!t.find_var("xi1"));
}

TEST_CASE("enumerate_exponents covers exactly the simplex") {
    auto all = enumerate_exponents(3, 4);
    std::size_t expected = 0;
    for (std::uint32_t d = 0; d <= 4; ++d) expected += (d + 1) * (d + 2) / 2;
    CHECK(all.size() == expected);
    CHECK(std::is_sorted(all.begin(), all.end(), GrlexLess{}));
    for (const auto& e : all) CHECK(total_degree(e) <= 4);
}
