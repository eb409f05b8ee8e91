#include <doctest.h>

#include "crmin/errors.hpp"
#include "crmin/random.hpp"
#include "crmin/rational.hpp"

using namespace crmin;

TEST_CASE("rationals stay in lowest terms") {
    CHECK(make_rational(2, 4) == make_rational(1, 2));
    CHECK(make_rational(-6, -9) == make_rational(2, 3));
    CHECK(to_string(make_rational(2, 4)) == "1/2");
    CHECK(to_string(make_rational(-3, 1)) == "-3");
    CHECK_THROWS_AS(make_rational(1, 0), ValidationError);
}

TEST_CASE("parse_rational accepts p and p/q") {
    CHECK(parse_rational("7") == make_rational(7));
    CHECK(parse_rational("-7") == make_rational(-7));
    CHECK(parse_rational("10/15") == make_rational(2, 3));
    CHECK_THROWS_AS(parse_rational("1/0"), ValidationError);
    CHECK_THROWS_AS(parse_rational("x"), ValidationError);
}

TEST_CASE("gaussian rational field arithmetic") {
    GaussianRational i = GaussianRational::i();
    CHECK(i * i == GaussianRational(-1));
    CHECK((i * i * i * i) == GaussianRational(1));

    GaussianRational a{make_rational(1, 2), make_rational(3, 1)};
    GaussianRational b{make_rational(-2, 3), make_rational(1, 5)};
    CHECK(a + b - b == a);
    CHECK(a * b == b * a);
    CHECK((a / b) * b == a);
    CHECK_THROWS_AS(a / GaussianRational(0), ValidationError);
}

TEST_CASE("conjugation is involutive and detects reals") {
    GaussianRational a{make_rational(1, 2), make_rational(3, 7)};
    CHECK(a.conj().conj() == a);
    CHECK(!a.is_real());
    CHECK(a.conj() != a);
    GaussianRational r{make_rational(5, 3), make_rational(0)};
    CHECK(r.is_real());
    CHECK(r.conj() == r);
    // x * conj(x) is real and nonnegative
    GaussianRational n = a * a.conj();
    CHECK(n.is_real());
    CHECK(n.re > 0);
}

TEST_CASE("division agrees with multiplication on random inputs") {
    SplitMix64 rng(42);
    for (int t = 0; t < 200; ++t) {
        GaussianRational a = random_coefficient(rng, 9, 5, true);
        GaussianRational b = random_coefficient(rng, 9, 5, true);
        GaussianRational q = a / b;
        CHECK(q * b == a);
    }
}

TEST_CASE("coefficient printing forms") {
    CHECK(to_string(GaussianRational(3)) == "3");
    CHECK(to_string(GaussianRational(make_rational(-1, 2))) == "-1/2");
    CHECK(to_string(GaussianRational::i()) == "i");
    CHECK(to_string(-GaussianRational::i()) == "-i");
    CHECK(to_string(GaussianRational{make_rational(0), make_rational(2)}) == "2*i");
    CHECK(to_string(GaussianRational{make_rational(1), make_rational(2)}) == "(1 + 2*i)");
    CHECK(to_string(GaussianRational{make_rational(1), make_rational(-2)}) == "(1 - 2*i)");
    CHECK(print_negative(GaussianRational(-1)));
    CHECK(print_negative(-GaussianRational::i()));
    CHECK(!print_negative(GaussianRational{make_rational(1), make_rational(-2)}));
}
