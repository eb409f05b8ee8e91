#include <doctest.h>

#include "crmin/errors.hpp"
#include "crmin/parser.hpp"
#include "crmin/random.hpp"
#include "test_support.hpp"

using namespace crmin;
using crmin_test::parse_in;

TEST_CASE("defining-series expression parses to the hand-built table") {
    auto theta = parse_in("w1 - 2*i*z1*zeta1", FrameKind::Full, 1, 1, 8);
    auto by_hand = TruncatedSeries::from_terms(
        VariableFrame(FrameKind::Full, 1, 1), 8,
        {{{0, 1, 0, 0}, GaussianRational(1)},
         {{1, 0, 1, 0}, GaussianRational{make_rational(0), make_rational(-2)}}});
    CHECK(theta == by_hand);
}

TEST_CASE("rational coefficients") {
    auto s = parse_expression("1/3 * z1^2", 1, 1, 8);
    CHECK(s.coefficient({2, 0}) == GaussianRational(make_rational(1, 3)));
    CHECK(s.frame().kind == FrameKind::T);
    CHECK(parse_expression("10/15", 1, 1, 8).constant_term() ==
          GaussianRational(make_rational(2, 3)));
    CHECK(parse_expression("1 / 3", 1, 1, 8).constant_term() ==
          GaussianRational(make_rational(1, 3)));
}

TEST_CASE("implicit multiplication is rejected with a position") {
    try {
        parse_expression("z1 w1", 1, 1, 8);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position == 3);
        CHECK(std::string(e.what()).find("implicit multiplication") != std::string::npos);
    }
}

TEST_CASE("syntax errors carry positions") {
    CHECK_THROWS_AS(parse_expression("z1 + ", 1, 1, 8), ParseError);
    CHECK_THROWS_AS(parse_expression("(z1", 1, 1, 8), ParseError);
    CHECK_THROWS_AS(parse_expression("z1 ^ w1", 1, 1, 8), ParseError);
    CHECK_THROWS_AS(parse_expression("2 ^ -1", 1, 1, 8), ParseError);
    CHECK_THROWS_AS(parse_expression("z1 @ w1", 1, 1, 8), ParseError);
    CHECK_THROWS_AS(parse_expression("(z1 + 1)/3", 1, 1, 8), ParseError);
    CHECK_THROWS_AS(parse_expression("", 1, 1, 8), ParseError);
}

TEST_CASE("unknown variables") {
    CHECK_THROWS_AS(parse_expression("q1", 1, 1, 8), ParseError);
    CHECK_THROWS_AS(parse_expression("z3", 2, 1, 8), ParseError);   // m = 2
    CHECK_THROWS_AS(parse_expression("zeta2", 1, 1, 8), ParseError);
    CHECK_THROWS_AS(parse_expression("z0", 1, 1, 8), ParseError);
}

TEST_CASE("frame inference picks the smallest frame") {
    CHECK(parse_expression("z1 + w1", 1, 1, 8).frame().kind == FrameKind::T);
    CHECK(parse_expression("z1 + zeta1", 1, 1, 8).frame().kind == FrameKind::Intrinsic);
    CHECK(parse_expression("zeta1 + xi1", 1, 1, 8).frame().kind == FrameKind::Tau);
    CHECK(parse_expression("z1 + xi1", 1, 1, 8).frame().kind == FrameKind::Full);
    CHECK(parse_expression("3", 1, 1, 8).frame().kind == FrameKind::T);
}

TEST_CASE("explicit frame arguments resolve and reject") {
    ParseOptions full;
    full.frame = FrameKind::Full;
    CHECK(parse_expression("z1", 1, 1, 8, full).frame().kind == FrameKind::Full);

    ParseOptions t_only;
    t_only.frame = FrameKind::T;
    CHECK_THROWS_AS(parse_expression("z1 + zeta1", 1, 1, 8, t_only), ParseError);
    CHECK_THROWS_AS(parse_expression("xi1", 1, 1, 8, t_only), ParseError);
}

TEST_CASE("degree gate and opt-in truncation") {
    CHECK_THROWS_AS(parse_expression("z1^8", 1, 1, 8), ParseError);
    CHECK_THROWS_AS(parse_expression("(1 + z1)^9", 1, 1, 8), ParseError);
    // cancellation below the bound is fine
    CHECK(parse_expression("z1^9 - z1^9 + w1", 1, 1, 8) == parse_in("w1", FrameKind::T, 1, 1, 8));

    ParseOptions trunc;
    trunc.allow_truncation = true;
    CHECK(parse_expression("z1^8", 1, 1, 8, trunc).empty());
    CHECK(parse_expression("z1^8 + w1", 1, 1, 8, trunc) == parse_in("w1", FrameKind::T, 1, 1, 8));

    CHECK_THROWS_AS(parse_expression("z1^999999999", 1, 1, 8), ParseError);
}

TEST_CASE("precedence: caret, unary minus, star, then sums") {
    CHECK(parse_expression("-z1^2", 1, 1, 8) == parse_expression("-(z1^2)", 1, 1, 8));
    CHECK(parse_expression("-2^2", 1, 1, 8).constant_term() == GaussianRational(-4));
    CHECK(parse_expression("2*z1^2", 1, 1, 8) == parse_expression("2*(z1^2)", 1, 1, 8));
    CHECK(parse_expression("1 - 2*w1", 1, 1, 8) ==
          parse_expression("1 - (2*w1)", 1, 1, 8));
    CHECK(parse_expression("(z1 + w1)^2", 1, 1, 8) ==
          parse_expression("z1^2 + 2*z1*w1 + w1^2", 1, 1, 8));
    CHECK(parse_expression("i^2", 1, 1, 8).constant_term() == GaussianRational(-1));
    CHECK(parse_expression("--z1", 1, 1, 8) == parse_expression("z1", 1, 1, 8));
}

TEST_CASE("print/parse round-trip on random series in every frame") {
    SplitMix64 rng(909);
    SeriesSampler sampler;
    sampler.max_degree = 4;
    for (FrameKind kind :
         {FrameKind::T, FrameKind::Tau, FrameKind::Intrinsic, FrameKind::Full}) {
        VariableFrame frame(kind, 2, 2);
        ParseOptions opt;
        opt.frame = kind;
        for (int t = 0; t < 60; ++t) {
            auto s = random_series(rng, frame, 8, sampler);
            CHECK(parse_expression(to_string(s), 2, 2, 8, opt) == s);
        }
    }
}
