#include <doctest.h>

#include "crmin/errors.hpp"
#include "crmin/manifold.hpp"
#include "test_support.hpp"

using namespace crmin;
using namespace crmin_test;

TEST_CASE("Heisenberg model is accepted and theta_bar is derived") {
    auto model = heisenberg(8);
    CHECK(model.m() == 1);
    CHECK(model.d() == 1);
    CHECK(model.theta_bar()[0] == parse_in("xi1 + 2*i*z1*zeta1", FrameKind::Full, 1, 1, 8));
    // involution composes back to w
    auto composed = model.restrict_to_M(model.theta_bar()[0]);
    CHECK(composed == parse_in("w1", FrameKind::Intrinsic, 1, 1, 8));
}

TEST_CASE("Levi-flat model is accepted") {
    auto model = levi_flat(8);
    CHECK(model.theta_bar()[0] == parse_in("xi1", FrameKind::Full, 1, 1, 8));
}

TEST_CASE("real coefficient on z*zeta breaks the involution") {
    auto theta = parse_in("w1 - z1*zeta1", FrameKind::Full, 1, 1, 8);
    try {
        new_manifold(1, 1, {theta}, 8);
        FAIL("expected rejection");
    } catch (const ValidationError& e) {
        CHECK(e.witness == "z1*zeta1");
    }
    auto v = validate_model(1, 1, {theta}, 8);
    CHECK(!v.ok);
    bool found = false;
    for (const auto& c : v.checks)
        if (c.name == "involution") {
            CHECK(!c.pass);
            CHECK(c.detail == "z1*zeta1");
            found = true;
        }
    CHECK(found);
}

TEST_CASE("origin and normalization gates") {
    CHECK_THROWS_AS(new_manifold(1, 1, {parse_in("1 + w1", FrameKind::Full, 1, 1, 8)}, 8),
                    ValidationError);
    CHECK_THROWS_AS(new_manifold(1, 1, {parse_in("2*w1", FrameKind::Full, 1, 1, 8)}, 8),
                    ValidationError);
    CHECK_THROWS_AS(new_manifold(1, 1, {parse_in("w1 + xi1", FrameKind::Full, 1, 1, 8)}, 8),
                    ValidationError);
    // linear z term: normalized in w but not a real manifold
    CHECK_THROWS_AS(new_manifold(1, 1, {parse_in("w1 + z1", FrameKind::Full, 1, 1, 8)}, 8),
                    ValidationError);
}

TEST_CASE("restrict_to_M: defining function restricts to zero") {
    auto model = heisenberg(8);
    auto p = parse_in("xi1", FrameKind::Full, 1, 1, 8) - model.theta()[0];
    CHECK(model.restrict_to_M(p).empty());

    auto w_minus_xi = parse_in("w1 - xi1", FrameKind::Full, 1, 1, 8);
    CHECK(model.restrict_to_M(w_minus_xi) ==
          parse_in("2*i*z1*zeta1", FrameKind::Intrinsic, 1, 1, 8));

    auto flat = levi_flat(8);
    CHECK(flat.restrict_to_M(w_minus_xi).empty());
}

TEST_CASE("tangency residuals vanish on every accepted model") {
    for (const auto& model :
         {heisenberg(8), levi_flat(8), power_model(2, 8), power_model(3, 8),
          make_model({"w1 - 2*i*z1*zeta1 - 2*i*z2*zeta2"}, 2, 1, 6),
          make_model({"w1 - 2*i*z1*zeta1", "w2 - 2*i*z1^2*zeta1^2"}, 1, 2, 8)}) {
        for (const auto& row : tangency_residuals(model))
            for (const auto& r : row) CHECK(r.empty());
    }
}

TEST_CASE("codimension-2 model with mixed defining series") {
    auto model = make_model({"w1 - 2*i*z1*zeta1", "w2 - 2*i*z1^2*zeta1^2"}, 1, 2, 8);
    CHECK(model.theta_bar()[1] ==
          parse_in("xi2 + 2*i*z1^2*zeta1^2", FrameKind::Full, 1, 2, 8));
    auto p = parse_in("w2 - xi2", FrameKind::Full, 1, 2, 8);
    CHECK(model.restrict_to_M(p) ==
          parse_in("2*i*z1^2*zeta1^2", FrameKind::Intrinsic, 1, 2, 8));
}

TEST_CASE("higher-degree terms beyond the involution's reach are rejected late") {
    // theta = w - 2i z zeta + z^2 zeta^2 fails: conjugate of the quartic term
    // does not cancel
    auto theta = parse_in("w1 - 2*i*z1*zeta1 + z1^2*zeta1^2", FrameKind::Full, 1, 1, 8);
    auto v = validate_model(1, 1, {theta}, 8);
    CHECK(!v.ok);
}

TEST_CASE("purely imaginary coefficient quartic is a valid model") {
    auto model = power_model(2, 8);
    CHECK(model.theta_bar()[0] ==
          parse_in("xi1 + 2*i*z1^2*zeta1^2", FrameKind::Full, 1, 1, 8));
}
