#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "poolsim/controller.hpp"
#include "support.hpp"

using namespace poolsim;
using test::make_state;

namespace {

PolicyState policy(int ell, int delta, double alpha) {
    return PolicyState{ell, delta, {AlphaRule::Kind::value, alpha}};
}

}  // namespace

TEST_SUITE("controller") {

TEST_CASE("decrease fires when the ell fraction drops to alpha") {
    // n = 100, alpha = 0.9, ell = 2: q(2) = 0.85 <= 0.9, q(3) = 0.5 < 0.99.
    const auto st = make_state(100, {100, 85, 50});
    CHECK(threshold_step(st, policy(2, 1, 0.9)) == -1);
}

TEST_CASE("increase fires when nearly all pools reach h") {
    // n = 100, ell = 2, delta = 1: q(3) = 1 >= 1 - 1/100.
    const auto st = make_state(100, {100, 100, 100});
    CHECK(threshold_step(st, policy(2, 1, 0.9)) == 1);
    // Boundary: exactly n - 1 pools at h.
    const auto st99 = make_state(100, {100, 100, 99});
    CHECK(threshold_step(st99, policy(2, 1, 0.9)) == 1);
    const auto st98 = make_state(100, {100, 100, 98});
    CHECK(threshold_step(st98, policy(2, 1, 0.9)) == 0);
}

TEST_CASE("neither condition leaves the threshold alone") {
    const auto st = make_state(100, {100, 95, 50});
    CHECK(threshold_step(st, policy(2, 1, 0.9)) == 0);
}

TEST_CASE("simultaneous conditions cancel") {
    // Possible only when alpha_n >= 1 - 1/n: n = 10, alpha = 0.95.
    const auto st = make_state(10, {9, 9});
    const auto pol = policy(1, 1, 0.95);
    CHECK(decrease_indicator(st, pol.ell, pol.alpha));
    CHECK(increase_indicator(st, pol.h()));
    CHECK(threshold_step(st, pol) == 0);
}

TEST_CASE("step scales with delta") {
    const auto st = make_state(100, {100, 100, 100, 100, 100, 100});
    CHECK(threshold_step(st, policy(3, 3, 0.9)) == 3);
}

TEST_CASE("step is non-increasing in alpha") {
    const auto st = make_state(100, {100, 85, 50});
    int prev = 2;
    for (double a : {0.5, 0.8, 0.84, 0.86, 0.95}) {
        const int step = threshold_step(st, policy(2, 1, a));
        CHECK(step <= prev);
        prev = step;
    }
}

TEST_CASE("exponent-form comparison stays on the integer grid") {
    // n = 100, e = 0.48: decrease iff n - Q(ell) >= 100^{0.52} ~ 10.96.
    const AlphaRule rule{AlphaRule::Kind::exponent, 0.48};
    CHECK(rule.decrease_triggered(89, 100));
    CHECK(!rule.decrease_triggered(90, 100));
    // Cross-check against the plain product for the value form.
    const AlphaRule plain{AlphaRule::Kind::value, 1.0 - std::pow(100.0, -0.48)};
    CHECK(plain.decrease_triggered(89, 100));
    CHECK(!plain.decrease_triggered(90, 100));
}

TEST_CASE("threshold floor at zero") {
    const auto st = make_state(10, {10, 10});
    const auto pol = policy(0, 2, 0.99);
    CHECK(zero_threshold_decrease_blocked(st, pol));
    // q(delta) = 1 still allows the increase.
    CHECK(threshold_step(st, pol) == 2);
    // alpha outside (0,1) is a configuration error.
    CHECK_THROWS_AS(zero_threshold_decrease_blocked(st, policy(0, 2, 1.0)),
                    std::invalid_argument);
    // Probe is only valid at ell = 0.
    CHECK_THROWS_AS(zero_threshold_decrease_blocked(st, policy(2, 2, 0.9)),
                    std::invalid_argument);
}

TEST_CASE("threshold stays a multiple of delta under updates") {
    for (int delta : {1, 2, 3}) {
        PolicyState pol{0, delta, {AlphaRule::Kind::value, 0.6}};
        const auto full = make_state(10, {10, 10, 10, 10, 10, 10, 10, 10});
        const auto drained = make_state(10, {3});  // drops every level's count to <= alpha n
        for (int rounds = 0; rounds < 4; ++rounds) {
            pol.ell += threshold_step(full, pol);
            pol.validate();
        }
        CHECK(pol.ell > 0);
        for (int guard = 0; pol.ell > 0 && guard < 100; ++guard) {
            pol.ell += threshold_step(drained, pol);
            pol.validate();
        }
        CHECK(pol.ell == 0);
        // At zero the drained state can no longer lower the threshold.
        CHECK(threshold_step(drained, pol) >= 0);
    }
}

}  // TEST_SUITE
