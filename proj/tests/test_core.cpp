#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "poolsim/metric.hpp"
#include "poolsim/occupancy.hpp"
#include "poolsim/policy.hpp"
#include "poolsim/rng.hpp"
#include "support.hpp"

using namespace poolsim;
using test::make_state;

namespace {

// The occupancy diagram fixture used throughout: n = 4,
// counts (4,4,4,3,3,2,1,1,0) over levels 0..8, 18 tasks total.
OccupancyMeasure diagram_state() { return make_state(4, {4, 4, 3, 3, 2, 1, 1}); }

}  // namespace

TEST_SUITE("core") {

TEST_CASE("arrival places a task one level up") {
    auto st = diagram_state();
    st.apply_arrival(5);
    CHECK(st.count(5) == 3);
    CHECK(st.count(4) == 3);
    CHECK(st.total_tasks() == 19);
    st.validate();
}

TEST_CASE("first task into an empty system") {
    OccupancyMeasure st(4);
    st.apply_arrival(1);
    CHECK(st.count(1) == 1);
    CHECK(st.total_tasks() == 1);
}

TEST_CASE("arrival into an empty level is rejected") {
    auto st = make_state(4, {2, 2});  // no pool with exactly 1 task
    CHECK_THROWS_AS(st.apply_arrival(2), std::invalid_argument);
}

TEST_CASE("departure removes a task") {
    auto st = diagram_state();
    st.apply_departure(7);
    CHECK(st.count(7) == 0);
    CHECK(st.total_tasks() == 17);
    st.validate();
}

TEST_CASE("last task leaves") {
    auto st = make_state(4, {1});
    st.apply_departure(1);
    CHECK(st.total_tasks() == 0);
    CHECK(st.max_occupied_level() == 0);
}

TEST_CASE("departure from an empty level is rejected") {
    auto st = make_state(4, {3, 3, 2, 2});  // count(3) == count(4)
    CHECK_THROWS_AS(st.apply_departure(3), std::invalid_argument);
}

TEST_CASE("total mass") {
    CHECK(diagram_state().total_mass() == doctest::Approx(4.5).epsilon(1e-15));
    CHECK(OccupancyMeasure(7).total_mass() == 0.0);
    // Uniform state: every pool holds exactly k tasks.
    auto uniform = make_state(5, {5, 5, 5});
    CHECK(uniform.total_mass() == doctest::Approx(3.0).epsilon(1e-15));
}

TEST_CASE("tail mass") {
    const auto st = diagram_state();
    CHECK(st.tail_mass(5) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(st.tail_mass(1) == st.total_mass());
    CHECK(st.tail_mass(40) == 0.0);
    CHECK_THROWS_AS(st.tail_mass(0), std::domain_error);
}

TEST_CASE("tail mass telescopes to the level fractions") {
    RngStream rng(11, 1);
    for (int trial = 0; trial < 30; ++trial) {
        const std::int64_t n = 1 + static_cast<std::int64_t>(rng.next_u64() % 12);
        std::vector<std::int64_t> levels;
        std::int64_t cur = n;
        while (cur > 0) {
            cur = static_cast<std::int64_t>(rng.next_u64() % static_cast<std::uint64_t>(cur + 1));
            if (cur > 0) levels.push_back(cur);
        }
        OccupancyMeasure st(n, levels);
        CHECK(st.tail_mass(1) == doctest::Approx(st.total_mass()).epsilon(1e-12));
        for (int j = 1; j <= st.cap(); ++j)
            CHECK(st.tail_mass(j) - st.tail_mass(j + 1) ==
                  doctest::Approx(st.fraction(j)).epsilon(1e-12));
    }
}

TEST_CASE("cap grows on demand and keeps the trailing zero") {
    OccupancyMeasure st(2);
    for (int lvl = 1; lvl <= 40; ++lvl) st.apply_arrival(lvl);
    CHECK(st.count(40) == 1);
    CHECK(st.count(st.cap()) == 0);
    st.validate();
}

TEST_CASE("invalid level vectors are rejected") {
    CHECK_THROWS(make_state(4, {5}));        // above n
    CHECK_THROWS(make_state(4, {2, 3}));     // increasing
    CHECK_THROWS(make_state(4, {2, -1}));    // negative
    CHECK_THROWS(OccupancyMeasure(0));
}

TEST_CASE("seq_metric examples") {
    const std::vector<double> x1{1, 1}, y1{1};
    CHECK(seq_metric(x1, x1) == 0.0);
    CHECK(seq_metric(x1, y1) == doctest::Approx(0.5).epsilon(1e-15));
    const std::vector<double> x2{3}, y2{};
    CHECK(seq_metric(x2, y2) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("seq_metric is a metric on random triples") {
    RngStream rng(23, 5);
    for (int trial = 0; trial < 60; ++trial) {
        auto draw = [&] {
            std::vector<double> v(6);
            for (double& x : v) x = 3.0 * rng.next_unit() - 1.0;
            return v;
        };
        const auto x = draw(), y = draw(), z = draw();
        CHECK(seq_metric(x, x) == 0.0);
        CHECK(seq_metric(x, y) == seq_metric(y, x));
        CHECK(seq_metric(x, z) <= seq_metric(x, y) + seq_metric(y, z) + 1e-15);
        CHECK(seq_metric(x, y) <= 2.0);
    }
}

TEST_CASE("policy validation") {
    PolicyState p{3, 3, {AlphaRule::Kind::value, 0.9}};
    p.validate();
    CHECK(p.h() == 6);
    CHECK_THROWS(PolicyState{-1, 1, {}}.validate());
    CHECK_THROWS(PolicyState{2, 3, {}}.validate());
    CHECK_THROWS(PolicyState{0, 0, {}}.validate());
}

TEST_CASE("alpha rule forms") {
    const AlphaRule fixed{AlphaRule::Kind::value, 0.9};
    CHECK(fixed.value(100) == 0.9);
    const AlphaRule scaled{AlphaRule::Kind::exponent, 0.48};
    CHECK(scaled.value(300) == doctest::Approx(1.0 - std::pow(300.0, -0.48)).epsilon(1e-15));
    CHECK_THROWS(AlphaRule{AlphaRule::Kind::value, 1.0}.value(10));
    CHECK_THROWS(AlphaRule{AlphaRule::Kind::value, 0.0}.value(10));
}

}  // TEST_SUITE
