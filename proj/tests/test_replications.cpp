#include <doctest.h>

#include <vector>

#include "poolsim/replications.hpp"
#include "poolsim/scenario_io.hpp"

using namespace poolsim;

TEST_SUITE("replications") {

TEST_CASE("parallel batch equals the serial reference") {
    std::vector<Scenario> batch;
    for (std::uint64_t s = 0; s < 8; ++s)
        batch.push_back(figure2_pwc_scenario(s % 2 == 0 ? 1 : 3, 30 + 5 * s, 100 + s));
    batch.push_back(figure2_scenario(1, 25, 4));  // thinning-mode member
    batch.back().mode = EngineMode::thinning;

    const auto serial = run_batch_serial(batch);
    const auto parallel = run_batch_parallel(batch);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].events == parallel[i].events);
        CHECK(serial[i].final_state == parallel[i].final_state);
        CHECK(serial[i].final_ell == parallel[i].final_ell);
    }
}

TEST_CASE("errors surface from worker iterations") {
    std::vector<Scenario> batch{figure2_pwc_scenario(1, 20, 1)};
    batch.push_back(batch.front());
    batch.back().n = 0;  // invalid
    CHECK_THROWS(run_batch_parallel(batch));
    CHECK_THROWS(run_batch_serial(batch));
}

}  // TEST_SUITE
