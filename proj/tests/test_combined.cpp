#include <doctest.h>

#include <cmath>

#include "rmas/combined.hpp"
#include "rmas/generators.hpp"
#include "rmas/simple_approx.hpp"
#include "support/oracles.hpp"

using namespace rmas;

TEST_CASE("guarantee_bound") {
    const double w = 2.0 * std::sqrt(2.0);
    CHECK(guarantee_bound(w, 2.0) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
    CHECK(w / 4.0 == doctest::Approx(2.0 * 2.0 / (2.0 * w)).epsilon(1e-12));
    CHECK(guarantee_bound(4.0, 4.0) == 2.0);
    CHECK(guarantee_bound(4.0, 0.0) == 1.0);
    CHECK(guarantee_bound(0.0, 0.0) == 0.0);
    CHECK_THROWS_AS(guarantee_bound(1.0, 1.5), Error);
    CHECK_THROWS_AS(guarantee_bound(-1.0, 0.0), Error);
    CHECK_NOTHROW(guarantee_bound(1.0, 1.0 + 1e-12));
}

TEST_CASE("algorithm names") {
    for (Algorithm a : {Algorithm::exact, Algorithm::simple, Algorithm::simple_rand, Algorithm::round,
                        Algorithm::round_rand, Algorithm::combined}) {
        CHECK(parse_algorithm(to_string(a)) == a);
    }
    CHECK(to_string(Algorithm::simple_rand) == "simple-rand");
    CHECK_THROWS_AS(parse_algorithm("greedy"), Error);
}

TEST_CASE("combined solver on fixtures") {
    const SolveReport i1 = solve_combined(fixture("two-cycle"));
    CHECK(i1.value == 1.0);
    CHECK(i1.bounds.total_weight == 2.0);
    REQUIRE(i1.bounds.lp.has_value());
    CHECK(*i1.bounds.lp == doctest::Approx(1.0));
    CHECK(i1.bounds.guarantee == doctest::Approx(0.5));

    const SolveReport i2 = solve_combined(fixture("single-edge"));
    CHECK(i2.value == 3.0);
    CHECK(i2.labeling == Labeling({1, 2}));
    CHECK(i2.bounds.guarantee == doctest::Approx(1.5));

    const SolveReport i4 = solve_combined(fixture("triangle"));
    CHECK(i4.value == 2.0);
    CHECK(i4.bounds.total_weight == 3.0);
    CHECK(i4.bounds.guarantee == doctest::Approx(0.75));

    const SolveReport blocked = solve_combined(fixture("blocked"));
    CHECK(blocked.value == 0.0);
    CHECK(blocked.bounds.total_weight == 0.0);
    CHECK(blocked.bounds.guarantee == 0.0);
    CHECK_FALSE(blocked.lp_failure.has_value());
}

TEST_CASE("solve dispatch") {
    const Instance inst = oracle::load_golden("khandekar_gap_n5.rmas");
    const SolveReport exact = solve(inst, Algorithm::exact);
    CHECK(exact.value == 53.0);
    CHECK(exact.bounds.guarantee == 53.0);

    const SolveReport simple = solve(inst, Algorithm::simple);
    CHECK(simple.value == derandomize_minmax(inst).value);
    CHECK(simple.bounds.guarantee == doctest::Approx(69.0 / 4.0));

    const SolveReport round = solve(inst, Algorithm::round);
    REQUIRE(round.bounds.lp.has_value());
    CHECK(*round.bounds.lp == doctest::Approx(53.5));
    CHECK(round.bounds.guarantee == doctest::Approx(53.5 * 53.5 / (2 * 69.0)));

    for (Algorithm a : {Algorithm::simple_rand, Algorithm::round_rand}) {
        const SolveReport r1 = solve(inst, a, {7});
        const SolveReport r2 = solve(inst, a, {7});
        CHECK(r1.labeling == r2.labeling);
        REQUIRE(r1.expected.has_value());
        CHECK(r1.value == evaluate(inst, r1.labeling));
    }
    CHECK(*solve(inst, Algorithm::simple_rand).expected == doctest::Approx(oracle::minmax_expectation(inst)));

    CHECK_THROWS_AS(solve(inst, Algorithm::exact, {0, 10}), CapExceeded);
}

TEST_CASE("property: combined value dominates both arms and the certificate re-evaluates exactly") {
    GenSpec spec;
    spec.nodes = 5;
    spec.edges = 10;
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        spec.seed = seed;
        const Instance inst = gen_random(spec);
        const SolveReport c = solve_combined(inst);
        const double simple = solve(inst, Algorithm::simple).value;
        const double round = solve(inst, Algorithm::round).value;
        CHECK(c.value == std::max(simple, round));
        CHECK(evaluate(inst, c.labeling) == c.value);
        CHECK(c.value >= c.bounds.guarantee - 1e-9);
        CHECK(c.value <= oracle::opt(inst));
        REQUIRE(c.bounds.lp.has_value());
        CHECK(c.bounds.guarantee ==
              doctest::Approx(guarantee_bound(c.bounds.total_weight, *c.bounds.lp)).epsilon(1e-12));
    }
}
