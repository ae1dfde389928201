#include <doctest.h>

#include <cmath>

#include "rmas/rng.hpp"
#include "rmas/simplex.hpp"

using namespace rmas::simplex;

namespace {

Problem make(std::size_t rows, std::size_t cols, std::vector<double> a, std::vector<double> b, std::vector<double> c) {
    return {rows, cols, std::move(a), std::move(b), std::move(c)};
}

}  // namespace

TEST_CASE("textbook maximum with slacks") {
    // max 3x + 2y  s.t.  x + y <= 4,  x + 3y <= 6,  x <= 3
    const Problem p = make(3, 5,
                           {1, 1, 1, 0, 0,
                            1, 3, 0, 1, 0,
                            1, 0, 0, 0, 1},
                           {4, 6, 3}, {3, 2, 0, 0, 0});
    const Result r = solve(p);
    REQUIRE(r.status == Status::optimal);
    CHECK(r.objective == doctest::Approx(11.0));
    CHECK(r.x[0] == doctest::Approx(3.0));
    CHECK(r.x[1] == doctest::Approx(1.0));
}

TEST_CASE("equality rows, negative right-hand side and a redundant row") {
    // x0 + x1 + x2 = 1, -x0 + x1 = -0.5 (so x0 = x1 + 0.5), and twice the first row.
    const Problem p = make(3, 3,
                           {1, 1, 1,
                            -1, 1, 0,
                            2, 2, 2},
                           {1, -0.5, 2}, {0, 1, 0});
    const Result r = solve(p);
    REQUIRE(r.status == Status::optimal);
    CHECK(r.objective == doctest::Approx(0.25));
    CHECK(r.x[0] == doctest::Approx(0.75));
    CHECK(r.x[1] == doctest::Approx(0.25));
    CHECK(r.x[2] == doctest::Approx(0.0));
}

TEST_CASE("infeasible and unbounded programs") {
    CHECK(solve(make(2, 1, {1, 1}, {1, 2}, {1})).status == Status::infeasible);
    CHECK(solve(make(1, 1, {1}, {-1}, {0})).status == Status::infeasible);
    // x0 - x1 = 0 with x0 rewarded: unbounded ray.
    CHECK(solve(make(1, 2, {1, -1}, {0}, {1, 0})).status == Status::unbounded);
}

TEST_CASE("degenerate vertex does not cycle") {
    // A classic cycling example for the largest-coefficient rule, as equalities with slacks.
    const Problem p = make(3, 7,
                           {0.5, -5.5, -2.5, 9, 1, 0, 0,
                            0.5, -1.5, -0.5, 1, 0, 1, 0,
                            1, 0, 0, 0, 0, 0, 1},
                           {0, 0, 1}, {10, -57, -9, -24, 0, 0, 0});
    const Result r = solve(p);
    REQUIRE(r.status == Status::optimal);
    CHECK(r.objective == doctest::Approx(1.0));
}

TEST_CASE("empty problem") {
    const Result r = solve(make(0, 2, {}, {}, {0, 0}));
    CHECK(r.status == Status::optimal);
    CHECK(r.objective == 0.0);
}

TEST_CASE("property: optimum of random box-constrained programs") {
    // max c.x with 0 <= x_i <= u_i, written with slacks: the optimum is sum of positive c_i u_i.
    rmas::Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + rng.below(6);
        Problem p;
        p.rows = n;
        p.cols = 2 * n;
        p.a.assign(p.rows * p.cols, 0.0);
        p.c.assign(p.cols, 0.0);
        double expected = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            p.at(i, i) = 1.0;
            p.at(i, n + i) = 1.0;
            const double u = 1.0 + rng.unit() * 4.0;
            p.b.push_back(u);
            p.c[i] = rng.unit() * 2.0 - 1.0;
            if (p.c[i] > 0) expected += p.c[i] * u;
        }
        const Result r = solve(p);
        REQUIRE(r.status == Status::optimal);
        CHECK(r.objective == doctest::Approx(expected).epsilon(1e-9));
        for (std::size_t r_i = 0; r_i < n; ++r_i) {
            double lhs = 0.0;
            for (std::size_t j = 0; j < p.cols; ++j) lhs += p.at(r_i, j) * r.x[j];
            CHECK(std::abs(lhs - p.b[r_i]) <= 1e-9);
        }
    }
}
