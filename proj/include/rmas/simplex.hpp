#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

namespace rmas::simplex {

enum class Status { optimal, infeasible, unbounded, numerical };

std::string_view to_string(Status status);

/// maximize c·x  subject to  A x = b,  x >= 0.
/// `a` is dense row-major with `rows * cols` entries.
struct Problem {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> a;
    std::vector<double> b;
    std::vector<double> c;

    double& at(std::size_t r, std::size_t col) { return a[r * cols + col]; }
    double at(std::size_t r, std::size_t col) const { return a[r * cols + col]; }
};

struct Options {
    double pivot_tolerance = 1e-9;
    double feasibility_tolerance = 1e-7;
    std::size_t max_pivots = 0;  // 0 selects a limit proportional to the tableau size
};

struct Result {
    Status status = Status::numerical;
    std::vector<double> x;
    double objective = 0.0;
    std::size_t pivots = 0;
};

/// Two-phase dense tableau simplex with Bland's smallest-index rule for both
/// the entering and the leaving variable, so degenerate cycling cannot occur.
/// Phase one drives one artificial per row to zero; artificials that remain
/// basic on redundant rows are left at zero and never re-enter.
Result solve(const Problem& problem, const Options& options = {});

}  // namespace rmas::simplex
