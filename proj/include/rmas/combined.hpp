#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "rmas/exact.hpp"
#include "rmas/instance.hpp"

namespace rmas {

enum class Algorithm { exact, simple, simple_rand, round, round_rand, combined };

std::string_view to_string(Algorithm alg);
/// Throws Error for an unknown name.
Algorithm parse_algorithm(std::string_view name);

struct Bounds {
    double total_weight = 0.0;       // W of the filtered instance
    std::optional<double> lp;        // absent when the relaxation was not solved
    double guarantee = 0.0;          // value the algorithm certifies
};

struct SolveReport {
    Algorithm algorithm = Algorithm::combined;
    Labeling labeling;
    double value = 0.0;
    Bounds bounds;
    /// Exact expectation of the randomized arms; absent for deterministic ones.
    std::optional<double> expected;
    /// Set when the relaxation failed and the combined solver fell back to the
    /// min/max arm.
    std::optional<std::string> lp_failure;
    std::map<std::string, double> timings_ms;
};

/// max(W/4, lp^2 / (2W)), and 0 when W = 0. Throws Error when lp exceeds W
/// beyond a 1e-9 relative tolerance or either argument is negative.
double guarantee_bound(double total_weight, double lp);

/// Runs both derandomized arms on the filtered instance and keeps the better
/// labeling (the min/max arm on ties). If the relaxation cannot be solved the
/// min/max result is returned with guarantee W/4 and `lp_failure` set.
SolveReport solve_combined(const Instance& inst);

struct SolveOptions {
    std::uint64_t seed = 0;
    std::size_t cap = kDefaultEnumerationCap;
};

/// Dispatch used by the command line. Randomized arms draw one labeling from
/// the seed and report the exact expectation alongside it.
SolveReport solve(const Instance& inst, Algorithm alg, const SolveOptions& options = {});

}  // namespace rmas
