#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rmas/exact.hpp"
#include "rmas/instance.hpp"
#include "rmas/rounding.hpp"

namespace rmas::bench {

struct RatioRow {
    std::size_t id = 0;
    std::size_t n = 0;
    std::size_t m = 0;
    double total_weight = 0.0;
    double opt = 0.0;
    double lp = 0.0;
    double value_simple = 0.0;
    double value_round = 0.0;
    double value_combined = 0.0;
    double ratio = 1.0;  // opt / value_combined, 1 when both are 0
};

struct Skipped {
    std::size_t id = 0;
    std::string reason;
};

struct RatioExperiment {
    std::vector<RatioRow> rows;
    std::vector<Skipped> skipped;

    /// Row with the largest ratio, or nullptr when empty.
    const RatioRow* worst() const;
};

/// Runs the exact oracle, the relaxation, both derandomized arms and the
/// combined solver on each instance. Instances whose search space exceeds
/// `cap` are skipped and recorded, never fatal.
RatioExperiment ratio_experiment(const std::vector<Instance>& instances, std::size_t cap = kDefaultEnumerationCap);

std::string ratio_csv(const std::vector<RatioRow>& rows);
std::string ratio_summary(const RatioExperiment& exp);
std::string skipped_log(const std::vector<Skipped>& skipped);

struct DicutRow {
    std::size_t id = 0;
    std::size_t n = 0;
    std::size_t m = 0;
    double max_dicut = 0.0;
    double ratio = 0.0;  // m / max_dicut
};

/// `count` random DAGs on n nodes; DAG i uses mix_seed(seed, i). Edgeless
/// DAGs are skipped since their ratio is undefined.
std::vector<DicutRow> dicut_experiment(std::size_t n, std::size_t count, double p, std::uint64_t seed);

std::string dicut_csv(const std::vector<DicutRow>& rows);

enum class Arm { simple, rounding };

struct MonteCarloResult {
    double exact = 0.0;
    double mean = 0.0;
    double std_error = 0.0;
    std::size_t trials = 0;

    /// |mean - exact| beyond four standard errors.
    bool flagged() const;
};

/// Min/max coin arm; trial t draws with seed mix_seed(seed, t).
MonteCarloResult monte_carlo_minmax(const Instance& inst, std::size_t trials, std::uint64_t seed);

/// Independent rounding from the given marginals.
MonteCarloResult monte_carlo_marginals(const Instance& inst, const MarginalState& m, std::size_t trials,
                                       std::uint64_t seed);

/// The rounding arm uses the marginals of the relaxation optimum.
MonteCarloResult monte_carlo_experiment(const Instance& inst, Arm arm, std::size_t trials, std::uint64_t seed);

/// Decimal rendering with 12 significant digits.
std::string format_number(double value);

}  // namespace rmas::bench
