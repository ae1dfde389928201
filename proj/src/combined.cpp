#include "rmas/combined.hpp"

#include <chrono>
#include <cmath>

#include "rmas/lp.hpp"
#include "rmas/rounding.hpp"
#include "rmas/simple_approx.hpp"

namespace rmas {

std::string_view to_string(Algorithm alg) {
    switch (alg) {
        case Algorithm::exact: return "exact";
        case Algorithm::simple: return "simple";
        case Algorithm::simple_rand: return "simple-rand";
        case Algorithm::round: return "round";
        case Algorithm::round_rand: return "round-rand";
        case Algorithm::combined: return "combined";
    }
    return "unknown";
}

Algorithm parse_algorithm(std::string_view name) {
    for (Algorithm alg : {Algorithm::exact, Algorithm::simple, Algorithm::simple_rand, Algorithm::round,
                          Algorithm::round_rand, Algorithm::combined}) {
        if (to_string(alg) == name) return alg;
    }
    throw Error("unknown algorithm '" + std::string(name) + "'");
}

double guarantee_bound(double total_weight, double lp) {
    if (total_weight < 0.0 || lp < 0.0) throw Error("weights and lp must be nonnegative");
    if (lp > total_weight + 1e-9 * std::max(1.0, total_weight)) {
        throw Error("lp " + std::to_string(lp) + " exceeds total weight " + std::to_string(total_weight));
    }
    if (total_weight == 0.0) return 0.0;
    return std::max(total_weight / 4.0, lp * lp / (2.0 * total_weight));
}

namespace {

class Stopwatch {
public:
    double lap_ms() {
        const auto now = std::chrono::steady_clock::now();
        const double ms = std::chrono::duration<double, std::milli>(now - last_).count();
        last_ = now;
        return ms;
    }

private:
    std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

double rounding_bound(double total_weight, double lp) {
    return total_weight == 0.0 ? 0.0 : lp * lp / (2.0 * total_weight);
}

struct LpArm {
    LpProgram program;
    LpSolution solution;
};

LpArm solve_relaxation(const Instance& filtered, std::map<std::string, double>& timings) {
    Stopwatch clock;
    LpArm arm{build_lp(filtered), {}};
    timings["lp_build"] = clock.lap_ms();
    arm.solution = solve_lp(arm.program);
    timings["lp_solve"] = clock.lap_ms();
    return arm;
}

}  // namespace

SolveReport solve_combined(const Instance& inst) {
    SolveReport report;
    report.algorithm = Algorithm::combined;
    Stopwatch clock;
    const Instance filtered = filter_edges(inst).kept;
    const double w = total_weight(filtered);
    report.bounds.total_weight = w;
    report.timings_ms["filter"] = clock.lap_ms();

    const DerandomizedResult simple = derandomize_minmax(filtered);
    report.timings_ms["simple"] = clock.lap_ms();
    report.labeling = simple.labeling;
    report.value = evaluate(inst, simple.labeling);
    report.bounds.guarantee = w / 4.0;

    try {
        const LpArm arm = solve_relaxation(filtered, report.timings_ms);
        clock.lap_ms();
        const RoundingResult rounded = derandomize_rounding(arm.program, arm.solution);
        report.timings_ms["round"] = clock.lap_ms();
        // The relaxation can overshoot W only by solver noise.
        const double lp = std::min(arm.solution.objective, w);
        report.bounds.lp = lp;
        report.bounds.guarantee = guarantee_bound(w, lp);
        const double rounded_value = evaluate(inst, rounded.labeling);
        if (rounded_value > report.value) {
            report.labeling = rounded.labeling;
            report.value = rounded_value;
        }
    } catch (const Error& e) {
        report.lp_failure = e.what();
    }
    return report;
}

SolveReport solve(const Instance& inst, Algorithm alg, const SolveOptions& options) {
    if (alg == Algorithm::combined) return solve_combined(inst);

    SolveReport report;
    report.algorithm = alg;
    Stopwatch clock;
    const Instance filtered = filter_edges(inst).kept;
    const double w = total_weight(filtered);
    report.bounds.total_weight = w;
    report.timings_ms["filter"] = clock.lap_ms();

    switch (alg) {
        case Algorithm::exact: {
            const OptResult opt = brute_force_opt(filtered, options.cap);
            report.labeling = opt.labeling;
            report.bounds.guarantee = opt.value;
            report.timings_ms["exact"] = clock.lap_ms();
            break;
        }
        case Algorithm::simple: {
            report.labeling = derandomize_minmax(filtered).labeling;
            report.bounds.guarantee = w / 4.0;
            report.timings_ms["simple"] = clock.lap_ms();
            break;
        }
        case Algorithm::simple_rand: {
            report.labeling = sample_minmax(filtered, options.seed);
            report.expected = expected_minmax(filtered, all_coin(filtered));
            report.bounds.guarantee = w / 4.0;
            report.timings_ms["simple"] = clock.lap_ms();
            break;
        }
        case Algorithm::round:
        case Algorithm::round_rand: {
            const LpArm arm = solve_relaxation(filtered, report.timings_ms);
            clock.lap_ms();
            const double lp = std::min(arm.solution.objective, w);
            report.bounds.lp = lp;
            report.bounds.guarantee = rounding_bound(w, lp);
            if (alg == Algorithm::round) {
                report.labeling = derandomize_rounding(arm.program, arm.solution).labeling;
            } else {
                const MarginalState m = MarginalState::from_lp(arm.program, arm.solution);
                report.labeling = sample_from_marginals(filtered, m, options.seed);
                report.expected = expected_from_marginals(filtered, m);
            }
            report.timings_ms["round"] = clock.lap_ms();
            break;
        }
        case Algorithm::combined: break;
    }
    report.value = evaluate(inst, report.labeling);
    return report;
}

}  // namespace rmas
