#include "rmas/bench.hpp"

#include <cmath>
#include <cstdio>

#include "rmas/combined.hpp"
#include "rmas/generators.hpp"
#include "rmas/lp.hpp"
#include "rmas/rng.hpp"
#include "rmas/simple_approx.hpp"

namespace rmas::bench {

std::string format_number(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

const RatioRow* RatioExperiment::worst() const {
    const RatioRow* worst = nullptr;
    for (const RatioRow& row : rows) {
        if (!worst || row.ratio > worst->ratio) worst = &row;
    }
    return worst;
}

RatioExperiment ratio_experiment(const std::vector<Instance>& instances, std::size_t cap) {
    RatioExperiment exp;
    for (std::size_t id = 0; id < instances.size(); ++id) {
        const Instance& inst = instances[id];
        RatioRow row;
        row.id = id;
        row.n = inst.node_count();
        row.m = inst.edge_count();
        try {
            row.opt = brute_force_opt(inst, cap).value;
        } catch (const CapExceeded& e) {
            exp.skipped.push_back({id, e.what()});
            continue;
        }
        const Instance filtered = filter_edges(inst).kept;
        row.total_weight = total_weight(filtered);
        row.value_simple = derandomize_minmax(filtered).value;
        try {
            const LpProgram prog = build_lp(filtered);
            const LpSolution sol = solve_lp(prog);
            row.lp = sol.objective;
            row.value_round = derandomize_rounding(prog, sol).value;
        } catch (const LpError& e) {
            exp.skipped.push_back({id, e.what()});
            continue;
        }
        row.value_combined = solve_combined(inst).value;
        row.ratio = row.value_combined > 0.0 ? row.opt / row.value_combined : 1.0;
        exp.rows.push_back(row);
    }
    return exp;
}

std::string ratio_csv(const std::vector<RatioRow>& rows) {
    std::string out = "id,n,m,W,opt,lp,simple,round,combined,ratio\n";
    for (const RatioRow& r : rows) {
        out += std::to_string(r.id) + "," + std::to_string(r.n) + "," + std::to_string(r.m) + "," +
               format_number(r.total_weight) + "," + format_number(r.opt) + "," + format_number(r.lp) + "," +
               format_number(r.value_simple) + "," + format_number(r.value_round) + "," +
               format_number(r.value_combined) + "," + format_number(r.ratio) + "\n";
    }
    return out;
}

std::string ratio_summary(const RatioExperiment& exp) {
    const RatioRow* worst = exp.worst();
    std::string out = "instances " + std::to_string(exp.rows.size()) + " skipped " +
                      std::to_string(exp.skipped.size());
    if (worst) out += " max_ratio " + format_number(worst->ratio) + " at id " + std::to_string(worst->id);
    return out + "\n";
}

std::string skipped_log(const std::vector<Skipped>& skipped) {
    std::string out;
    for (const Skipped& s : skipped) out += std::to_string(s.id) + "\t" + s.reason + "\n";
    return out;
}

std::vector<DicutRow> dicut_experiment(std::size_t n, std::size_t count, double p, std::uint64_t seed) {
    if (n > kMaxDicutNodes) throw CapExceeded(n, kMaxDicutNodes);
    std::vector<DicutRow> rows;
    for (std::size_t id = 0; id < count; ++id) {
        const Digraph g = gen_random_dag(n, p, mix_seed(seed, id));
        if (g.edges.empty()) continue;
        DicutRow row;
        row.id = id;
        row.n = n;
        row.m = g.edges.size();
        row.max_dicut = max_dicut(g);
        row.ratio = static_cast<double>(row.m) / row.max_dicut;
        rows.push_back(row);
    }
    return rows;
}

std::string dicut_csv(const std::vector<DicutRow>& rows) {
    std::string out = "id,n,m,maxdicut,ratio\n";
    for (const DicutRow& r : rows) {
        out += std::to_string(r.id) + "," + std::to_string(r.n) + "," + std::to_string(r.m) + "," +
               format_number(r.max_dicut) + "," + format_number(r.ratio) + "\n";
    }
    return out;
}

bool MonteCarloResult::flagged() const {
    // The absolute slack only matters for zero-variance arms, where the mean
    // of identical values must reproduce the exact expectation.
    return std::abs(mean - exact) > 4.0 * std_error + 1e-12 * (1.0 + std::abs(exact));
}

namespace {

template <class Draw>
MonteCarloResult run_trials(const Instance& inst, double exact, std::size_t trials, Draw draw) {
    if (trials == 0) throw Error("monte carlo needs at least one trial");
    double sum = 0.0;
    double sum_sq = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
        const double v = evaluate(inst, draw(t));
        sum += v;
        sum_sq += v * v;
    }
    MonteCarloResult r;
    r.exact = exact;
    r.trials = trials;
    const auto count = static_cast<double>(trials);
    r.mean = sum / count;
    if (trials > 1) {
        const double variance = std::max(0.0, (sum_sq - count * r.mean * r.mean) / (count - 1.0));
        r.std_error = std::sqrt(variance / count);
    }
    return r;
}

}  // namespace

MonteCarloResult monte_carlo_minmax(const Instance& inst, std::size_t trials, std::uint64_t seed) {
    const Instance filtered = filter_edges(inst).kept;
    const double exact = expected_minmax(filtered, all_coin(filtered));
    return run_trials(filtered, exact, trials,
                      [&](std::size_t t) { return sample_minmax(filtered, mix_seed(seed, t)); });
}

MonteCarloResult monte_carlo_marginals(const Instance& inst, const MarginalState& m, std::size_t trials,
                                       std::uint64_t seed) {
    m.validate(inst);
    const double exact = expected_from_marginals(inst, m);
    return run_trials(inst, exact, trials,
                      [&](std::size_t t) { return sample_from_marginals(inst, m, mix_seed(seed, t)); });
}

MonteCarloResult monte_carlo_experiment(const Instance& inst, Arm arm, std::size_t trials, std::uint64_t seed) {
    if (arm == Arm::simple) return monte_carlo_minmax(inst, trials, seed);
    const Instance filtered = filter_edges(inst).kept;
    const LpProgram prog = build_lp(filtered);
    const LpSolution sol = solve_lp(prog);
    return monte_carlo_marginals(filtered, MarginalState::from_lp(prog, sol), trials, seed);
}

}  // namespace rmas::bench
