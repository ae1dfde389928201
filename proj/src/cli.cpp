#include "rmas/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "rmas/bench.hpp"
#include "rmas/combined.hpp"
#include "rmas/exact.hpp"
#include "rmas/generators.hpp"
#include "rmas/lp.hpp"
#include "rmas/rng.hpp"
#include "rmas/rounding.hpp"
#include "rmas/simple_approx.hpp"

namespace rmas::cli {

namespace {

using nlohmann::json;

struct CliConfig {
    std::string subcommand;
    std::string bench_kind;
    std::string input;
    std::string output;
    std::string algorithm = "combined";
    std::uint64_t seed = 0;
    bool json = false;
    bool timings = false;
    bool with_opt = false;
    bool dump_solution = false;
    std::size_t cap = kDefaultEnumerationCap;
    std::size_t count = 100;
    std::string labels;
    std::string labels_file;
    std::string arm = "simple";
    GenSpec gen;
    std::string gen_kind = "random";
    SuiteSpec suite;
    std::size_t dicut_min_nodes = 4;
    std::size_t dicut_max_nodes = 12;
    double dicut_p = 0.5;
};

class Io {
public:
    Io(const CliConfig& cfg, std::istream& in, std::ostream& out) : cfg_(cfg), in_(in), out_(out) {}

    std::string read_input() const {
        if (cfg_.input.empty() || cfg_.input == "-") {
            return {std::istreambuf_iterator<char>(in_), std::istreambuf_iterator<char>()};
        }
        std::ifstream file(cfg_.input, std::ios::binary);
        if (!file) throw Error("cannot open input file '" + cfg_.input + "'");
        return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
    }

    Instance read_instance() const { return parse_instance(read_input()); }

    void write(const std::string& text) const {
        if (cfg_.output.empty() || cfg_.output == "-") {
            out_ << text;
            return;
        }
        std::ofstream file(cfg_.output, std::ios::binary);
        if (!file) throw Error("cannot open output file '" + cfg_.output + "'");
        file << text;
    }

private:
    const CliConfig& cfg_;
    std::istream& in_;
    std::ostream& out_;
};

std::string num(double v) { return bench::format_number(v); }

std::vector<Label> parse_label_list(const std::string& text) {
    std::istringstream stream(text);
    std::vector<Label> labels;
    std::string token;
    while (stream >> token) {
        Label l{};
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), l);
        if (ec != std::errc{} || ptr != token.data() + token.size()) {
            throw Error("invalid label '" + token + "'");
        }
        labels.push_back(l);
    }
    return labels;
}

json labeling_json(const Labeling& labeling) {
    json arr = json::array();
    for (Label l : labeling.labels()) arr.push_back(l);
    return arr;
}

std::string labeling_text(const Labeling& labeling) {
    std::string out;
    for (std::size_t i = 0; i < labeling.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(labeling[i]);
    }
    return out;
}

int cmd_gen(const CliConfig& cfg, const Io& io) {
    GenSpec spec = cfg.gen;
    spec.kind = parse_gen_kind(cfg.gen_kind);
    spec.seed = cfg.seed;
    io.write(serialize_instance(generate(spec)));
    return kExitOk;
}

int cmd_solve(const CliConfig& cfg, const Io& io) {
    const Instance inst = io.read_instance();
    const Algorithm alg = parse_algorithm(cfg.algorithm);
    const SolveReport report = solve(inst, alg, {cfg.seed, cfg.cap});
    std::optional<double> opt;
    if (cfg.with_opt) opt = brute_force_opt(inst, cfg.cap).value;

    if (cfg.json) {
        json j;
        j["algorithm"] = std::string(to_string(report.algorithm));
        j["value"] = report.value;
        j["labeling"] = labeling_json(report.labeling);
        j["W"] = report.bounds.total_weight;
        j["lp"] = report.bounds.lp ? json(*report.bounds.lp) : json(nullptr);
        j["guarantee"] = report.bounds.guarantee;
        if (opt) j["opt"] = *opt;
        if (report.expected) j["expected"] = *report.expected;
        if (report.lp_failure) j["lp_failure"] = *report.lp_failure;
        if (cfg.timings) j["timings_ms"] = report.timings_ms;
        io.write(j.dump() + "\n");
        return kExitOk;
    }
    std::string text = "algorithm " + std::string(to_string(report.algorithm)) + "\n";
    text += "value " + num(report.value) + "\n";
    text += "labeling " + labeling_text(report.labeling) + "\n";
    text += "W " + num(report.bounds.total_weight) + "\n";
    if (report.bounds.lp) text += "lp " + num(*report.bounds.lp) + "\n";
    text += "guarantee " + num(report.bounds.guarantee) + "\n";
    if (opt) text += "opt " + num(*opt) + "\n";
    if (report.expected) text += "expected " + num(*report.expected) + "\n";
    if (report.lp_failure) text += "lp_failure " + *report.lp_failure + "\n";
    if (cfg.timings) {
        for (const auto& [phase, ms] : report.timings_ms) text += "time_ms " + phase + " " + num(ms) + "\n";
    }
    io.write(text);
    return kExitOk;
}

int cmd_lp(const CliConfig& cfg, const Io& io) {
    const Instance filtered = filter_edges(io.read_instance()).kept;
    const LpProgram prog = build_lp(filtered);
    const LpSolution sol = solve_lp(prog);
    if (!cfg.dump_solution) {
        io.write(cfg.json ? json{{"lp", sol.objective}}.dump() + "\n" : num(sol.objective) + "\n");
        return kExitOk;
    }
    constexpr double kNonzero = 1e-12;
    json xs = json::array();
    for (NodeId v = 0; v < filtered.node_count(); ++v) {
        auto list = filtered.labels(v);
        for (std::size_t i = 0; i < list.size(); ++i) {
            const double value = sol.x(prog, v, i);
            if (value > kNonzero) xs.push_back({{"node", v}, {"label", list[i]}, {"value", value}});
        }
    }
    json ys = json::array();
    for (const PairBlock& b : prog.blocks()) {
        for (std::size_t i = 0; i < b.rows; ++i) {
            for (std::size_t j = 0; j < b.cols; ++j) {
                const double value = sol.values[b.var(i, j)];
                if (value <= kNonzero) continue;
                ys.push_back({{"u", b.first},
                              {"v", b.second},
                              {"label_u", filtered.labels(b.first)[i]},
                              {"label_v", filtered.labels(b.second)[j]},
                              {"value", value}});
            }
        }
    }
    const ResidualReport residual = check_solution(prog, sol);
    json j{{"lp", sol.objective}, {"W", total_weight(filtered)}, {"residual", residual.worst()}, {"x", xs}, {"y", ys}};
    io.write(j.dump() + "\n");
    return kExitOk;
}

int cmd_eval(const CliConfig& cfg, const Io& io) {
    const Instance inst = io.read_instance();
    std::string text = cfg.labels;
    if (!cfg.labels_file.empty()) {
        std::ifstream file(cfg.labels_file);
        if (!file) throw Error("cannot open labels file '" + cfg.labels_file + "'");
        std::getline(file, text);
    }
    const Labeling labeling(parse_label_list(text));
    const double value = evaluate(inst, labeling);
    io.write(cfg.json ? json{{"value", value}}.dump() + "\n" : num(value) + "\n");
    return kExitOk;
}

int cmd_bench(const CliConfig& cfg, const Io& io, std::ostream& err) {
    if (cfg.bench_kind == "ratio") {
        SuiteSpec suite = cfg.suite;
        suite.count = cfg.count;
        const auto exp = bench::ratio_experiment(generate_suite(suite, cfg.seed), cfg.cap);
        io.write(bench::ratio_csv(exp.rows));
        err << bench::ratio_summary(exp);
        if (!exp.skipped.empty()) {
            const std::string sidecar = cfg.output.empty() || cfg.output == "-" ? "skipped.log" : cfg.output + ".skipped";
            std::ofstream(sidecar) << bench::skipped_log(exp.skipped);
        }
        return kExitOk;
    }
    if (cfg.bench_kind == "dicut") {
        if (cfg.dicut_min_nodes > cfg.dicut_max_nodes) throw Error("invalid node range");
        std::vector<bench::DicutRow> rows;
        for (std::size_t n = cfg.dicut_min_nodes; n <= cfg.dicut_max_nodes; ++n) {
            auto part = bench::dicut_experiment(n, cfg.count, cfg.dicut_p, mix_seed(cfg.seed, n));
            rows.insert(rows.end(), part.begin(), part.end());
        }
        io.write(bench::dicut_csv(rows));
        return kExitOk;
    }
    // mc
    const Instance inst = io.read_instance();
    const bench::Arm arm = cfg.arm == "simple" ? bench::Arm::simple : bench::Arm::rounding;
    const auto r = bench::monte_carlo_experiment(inst, arm, cfg.count, cfg.seed);
    if (cfg.json) {
        json j{{"arm", cfg.arm}, {"trials", r.trials}, {"exact", r.exact},
               {"mean", r.mean}, {"stderr", r.std_error}, {"flagged", r.flagged()}};
        io.write(j.dump() + "\n");
    } else {
        io.write("exact " + num(r.exact) + "\nmean " + num(r.mean) + "\nstderr " + num(r.std_error) +
                 "\nflagged " + (r.flagged() ? "yes" : "no") + "\n");
    }
    return r.flagged() ? kExitDomainError : kExitOk;
}

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

bool nondecreasing(const std::vector<double>& trace, double tol) {
    for (std::size_t i = 1; i < trace.size(); ++i) {
        if (trace[i] < trace[i - 1] - tol) return false;
    }
    return true;
}

int cmd_verify(const CliConfig& cfg, const Io& io) {
    const Instance inst = io.read_instance();
    const FilterReport filtered = filter_edges(inst);
    const double w = total_weight(filtered.kept);
    std::vector<Check> checks;

    const double opt = brute_force_opt(inst, cfg.cap).value;
    const double opt_filtered = brute_force_opt(filtered.kept, cfg.cap).value;
    checks.push_back({"filtering-soundness", opt == opt_filtered,
                      "opt " + num(opt) + " filtered " + num(opt_filtered) + " removed " +
                          std::to_string(filtered.removed.size())});

    const LpProgram prog = build_lp(filtered.kept);
    const LpSolution sol = solve_lp(prog);
    const ResidualReport residual = check_solution(prog, sol);
    checks.push_back({"lp-feasibility", residual.passes(), "max residual " + num(residual.worst())});
    const double lp = sol.objective;
    checks.push_back({"lp-sandwich", opt <= lp + 1e-6 && lp <= w + 1e-9,
                      "opt " + num(opt) + " lp " + num(lp) + " W " + num(w)});

    const DerandomizedResult simple = derandomize_minmax(filtered.kept);
    const RoundingResult rounded = derandomize_rounding(prog, sol);
    checks.push_back({"monotone-traces",
                      nondecreasing(simple.trace, 0.0) && nondecreasing(rounded.trace, 1e-9) &&
                          simple.value >= simple.trace.front() && rounded.value >= rounded.trace.front() - 1e-9,
                      "simple " + num(simple.value) + " round " + num(rounded.value)});

    const SolveReport report = solve_combined(inst);
    const double guarantee = guarantee_bound(w, std::min(lp, w));
    const double worst_case = opt / (2.0 * std::sqrt(2.0));
    checks.push_back({"bound-chain", report.value >= guarantee - 1e-6 && guarantee >= worst_case - 1e-6,
                      "value " + num(report.value) + " guarantee " + num(guarantee) + " opt/2sqrt2 " +
                          num(worst_case)});

    const bool all = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
    if (cfg.json) {
        json arr = json::array();
        for (const Check& c : checks) arr.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        io.write(json{{"checks", arr}, {"pass", all}}.dump() + "\n");
    } else {
        std::string text;
        for (const Check& c : checks) text += (c.pass ? "PASS " : "FAIL ") + c.name + " " + c.detail + "\n";
        io.write(text);
    }
    return all ? kExitOk : kExitDomainError;
}

void report_error(const CliConfig& cfg, std::ostream& err, const std::string& kind, const std::string& detail) {
    if (cfg.json) {
        err << json{{"error", kind}, {"detail", detail}}.dump() << "\n";
    } else {
        err << "error: " << kind << ": " << detail << "\n";
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CliConfig cfg;
    CLI::App app{"Restricted maximum acyclic subgraph solver", "rmas"};
    app.require_subcommand(1);

    auto add_io = [&](CLI::App* sub, bool input, bool output) {
        if (input) sub->add_option("--in", cfg.input, "Input .rmas file (default: standard input)");
        if (output) sub->add_option("--out", cfg.output, "Output file (default: standard output)");
    };

    auto* gen = app.add_subcommand("gen", "Generate an instance");
    add_io(gen, false, true);
    gen->add_option("--kind", cfg.gen_kind, "random | mas | khandekar | dag | fixture");
    gen->add_option("--nodes,-n", cfg.gen.nodes);
    gen->add_option("--edges,-m", cfg.gen.edges);
    gen->add_option("--label-min", cfg.gen.label_min);
    gen->add_option("--label-max", cfg.gen.label_max);
    gen->add_option("--max-list", cfg.gen.max_list_size);
    gen->add_option("--wmin", cfg.gen.weight_min);
    gen->add_option("--wmax", cfg.gen.weight_max);
    gen->add_option("--p", cfg.gen.edge_probability, "Edge probability for dag");
    gen->add_option("--k", cfg.gen.list_size, "List size for khandekar");
    gen->add_option("--name", cfg.gen.fixture_name, "Fixture name");
    gen->add_option("--seed", cfg.seed);

    auto* solve_cmd = app.add_subcommand("solve", "Solve an instance");
    add_io(solve_cmd, true, true);
    solve_cmd->add_option("--alg", cfg.algorithm, "exact | simple | simple-rand | round | round-rand | combined");
    solve_cmd->add_option("--seed", cfg.seed);
    solve_cmd->add_option("--cap", cfg.cap, "Enumeration cap for the exact oracle");
    solve_cmd->add_flag("--json", cfg.json);
    solve_cmd->add_flag("--opt", cfg.with_opt, "Also report the brute-force optimum");
    solve_cmd->add_flag("--timings", cfg.timings, "Report per-phase wall-clock times");

    auto* lp_cmd = app.add_subcommand("lp", "Solve the relaxation");
    add_io(lp_cmd, true, true);
    lp_cmd->add_flag("--dump-solution", cfg.dump_solution, "Print nonzero variables as JSON");
    lp_cmd->add_flag("--json", cfg.json);

    auto* eval_cmd = app.add_subcommand("eval", "Evaluate a labeling");
    add_io(eval_cmd, true, true);
    auto* inline_labels = eval_cmd->add_option("--labels", cfg.labels, "Space-separated labels in node order");
    auto* file_labels = eval_cmd->add_option("--labels-file", cfg.labels_file, "File holding one line of labels");
    inline_labels->excludes(file_labels);
    eval_cmd->add_flag("--json", cfg.json);

    auto* bench_cmd = app.add_subcommand("bench", "Run an experiment");
    bench_cmd->add_option("kind", cfg.bench_kind, "ratio | dicut | mc")
        ->required()
        ->check(CLI::IsMember({"ratio", "dicut", "mc"}));
    add_io(bench_cmd, true, true);
    bench_cmd->add_option("--count", cfg.count, "Instances (ratio, dicut) or trials (mc)");
    bench_cmd->add_option("--seed", cfg.seed);
    bench_cmd->add_option("--cap", cfg.cap);
    bench_cmd->add_option("--min-nodes", cfg.suite.min_nodes);
    bench_cmd->add_option("--max-nodes", cfg.suite.max_nodes);
    bench_cmd->add_option("--dicut-min-nodes", cfg.dicut_min_nodes);
    bench_cmd->add_option("--dicut-max-nodes", cfg.dicut_max_nodes);
    bench_cmd->add_option("--p", cfg.dicut_p, "Edge probability of the random DAGs");
    bench_cmd->add_option("--arm", cfg.arm, "simple | round")->check(CLI::IsMember({"simple", "round"}));
    bench_cmd->add_flag("--json", cfg.json);

    auto* verify_cmd = app.add_subcommand("verify", "Check the bound chain on one instance");
    add_io(verify_cmd, true, true);
    verify_cmd->add_option("--cap", cfg.cap);
    verify_cmd->add_flag("--json", cfg.json);

    cfg.json = std::find(args.begin(), args.end(), "--json") != args.end();
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        report_error(cfg, err, "usage", e.what());
        return kExitUsage;
    }

    const Io io(cfg, in, out);
    try {
        if (*gen) return cmd_gen(cfg, io);
        if (*solve_cmd) return cmd_solve(cfg, io);
        if (*lp_cmd) return cmd_lp(cfg, io);
        if (*eval_cmd) return cmd_eval(cfg, io);
        if (*bench_cmd) return cmd_bench(cfg, io, err);
        if (*verify_cmd) return cmd_verify(cfg, io);
    } catch (const ParseError& e) {
        report_error(cfg, err, "parse", e.what());
        return kExitDomainError;
    } catch (const InfeasibleLabeling& e) {
        report_error(cfg, err, "infeasible-labeling", e.what());
        return kExitDomainError;
    } catch (const CapExceeded& e) {
        report_error(cfg, err, "cap-exceeded", e.what());
        return kExitDomainError;
    } catch (const LpError& e) {
        report_error(cfg, err, "lp", e.what());
        return kExitDomainError;
    } catch (const Error& e) {
        report_error(cfg, err, "error", e.what());
        return kExitDomainError;
    }
    return kExitUsage;
}

}  // namespace rmas::cli
