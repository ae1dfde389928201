#pragma once

// Test-only reference computations. They deliberately avoid the library's
// own algorithms: enumeration is recursive instead of mixed-radix, and the
// relaxation is assembled literally over the global label set and all
// ordered node pairs.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <iterator>
#include <set>
#include <string>
#include <vector>

#include "rmas/instance.hpp"
#include "rmas/simplex.hpp"

namespace rmas::oracle {

inline std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

inline std::string golden(const std::string& name) { return std::string(RMAS_GOLDEN_DIR) + "/" + name; }

inline Instance load_golden(const std::string& name) { return parse_instance(read_file(golden(name))); }

inline double score(const Instance& inst, const std::vector<Label>& labels) {
    double v = 0.0;
    for (const Edge& e : inst.edges()) {
        if (labels[e.tail] < labels[e.head]) v += e.weight;
    }
    return v;
}

/// Calls `visit(labels, probability)` for every labeling, where node v draws
/// label index i with probability probs[v][i].
inline void enumerate(const Instance& inst, const std::vector<std::vector<double>>& probs,
                      const std::function<void(const std::vector<Label>&, double)>& visit) {
    std::vector<Label> labels(inst.node_count());
    std::function<void(NodeId, double)> rec = [&](NodeId v, double p) {
        if (v == inst.node_count()) {
            visit(labels, p);
            return;
        }
        auto list = inst.labels(v);
        for (std::size_t i = 0; i < list.size(); ++i) {
            const double q = probs.empty() ? 1.0 : probs[v][i];
            if (!probs.empty() && q == 0.0) continue;
            labels[v] = list[i];
            rec(v + 1, p * q);
        }
    };
    rec(0, 1.0);
}

inline double opt(const Instance& inst) {
    double best = 0.0;
    enumerate(inst, {}, [&](const std::vector<Label>& l, double) { best = std::max(best, score(inst, l)); });
    return best;
}

/// Best labeling using only min/max labels, i.e. the best outcome of the coin algorithm.
inline double best_minmax(const Instance& inst) {
    std::vector<std::vector<Label>> ends;
    for (NodeId v = 0; v < inst.node_count(); ++v) ends.push_back({inst.min_label(v), inst.max_label(v)});
    const Instance restricted(ends, inst.edges());
    return opt(restricted);
}

/// E[value] when node v takes min or max with probability 1/2 each, by
/// enumerating all 2^n coin outcomes.
inline double minmax_expectation(const Instance& inst) {
    const std::size_t n = inst.node_count();
    double total = 0.0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<Label> labels(n);
        for (NodeId v = 0; v < n; ++v) labels[v] = (mask >> v) & 1 ? inst.max_label(v) : inst.min_label(v);
        total += score(inst, labels);
    }
    return total / static_cast<double>(std::uint64_t{1} << n);
}

/// E[value] under independent marginals, by full enumeration.
inline double marginal_expectation(const Instance& inst, const std::vector<std::vector<double>>& probs) {
    double total = 0.0;
    enumerate(inst, probs, [&](const std::vector<Label>& l, double p) { total += p * score(inst, l); });
    return total;
}

/// Relaxation value from the literal formulation: x over the global label
/// set with explicit off-list zero rows, y for every ordered pair (u, u')
/// including u = u', row-sum rows for every pair and explicit symmetry rows.
inline double full_formulation_lp(const Instance& inst) {
    std::set<Label> all;
    for (const auto& list : inst.label_lists()) all.insert(list.begin(), list.end());
    const std::vector<Label> labels(all.begin(), all.end());
    const std::size_t n = inst.node_count();
    const std::size_t k = labels.size();
    const std::size_t nx = n * k;
    auto xi = [&](std::size_t u, std::size_t a) { return u * k + a; };
    auto yi = [&](std::size_t u, std::size_t v, std::size_t a, std::size_t b) {
        return nx + ((u * n + v) * k + a) * k + b;
    };
    const std::size_t nvar = nx + n * n * k * k;

    std::vector<std::vector<double>> rows;
    std::vector<double> rhs;
    auto add_row = [&](std::vector<std::pair<std::size_t, double>> terms, double r) {
        std::vector<double> row(nvar, 0.0);
        for (auto [idx, coef] : terms) row[idx] += coef;
        rows.push_back(std::move(row));
        rhs.push_back(r);
    };
    for (std::size_t u = 0; u < n; ++u) {
        std::vector<std::pair<std::size_t, double>> simplex_row;
        for (std::size_t a = 0; a < k; ++a) simplex_row.push_back({xi(u, a), 1.0});
        add_row(simplex_row, 1.0);
        for (std::size_t a = 0; a < k; ++a) {
            if (!inst.allows(u, labels[a])) add_row({{xi(u, a), 1.0}}, 0.0);
        }
    }
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v) {
            for (std::size_t a = 0; a < k; ++a) {
                std::vector<std::pair<std::size_t, double>> terms;
                for (std::size_t b = 0; b < k; ++b) terms.push_back({yi(u, v, a, b), 1.0});
                terms.push_back({xi(u, a), -1.0});
                add_row(terms, 0.0);
            }
            if (u < v) {
                for (std::size_t a = 0; a < k; ++a) {
                    for (std::size_t b = 0; b < k; ++b) add_row({{yi(u, v, a, b), 1.0}, {yi(v, u, b, a), -1.0}}, 0.0);
                }
            }
        }
    }

    simplex::Problem p;
    p.rows = rows.size();
    p.cols = nvar;
    p.a.reserve(p.rows * p.cols);
    for (const auto& row : rows) p.a.insert(p.a.end(), row.begin(), row.end());
    p.b = rhs;
    p.c.assign(nvar, 0.0);
    for (const Edge& e : inst.edges()) {
        for (std::size_t a = 0; a < k; ++a) {
            for (std::size_t b = 0; b < k; ++b) {
                if (labels[a] < labels[b]) p.c[yi(e.tail, e.head, a, b)] += e.weight;
            }
        }
    }
    const simplex::Result r = simplex::solve(p);
    if (r.status != simplex::Status::optimal) return std::nan("");
    return r.objective;
}

}  // namespace rmas::oracle
