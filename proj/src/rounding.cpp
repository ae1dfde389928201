#include "rmas/rounding.hpp"

#include <algorithm>
#include <cmath>

#include "rmas/rng.hpp"

namespace rmas {

MarginalState MarginalState::from_lp(const LpProgram& prog, const LpSolution& sol) {
    const Instance& inst = prog.instance();
    std::vector<std::vector<double>> probs(inst.node_count());
    for (NodeId v = 0; v < inst.node_count(); ++v) {
        auto& p = probs[v];
        p.resize(inst.labels(v).size());
        double sum = 0.0;
        for (std::size_t i = 0; i < p.size(); ++i) {
            p[i] = std::clamp(sol.x(prog, v, i), 0.0, 1.0);
            sum += p[i];
        }
        if (sum <= 0.0) throw Error("marginals of node " + std::to_string(v) + " vanish");
        for (double& x : p) x /= sum;
    }
    return MarginalState(std::move(probs));
}

MarginalState MarginalState::uniform(const Instance& inst) {
    std::vector<std::vector<double>> probs(inst.node_count());
    for (NodeId v = 0; v < inst.node_count(); ++v) {
        const std::size_t k = inst.labels(v).size();
        probs[v].assign(k, 1.0 / static_cast<double>(k));
    }
    return MarginalState(std::move(probs));
}

void MarginalState::fix(NodeId v, std::size_t label_index) {
    auto& p = probs_[v];
    std::fill(p.begin(), p.end(), 0.0);
    p[label_index] = 1.0;
}

void MarginalState::validate(const Instance& inst, double tol) const {
    if (probs_.size() != inst.node_count()) throw Error("marginal state does not cover every node");
    for (NodeId v = 0; v < inst.node_count(); ++v) {
        const auto& p = probs_[v];
        if (p.size() != inst.labels(v).size()) {
            throw Error("marginal vector of node " + std::to_string(v) + " does not match its list");
        }
        double sum = 0.0;
        for (double x : p) {
            if (!(x >= 0.0)) throw Error("negative marginal at node " + std::to_string(v));
            sum += x;
        }
        if (std::abs(sum - 1.0) > tol) throw Error("marginals of node " + std::to_string(v) + " do not sum to 1");
    }
}

double edge_probability(const LabelDistribution& a, const LabelDistribution& b) {
    double p = 0.0;
    for (std::size_t i = 0; i < a.labels.size(); ++i) {
        if (a.probs[i] == 0.0) continue;
        double above = 0.0;
        for (std::size_t j = 0; j < b.labels.size(); ++j) {
            if (a.labels[i] < b.labels[j]) above += b.probs[j];
        }
        p += a.probs[i] * above;
    }
    return p;
}

namespace {

double edge_term(const Instance& inst, const MarginalState& m, const Edge& e) {
    return e.weight * edge_probability({inst.labels(e.tail), m.probs(e.tail)}, {inst.labels(e.head), m.probs(e.head)});
}

}  // namespace

double expected_from_marginals(const Instance& inst, const MarginalState& m) {
    double expected = 0.0;
    for (const Edge& e : inst.edges()) expected += edge_term(inst, m, e);
    return expected;
}

Labeling sample_from_marginals(const Instance& inst, const MarginalState& m, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Label> labels(inst.node_count());
    for (NodeId v = 0; v < inst.node_count(); ++v) {
        auto list = inst.labels(v);
        auto probs = m.probs(v);
        const double u = rng.unit();
        double cumulative = 0.0;
        // Falls back to the last label with positive mass if rounding leaves
        // the cumulative sum just short of u.
        std::size_t pick = list.size();
        for (std::size_t i = 0; i < list.size(); ++i) {
            if (probs[i] <= 0.0) continue;
            cumulative += probs[i];
            pick = i;
            if (u < cumulative) break;
        }
        labels[v] = list[pick];
    }
    return Labeling(std::move(labels));
}

std::vector<EdgeStats> edge_stats(const LpProgram& prog, const LpSolution& sol) {
    const Instance& inst = prog.instance();
    const MarginalState m = MarginalState::from_lp(prog, sol);
    const std::vector<double> q = edge_forward_mass(prog, sol);
    std::vector<EdgeStats> stats;
    stats.reserve(inst.edge_count());
    const auto& edges = inst.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Edge& e = edges[i];
        double p = 0.0;
        if (e.tail != e.head) {
            p = edge_probability({inst.labels(e.tail), m.probs(e.tail)}, {inst.labels(e.head), m.probs(e.head)});
        }
        stats.push_back({p, q[i]});
    }
    return stats;
}

MatrixGap matrix_lemma_gap(std::span<const double> a, std::size_t n) {
    if (a.size() != n * n) throw Error("matrix is not square");
    std::vector<double> row(n, 0.0), col(n, 0.0);
    double upper = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double x = a[i * n + j];
            if (!(x >= 0.0)) throw Error("matrix has a negative entry");
            row[i] += x;
            col[j] += x;
            if (i < j) upper += x;
        }
    }
    MatrixGap gap;
    double col_suffix = 0.0;  // sum of c_j for j > i
    for (std::size_t i = n; i-- > 0;) {
        gap.lhs += row[i] * col_suffix;
        col_suffix += col[i];
    }
    gap.rhs = 0.5 * upper * upper;
    return gap;
}

RoundingResult derandomize_marginals(const Instance& inst, MarginalState m) {
    m.validate(inst);
    const auto& edges = inst.edges();
    std::vector<std::vector<std::size_t>> incident(inst.node_count());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (edges[i].tail == edges[i].head) continue;
        incident[edges[i].tail].push_back(i);
        incident[edges[i].head].push_back(i);
    }
    auto incident_sum = [&](NodeId v) {
        double s = 0.0;
        for (std::size_t i : incident[v]) s += edge_term(inst, m, edges[i]);
        return s;
    };

    RoundingResult result;
    double current = expected_from_marginals(inst, m);
    result.trace.push_back(current);
    std::vector<Label> labels(inst.node_count());
    for (NodeId v = 0; v < inst.node_count(); ++v) {
        const std::vector<double> original(m.probs(v).begin(), m.probs(v).end());
        const double before = incident_sum(v);
        std::size_t best = original.size();
        double best_value = 0.0;
        for (std::size_t i = 0; i < original.size(); ++i) {
            if (original[i] <= 0.0) continue;
            m.fix(v, i);
            const double candidate = current - before + incident_sum(v);
            if (best == original.size() || candidate > best_value) {
                best = i;
                best_value = candidate;
            }
        }
        m.fix(v, best);
        labels[v] = inst.labels(v)[best];
        current = best_value;
        result.trace.push_back(current);
    }
    result.labeling = Labeling(std::move(labels));
    result.value = evaluate(inst, result.labeling);
    return result;
}

RoundingResult derandomize_rounding(const LpProgram& prog, const LpSolution& sol) {
    const ResidualReport residuals = check_solution(prog, sol);
    if (!residuals.passes()) {
        throw Error("solution violates the relaxation by " + std::to_string(residuals.worst()));
    }
    return derandomize_marginals(prog.instance(), MarginalState::from_lp(prog, sol));
}

}  // namespace rmas
