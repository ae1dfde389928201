#include "rmas/lp.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace rmas {

LpProgram::LpProgram(Instance inst) : inst_(std::move(inst)) {
    const std::size_t n = inst_.node_count();
    x_offset_.resize(n);
    std::size_t next = 0;
    for (NodeId v = 0; v < n; ++v) {
        x_offset_[v] = next;
        next += inst_.labels(v).size();
    }
    x_count_ = next;

    std::vector<std::pair<NodeId, NodeId>> pairs;
    for (const Edge& e : inst_.edges()) {
        if (e.tail == e.head) continue;
        pairs.emplace_back(std::min(e.tail, e.head), std::max(e.tail, e.head));
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    for (auto [u, v] : pairs) {
        PairBlock b{u, v, next, inst_.labels(u).size(), inst_.labels(v).size()};
        next += b.rows * b.cols;
        blocks_.push_back(b);
    }

    objective_.assign(next, 0.0);
    for (const Edge& e : inst_.edges()) {
        if (e.tail == e.head) continue;
        const PairBlock& b = *block(e.tail, e.head);
        auto first = inst_.labels(b.first);
        auto second = inst_.labels(b.second);
        const bool tail_first = e.tail == b.first;
        for (std::size_t i = 0; i < b.rows; ++i) {
            for (std::size_t j = 0; j < b.cols; ++j) {
                const bool forward = tail_first ? first[i] < second[j] : second[j] < first[i];
                if (forward) objective_[b.var(i, j)] += e.weight;
            }
        }
    }

    for (NodeId v = 0; v < n; ++v) {
        ConstraintRow row{RowFamily::simplex, {}, 1.0};
        for (std::size_t i = 0; i < inst_.labels(v).size(); ++i) row.terms.push_back({x_var(v, i), 1.0});
        rows_.push_back(std::move(row));
    }
    for (const PairBlock& b : blocks_) {
        for (std::size_t i = 0; i < b.rows; ++i) {
            ConstraintRow row{RowFamily::row_sum, {}, 0.0};
            for (std::size_t j = 0; j < b.cols; ++j) row.terms.push_back({b.var(i, j), 1.0});
            row.terms.push_back({x_var(b.first, i), -1.0});
            rows_.push_back(std::move(row));
        }
        for (std::size_t j = 0; j < b.cols; ++j) {
            ConstraintRow row{RowFamily::col_sum, {}, 0.0};
            for (std::size_t i = 0; i < b.rows; ++i) row.terms.push_back({b.var(i, j), 1.0});
            row.terms.push_back({x_var(b.second, j), -1.0});
            rows_.push_back(std::move(row));
        }
    }
}

const PairBlock* LpProgram::block(NodeId u, NodeId v) const {
    const auto key = std::make_pair(std::min(u, v), std::max(u, v));
    auto it = std::lower_bound(blocks_.begin(), blocks_.end(), key, [](const PairBlock& b, const auto& k) {
        return std::make_pair(b.first, b.second) < k;
    });
    if (it == blocks_.end() || it->first != key.first || it->second != key.second) return nullptr;
    return &*it;
}

simplex::Problem LpProgram::to_simplex() const {
    simplex::Problem p;
    p.rows = rows_.size();
    p.cols = var_count();
    p.a.assign(p.rows * p.cols, 0.0);
    p.b.resize(p.rows);
    p.c = objective_;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        for (const Term& t : rows_[r].terms) p.at(r, t.var) += t.coef;
        p.b[r] = rows_[r].rhs;
    }
    return p;
}

LpProgram build_lp(const Instance& inst) { return LpProgram(inst); }

namespace {

double objective_value(const LpProgram& prog, const std::vector<double>& values) {
    double lp = 0.0;
    const auto& c = prog.objective();
    for (std::size_t j = 0; j < c.size(); ++j) lp += c[j] * values[j];
    return lp;
}

}  // namespace

LpSolution solve_lp(const LpProgram& prog, const simplex::Options& options) {
    const simplex::Result result = simplex::solve(prog.to_simplex(), options);
    if (result.status != simplex::Status::optimal) {
        throw LpError(result.status, "relaxation solve ended with status '" +
                                         std::string(simplex::to_string(result.status)) + "'");
    }
    LpSolution sol;
    sol.values = result.x;
    for (double& v : sol.values) {
        if (v < -kLpFeasibilityTolerance || v > 1.0 + kLpFeasibilityTolerance) {
            throw LpError(simplex::Status::numerical, "relaxation variable left [0, 1]");
        }
        v = std::clamp(v, 0.0, 1.0);
    }
    sol.objective = objective_value(prog, sol.values);
    return sol;
}

LpSolution embed_labeling(const LpProgram& prog, const Labeling& labeling) {
    const Instance& inst = prog.instance();
    check_labeling(inst, labeling);
    std::vector<std::size_t> chosen(inst.node_count());
    for (NodeId v = 0; v < inst.node_count(); ++v) {
        auto list = inst.labels(v);
        chosen[v] = static_cast<std::size_t>(std::lower_bound(list.begin(), list.end(), labeling[v]) - list.begin());
    }

    LpSolution sol;
    sol.values.assign(prog.var_count(), 0.0);
    for (NodeId v = 0; v < inst.node_count(); ++v) sol.values[prog.x_var(v, chosen[v])] = 1.0;
    for (const PairBlock& b : prog.blocks()) sol.values[b.var(chosen[b.first], chosen[b.second])] = 1.0;
    sol.objective = objective_value(prog, sol.values);
    return sol;
}

double ResidualReport::worst() const { return std::max({simplex, row_sum, col_sum, bounds}); }

ResidualReport check_solution(const LpProgram& prog, const LpSolution& sol) {
    if (sol.values.size() != prog.var_count()) {
        throw Error("solution has " + std::to_string(sol.values.size()) + " values for a program with " +
                    std::to_string(prog.var_count()) + " variables");
    }
    ResidualReport report;
    for (const ConstraintRow& row : prog.rows()) {
        double lhs = 0.0;
        for (const Term& t : row.terms) lhs += t.coef * sol.values[t.var];
        const double violation = std::abs(lhs - row.rhs);
        double& slot = row.family == RowFamily::simplex   ? report.simplex
                       : row.family == RowFamily::row_sum ? report.row_sum
                                                          : report.col_sum;
        slot = std::max(slot, violation);
    }
    for (double v : sol.values) {
        report.bounds = std::max({report.bounds, -v, v - 1.0});
    }
    return report;
}

std::vector<double> edge_forward_mass(const LpProgram& prog, const LpSolution& sol) {
    const Instance& inst = prog.instance();
    std::vector<double> q;
    q.reserve(inst.edge_count());
    for (const Edge& e : inst.edges()) {
        double mass = 0.0;
        if (const PairBlock* b = e.tail == e.head ? nullptr : prog.block(e.tail, e.head)) {
            auto first = inst.labels(b->first);
            auto second = inst.labels(b->second);
            const bool tail_first = e.tail == b->first;
            for (std::size_t i = 0; i < b->rows; ++i) {
                for (std::size_t j = 0; j < b->cols; ++j) {
                    const bool forward = tail_first ? first[i] < second[j] : second[j] < first[i];
                    if (forward) mass += sol.values[b->var(i, j)];
                }
            }
        }
        q.push_back(mass);
    }
    return q;
}

}  // namespace rmas
