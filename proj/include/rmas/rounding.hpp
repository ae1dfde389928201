#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "rmas/instance.hpp"
#include "rmas/lp.hpp"

namespace rmas {

/// Labels paired with their probabilities.
struct LabelDistribution {
    std::span<const Label> labels;
    std::span<const double> probs;
};

/// Per-node probability vectors aligned with the node's label list.
class MarginalState {
public:
    MarginalState() = default;
    explicit MarginalState(std::vector<std::vector<double>> probs) : probs_(std::move(probs)) {}

    /// Marginals x_v of an LP solution, clipped to [0, 1] and renormalized.
    static MarginalState from_lp(const LpProgram& prog, const LpSolution& sol);
    /// Uniform distribution over every list.
    static MarginalState uniform(const Instance& inst);

    std::size_t size() const { return probs_.size(); }
    std::span<const double> probs(NodeId v) const { return probs_[v]; }
    std::vector<double>& mutable_probs(NodeId v) { return probs_[v]; }

    /// Collapse node v onto its label_index-th label.
    void fix(NodeId v, std::size_t label_index);

    /// Throws Error unless each vector matches its list size, is nonnegative
    /// and sums to 1 within `tol`.
    void validate(const Instance& inst, double tol = 1e-9) const;

private:
    std::vector<std::vector<double>> probs_;
};

struct EdgeStats {
    double p = 0.0;  // probability the edge points forward under independent rounding
    double q = 0.0;  // forward mass the relaxation puts on the edge
};

/// sum over l < l' of a(l) * b(l').
double edge_probability(const LabelDistribution& a, const LabelDistribution& b);

/// Expected value of independent rounding: sum_e w_e * p_e.
double expected_from_marginals(const Instance& inst, const MarginalState& m);

/// One independent draw per node from Rng(seed).
Labeling sample_from_marginals(const Instance& inst, const MarginalState& m, std::uint64_t seed);

/// p_e and q_e for every edge of the program's instance.
std::vector<EdgeStats> edge_stats(const LpProgram& prog, const LpSolution& sol);

/// Both sides of the row/column-sum inequality for a nonnegative square
/// matrix A: lhs = sum_{i<j} r_i c_j and rhs = (sum_{i<j} a_ij)^2 / 2, where
/// r and c are the row and column sums. lhs >= rhs holds for every such A.
struct MatrixGap {
    double lhs = 0.0;
    double rhs = 0.0;
};

/// `a` is row-major n x n. Throws Error on a negative entry or a non-square size.
MatrixGap matrix_lemma_gap(std::span<const double> a, std::size_t n);

struct RoundingResult {
    Labeling labeling;
    double value = 0.0;
    std::vector<double> trace;  // initial expectation, then after each node
};

/// Conditional-expectation derandomization of independent rounding. Nodes
/// are fixed in index order to the support label that maximizes the
/// conditional expectation; ties keep the smallest label. Only the edges
/// incident to the node being fixed are re-evaluated.
RoundingResult derandomize_marginals(const Instance& inst, MarginalState m);

/// Validates `sol` against `prog` (throws Error if check_solution fails) and
/// derandomizes its marginals. The value is at least lp^2 / (2W).
RoundingResult derandomize_rounding(const LpProgram& prog, const LpSolution& sol);

}  // namespace rmas
