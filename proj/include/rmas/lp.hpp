#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rmas/instance.hpp"
#include "rmas/simplex.hpp"

namespace rmas {

/// Raised when the relaxation cannot be solved to optimality. A correctly
/// built program is always feasible and bounded, so `infeasible` and
/// `unbounded` indicate a construction bug.
class LpError : public Error {
public:
    LpError(simplex::Status status, const std::string& what)
        : Error(what), status_(status) {}
    simplex::Status status() const { return status_; }

private:
    simplex::Status status_;
};

/// Joint-distribution block for an unordered adjacent pair (first < second).
/// Entry (i, j) is y(first has L_first[i], second has L_second[j]); the
/// reverse orientation reads the transposed entry.
struct PairBlock {
    NodeId first = 0;
    NodeId second = 0;
    std::size_t offset = 0;  // id of entry (0, 0)
    std::size_t rows = 0;    // |L_first|
    std::size_t cols = 0;    // |L_second|

    std::size_t var(std::size_t i, std::size_t j) const { return offset + i * cols + j; }
};

enum class RowFamily { simplex, row_sum, col_sum };

struct Term {
    std::size_t var = 0;
    double coef = 0.0;
};

struct ConstraintRow {
    RowFamily family = RowFamily::simplex;
    std::vector<Term> terms;
    double rhs = 0.0;
};

/// The pairwise-joint relaxation of an instance.
///
/// Variables: one marginal x_v(l) per node and list label, and one joint
/// y_{uv}(l, l') per adjacent unordered pair and pair of list labels. Off-list
/// marginals and joints simply do not exist, and storing a single block per
/// pair makes y_{uv}(l, l') = y_{vu}(l', l) hold by construction. Joints for
/// non-adjacent pairs are omitted because the product of the marginals is
/// always a feasible completion and earns nothing.
///
/// Rows: sum_l x_v(l) = 1 per node; for each block, row sums equal the first
/// node's marginals and column sums equal the second node's.
class LpProgram {
public:
    LpProgram() = default;
    explicit LpProgram(Instance inst);

    const Instance& instance() const { return inst_; }
    std::size_t var_count() const { return objective_.size(); }
    std::size_t x_var(NodeId v, std::size_t label_index) const { return x_offset_[v] + label_index; }
    std::size_t x_var_count() const { return x_count_; }

    const std::vector<PairBlock>& blocks() const { return blocks_; }
    /// Block for {u, v} in either orientation, or nullptr if not adjacent.
    const PairBlock* block(NodeId u, NodeId v) const;

    const std::vector<double>& objective() const { return objective_; }
    const std::vector<ConstraintRow>& rows() const { return rows_; }

    simplex::Problem to_simplex() const;

private:
    Instance inst_;
    std::vector<std::size_t> x_offset_;
    std::size_t x_count_ = 0;
    std::vector<PairBlock> blocks_;  // sorted by (first, second)
    std::vector<double> objective_;
    std::vector<ConstraintRow> rows_;
};

struct LpSolution {
    std::vector<double> values;  // one per program variable
    double objective = 0.0;

    double x(const LpProgram& prog, NodeId v, std::size_t label_index) const {
        return values[prog.x_var(v, label_index)];
    }
};

/// Builds the relaxation. Self-loops are skipped; other blocked edges only
/// contribute zero coefficients.
LpProgram build_lp(const Instance& inst);

/// Optimal basic solution by the two-phase simplex. Values within the pivot
/// tolerance of 0 or 1 are snapped into [0, 1].
LpSolution solve_lp(const LpProgram& prog, const simplex::Options& options = {});

/// Integral point of the relaxation: indicator marginals and their products.
LpSolution embed_labeling(const LpProgram& prog, const Labeling& labeling);

inline constexpr double kLpFeasibilityTolerance = 1e-7;

struct ResidualReport {
    double simplex = 0.0;
    double row_sum = 0.0;
    double col_sum = 0.0;
    double bounds = 0.0;

    double worst() const;
    bool passes(double tol = kLpFeasibilityTolerance) const { return worst() <= tol; }
};

/// Largest absolute violation per constraint family and of 0 <= value <= 1.
/// Throws Error if the solution does not match the program's catalog.
ResidualReport check_solution(const LpProgram& prog, const LpSolution& sol);

/// Forward LP mass of every edge, q_e = sum_{l < l'} y_{tail,head}(l, l'),
/// in the instance's edge order. Self-loops get 0.
std::vector<double> edge_forward_mass(const LpProgram& prog, const LpSolution& sol);

}  // namespace rmas
