#include "rmas/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace rmas::simplex {

std::string_view to_string(Status status) {
    switch (status) {
        case Status::optimal: return "optimal";
        case Status::infeasible: return "infeasible";
        case Status::unbounded: return "unbounded";
        case Status::numerical: return "numerical";
    }
    return "unknown";
}

namespace {

// Columns [0, n) are structural, [n, n + m) artificial, the last is the rhs.
class Tableau {
public:
    Tableau(const Problem& p, const Options& opt)
        : m_(p.rows), n_(p.cols), width_(p.cols + p.rows + 1), opt_(opt),
          t_(m_ * width_, 0.0), reduced_(width_, 0.0), basis_(m_) {
        for (std::size_t r = 0; r < m_; ++r) {
            const double sign = p.b[r] < 0.0 ? -1.0 : 1.0;
            for (std::size_t j = 0; j < n_; ++j) at(r, j) = sign * p.at(r, j);
            at(r, n_ + r) = 1.0;
            rhs(r) = sign * p.b[r];
            basis_[r] = n_ + r;
        }
        max_pivots_ = opt.max_pivots ? opt.max_pivots : 200 * (m_ + n_) + 1000;
    }

    Status run(const std::vector<double>& c, Result& out) {
        // Phase one: maximize -sum(artificials).
        std::fill(reduced_.begin(), reduced_.end(), 0.0);
        objective_ = 0.0;
        for (std::size_t r = 0; r < m_; ++r) {
            for (std::size_t j = 0; j < n_; ++j) reduced_[j] += at(r, j);
            objective_ -= rhs(r);
        }
        Status s = iterate(n_ + m_, out.pivots);
        if (s != Status::optimal) return s;
        if (objective_ < -opt_.feasibility_tolerance) return Status::infeasible;
        drive_out_artificials(out.pivots);

        // Phase two on the original objective; artificials may not enter.
        for (std::size_t j = 0; j < width_; ++j) reduced_[j] = j < n_ ? c[j] : 0.0;
        objective_ = 0.0;
        for (std::size_t r = 0; r < m_; ++r) {
            const std::size_t bj = basis_[r];
            const double cb = bj < n_ ? c[bj] : 0.0;
            if (cb == 0.0) continue;
            for (std::size_t j = 0; j < width_ - 1; ++j) reduced_[j] -= cb * at(r, j);
            objective_ += cb * rhs(r);
        }
        s = iterate(n_, out.pivots);
        if (s != Status::optimal) return s;

        out.x.assign(n_, 0.0);
        for (std::size_t r = 0; r < m_; ++r) {
            if (basis_[r] < n_) out.x[basis_[r]] = rhs(r);
        }
        out.objective = 0.0;
        for (std::size_t j = 0; j < n_; ++j) out.objective += c[j] * out.x[j];
        return Status::optimal;
    }

private:
    double& at(std::size_t r, std::size_t j) { return t_[r * width_ + j]; }
    double& rhs(std::size_t r) { return t_[r * width_ + width_ - 1]; }

    Status iterate(std::size_t enterable, std::size_t& pivots) {
        const double tol = opt_.pivot_tolerance;
        for (;;) {
            std::size_t enter = enterable;
            for (std::size_t j = 0; j < enterable; ++j) {
                if (reduced_[j] > tol) {
                    enter = j;
                    break;
                }
            }
            if (enter == enterable) return Status::optimal;

            double best_ratio = std::numeric_limits<double>::infinity();
            for (std::size_t r = 0; r < m_; ++r) {
                const double coef = at(r, enter);
                if (coef > tol) best_ratio = std::min(best_ratio, rhs(r) / coef);
            }
            if (best_ratio == std::numeric_limits<double>::infinity()) return Status::unbounded;

            // Among rows tied at the minimum ratio, the smallest basic index leaves.
            const double slack = 1e-12 * (1.0 + best_ratio);
            std::size_t leave = m_;
            for (std::size_t r = 0; r < m_; ++r) {
                const double coef = at(r, enter);
                if (coef <= tol || rhs(r) / coef > best_ratio + slack) continue;
                if (leave == m_ || basis_[r] < basis_[leave]) leave = r;
            }
            if (++pivots > max_pivots_) return Status::numerical;
            if (!pivot(leave, enter)) return Status::numerical;
        }
    }

    void drive_out_artificials(std::size_t& pivots) {
        for (std::size_t r = 0; r < m_; ++r) {
            if (basis_[r] < n_) continue;
            std::size_t best = n_;
            for (std::size_t j = 0; j < n_; ++j) {
                if (std::abs(at(r, j)) > opt_.pivot_tolerance) {
                    best = j;
                    break;
                }
            }
            // No structural entry: the row is redundant and its artificial
            // stays basic at zero.
            if (best == n_) continue;
            ++pivots;
            pivot(r, best);
        }
    }

    bool pivot(std::size_t r, std::size_t s) {
        const double p = at(r, s);
        if (std::abs(p) <= opt_.pivot_tolerance) return false;
        const double inv = 1.0 / p;
        for (std::size_t j = 0; j < width_; ++j) at(r, j) *= inv;
        at(r, s) = 1.0;
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == r) continue;
            const double f = at(i, s);
            if (f == 0.0) continue;
            for (std::size_t j = 0; j < width_; ++j) at(i, j) -= f * at(r, j);
            at(i, s) = 0.0;
        }
        const double f = reduced_[s];
        if (f != 0.0) {
            for (std::size_t j = 0; j < width_ - 1; ++j) reduced_[j] -= f * at(r, j);
            objective_ += f * rhs(r);
            reduced_[s] = 0.0;
        }
        basis_[r] = s;

        for (std::size_t i = 0; i < m_; ++i) {
            if (rhs(i) < 0.0) {
                if (rhs(i) < -opt_.feasibility_tolerance) return false;
                rhs(i) = 0.0;
            }
        }
        return true;
    }

    std::size_t m_, n_, width_;
    Options opt_;
    std::vector<double> t_;
    std::vector<double> reduced_;
    std::vector<std::size_t> basis_;
    double objective_ = 0.0;
    std::size_t max_pivots_ = 0;
};

}  // namespace

Result solve(const Problem& problem, const Options& options) {
    if (problem.a.size() != problem.rows * problem.cols || problem.b.size() != problem.rows ||
        problem.c.size() != problem.cols) {
        throw std::invalid_argument("simplex problem dimensions are inconsistent");
    }
    Result result;
    Tableau tableau(problem, options);
    result.status = tableau.run(problem.c, result);
    return result;
}

}  // namespace rmas::simplex
