#include "stumpbounds/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "stumpbounds/errors.hpp"

namespace stumpbounds {

namespace {
constexpr double kPivotTol = 1e-10;
}

StandardLp StandardLp::create(std::size_t rows, std::size_t vars,
                              std::vector<double> c, std::vector<double> a,
                              std::vector<double> b) {
    if (c.size() != vars || b.size() != rows || a.size() != rows * vars)
        throw NumericError("LP dimension mismatch");
    StandardLp lp;
    lp.num_vars = vars;
    lp.num_rows = rows;
    lp.c = std::move(c);
    lp.a = std::move(a);
    lp.b = std::move(b);
    for (std::size_t i = 0; i < rows; ++i) {
        if (lp.b[i] < 0.0) {
            lp.b[i] = -lp.b[i];
            for (std::size_t j = 0; j < vars; ++j) lp.at(i, j) = -lp.at(i, j);
        }
    }
    return lp;
}

void StandardLp::dump(std::ostream& out) const {
    for (std::size_t i = 0; i < num_rows; ++i) {
        for (std::size_t j = 0; j < num_vars; ++j) out << at(i, j) << ' ';
        out << "| " << b[i] << '\n';
    }
    out << "c:";
    for (double v : c) out << ' ' << v;
    out << '\n';
}

namespace {

enum class StepResult { Optimal, Pivoted, Unbounded };

/// Dense simplex tableau; columns [lp.num_vars, total_cols) are the
/// phase-1 artificials.
class Tableau {
public:
    explicit Tableau(const StandardLp& lp)
        : m_(lp.num_rows),
          k_(lp.num_vars),
          total_(lp.num_vars + lp.num_rows),
          rows_(m_ * (total_ + 1), 0.0),
          basis_(m_) {
        for (std::size_t i = 0; i < m_; ++i) {
            for (std::size_t j = 0; j < k_; ++j) at(i, j) = lp.at(i, j);
            at(i, k_ + i) = 1.0;
            rhs(i) = lp.b[i];
            basis_[i] = k_ + i;
        }
    }

    double& at(std::size_t i, std::size_t j) { return rows_[i * (total_ + 1) + j]; }
    double at(std::size_t i, std::size_t j) const { return rows_[i * (total_ + 1) + j]; }
    double& rhs(std::size_t i) { return rows_[i * (total_ + 1) + total_]; }
    double rhs(std::size_t i) const { return rows_[i * (total_ + 1) + total_]; }

    std::size_t rows() const { return m_; }
    std::size_t orig_cols() const { return k_; }
    std::size_t total_cols() const { return total_; }
    const std::vector<std::size_t>& basis() const { return basis_; }

    void pivot(std::size_t prow, std::size_t pcol) {
        const double p = at(prow, pcol);
        for (std::size_t j = 0; j <= total_; ++j) at(prow, j) /= p;
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == prow) continue;
            const double f = at(i, pcol);
            if (f == 0.0) continue;
            for (std::size_t j = 0; j <= total_; ++j) at(i, j) -= f * at(prow, j);
        }
        basis_[prow] = pcol;
    }

    /// One Bland step: the smallest column with negative reduced cost
    /// enters; the minimum-ratio row leaves, ties broken by smallest basic
    /// index. Entering columns are restricted to [0, max_col). Reduced
    /// costs are recomputed from scratch each step, which is immune to
    /// drift and cheap at these sizes.
    StepResult bland_step(const std::vector<double>& costs, std::size_t max_col) {
        reduced_.assign(costs.begin(), costs.end());
        for (std::size_t i = 0; i < m_; ++i) {
            const double cb = costs[basis_[i]];
            if (cb == 0.0) continue;
            for (std::size_t j = 0; j < total_; ++j) reduced_[j] -= cb * at(i, j);
        }

        std::size_t enter = total_;
        for (std::size_t j = 0; j < max_col; ++j) {
            if (reduced_[j] < -kPivotTol) {
                enter = j;
                break;
            }
        }
        if (enter == total_) return StepResult::Optimal;

        std::size_t leave = m_;
        double best_ratio = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < m_; ++i) {
            const double aij = at(i, enter);
            if (aij > kPivotTol) {
                const double ratio = rhs(i) / aij;
                if (leave == m_ || ratio < best_ratio - 1e-12 ||
                    (ratio < best_ratio + 1e-12 && basis_[i] < basis_[leave])) {
                    best_ratio = std::min(best_ratio, ratio);
                    leave = i;
                }
            }
        }
        if (leave == m_) return StepResult::Unbounded;
        pivot(leave, enter);
        return StepResult::Pivoted;
    }

private:
    std::size_t m_, k_, total_;
    std::vector<double> rows_;
    std::vector<std::size_t> basis_;
    std::vector<double> reduced_;
};

}  // namespace

LpSolution solve(const StandardLp& lp) {
    if (lp.num_rows == 0 || lp.num_vars == 0)
        throw NumericError("LP must have at least one row and one variable");

    Tableau t(lp);
    const std::size_t m = t.rows();
    const std::size_t k = t.orig_cols();
    const std::size_t total = t.total_cols();

    double b_norm = 0.0;
    for (double v : lp.b) b_norm += std::abs(v);
    const double feas_tol = 1e-8 * (1.0 + b_norm);

    const std::size_t iter_cap = 200 * (m + k) + 10000;

    // Phase 1: minimize the sum of artificials.
    std::vector<double> costs(total, 0.0);
    for (std::size_t j = k; j < total; ++j) costs[j] = 1.0;
    std::size_t iters = 0;
    while (t.bland_step(costs, total) == StepResult::Pivoted) {
        if (++iters > iter_cap)
            throw NumericError("simplex iteration cap hit in phase 1");
    }
    double infeasibility = 0.0;
    for (std::size_t i = 0; i < m; ++i)
        if (t.basis()[i] >= k) infeasibility += t.rhs(i);
    if (infeasibility > feas_tol) {
        LpSolution sol;
        sol.status = LpStatus::Infeasible;
        return sol;
    }

    // Drive remaining artificials out of the basis where possible. A row
    // with no usable pivot is redundant; its artificial stays basic at zero
    // level and cannot re-enter the objective (phase 2 restricts entering
    // columns to the original ones).
    for (std::size_t i = 0; i < m; ++i) {
        if (t.basis()[i] < k) continue;
        for (std::size_t j = 0; j < k; ++j) {
            if (std::abs(t.at(i, j)) > kPivotTol) {
                t.pivot(i, j);
                break;
            }
        }
    }

    // Phase 2 over the original costs.
    std::fill(costs.begin(), costs.end(), 0.0);
    for (std::size_t j = 0; j < k; ++j) costs[j] = lp.c[j];
    iters = 0;
    StepResult step;
    while ((step = t.bland_step(costs, k)) == StepResult::Pivoted) {
        if (++iters > iter_cap)
            throw NumericError("simplex iteration cap hit in phase 2");
    }

    LpSolution sol;
    if (step == StepResult::Unbounded) {
        sol.status = LpStatus::Unbounded;
        return sol;
    }
    sol.status = LpStatus::Optimal;
    sol.x.assign(k, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        if (t.basis()[i] < k) {
            sol.x[t.basis()[i]] = t.rhs(i);
            sol.basis.push_back(t.basis()[i]);
        }
    }
    std::sort(sol.basis.begin(), sol.basis.end());
    sol.objective = 0.0;
    for (std::size_t j = 0; j < k; ++j) sol.objective += lp.c[j] * sol.x[j];
    return sol;
}

}  // namespace stumpbounds
