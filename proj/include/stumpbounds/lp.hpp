#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

namespace stumpbounds {

/**
 * Linear program in standard equality form:
 *
 *   minimize c.x  subject to  A x = b,  x >= 0,
 *
 * with b >= 0 enforced at construction by scaling rows by -1 where needed.
 * Dense storage; sized for problems with a few thousand rows.
 */
struct StandardLp {
    std::size_t num_vars = 0;
    std::size_t num_rows = 0;
    std::vector<double> c;  // num_vars
    std::vector<double> a;  // row-major num_rows x num_vars
    std::vector<double> b;  // num_rows, >= 0

    static StandardLp create(std::size_t rows, std::size_t vars,
                             std::vector<double> c, std::vector<double> a,
                             std::vector<double> b);

    double& at(std::size_t row, std::size_t col) { return a[row * num_vars + col]; }
    double at(std::size_t row, std::size_t col) const { return a[row * num_vars + col]; }

    /// Text dump (rows of A | b, then c) for debugging.
    void dump(std::ostream& out) const;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    std::vector<double> x;
    double objective = 0.0;
    std::vector<std::size_t> basis;  // basic columns (original variables only)
};

/**
 * Two-phase dense simplex with Bland's anti-cycling rule (always; the
 * problem sizes here do not justify a faster pivot rule). Optimal
 * solutions are basic: at most num_rows nonzero entries.
 *
 * Tolerances: pivot threshold 1e-10, feasibility 1e-8 scaled by (1+|b|).
 */
LpSolution solve(const StandardLp& lp);

}  // namespace stumpbounds
