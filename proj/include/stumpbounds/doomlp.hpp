#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "stumpbounds/dataset.hpp"
#include "stumpbounds/lp.hpp"
#include "stumpbounds/margins.hpp"
#include "stumpbounds/stump.hpp"

namespace stumpbounds {

/// Piecewise-linear margin cost: phi(u) = 1 for u <= 0, 1 - u on (0, 1],
/// 0 beyond; phi_delta(u) = phi(u/delta). Returns the average over margins.
double margin_cost(std::span<const double> margins, double delta);
double margin_cost(const MarginProfile& profile, double delta);

struct RademacherMarginBound {
    double best_delta = 0.0;
    double value = 0.0;
};

/**
 * Margin-cost generalization bound: minimizes over the delta grid
 *
 *   P_n phi_delta + (8/delta) rad_estimate + sqrt(log log2(2/delta) / n)
 *
 * and adds t/sqrt(n). Returns the minimizing delta and the full value.
 */
RademacherMarginBound rademacher_margin_bound(const MarginProfile& profile,
                                              double rad_estimate, double t,
                                              std::span<const double> delta_grid);

enum class MarginCell : std::uint8_t {
    Minus,   // margin <= 0
    Active,  // 0 <= margin <= delta; these examples carry the cost slope
    Clear,   // margin >= delta
};

/**
 * Partition of example indices by margin location relative to [0, delta].
 * Boundary values (within 1e-8 of 0 or delta) may sit on either side; the
 * initial assignment takes the first matching cell in the order
 * Minus, Active, Clear.
 */
struct MarginPartition {
    std::vector<MarginCell> cell;
    double delta = 0.0;

    static constexpr double kBoundaryTol = 1e-8;

    static MarginPartition from_margins(std::span<const double> margins,
                                        double delta);

    std::size_t count(MarginCell c) const;
    std::size_t size() const { return cell.size(); }

    /// Membership invariant: every index's margin lies in its cell's range
    /// within tol.
    bool consistent_with(std::span<const double> margins, double tol) const;
};

/// Weights plus derived quantities of one DOOM-LP iterate.
struct DoomState {
    std::vector<double> w;        // simplex weights over the classifiers
    std::vector<double> margins;  // M_i = Y_i sum_k w_k h_k(X_i)
    std::vector<double> b;        // b_k = -sum_{i active} Y_i h_k(X_i)
    double objective = 0.0;       // b . w
};

/**
 * The partition LP in standard equality form. Variables are the T weights,
 * one slack on the weight-sum row, then one slack/surplus per margin
 * inequality in example order (Active examples contribute a lower and an
 * upper row): T + n + |S_l| + 1 variables, n + |S_l| + 1 equality rows.
 * The objective is sum_k b_k w_k, i.e. minus the total margin over the
 * active set.
 */
StandardLp build_partition_lp(const DoomState& state,
                              const MarginPartition& partition,
                              const LabeledDataset& ds,
                              std::span<const Stump> classifiers);

struct DoomIteration {
    int iteration = 0;
    double objective = 0.0;  // b . w after this iteration's set update
    std::size_t s_minus = 0;
    std::size_t s_active = 0;
    std::size_t s_clear = 0;
    double cost = 0.0;  // P_n phi_delta at this iterate
};

enum class DoomStatus {
    Converged,       // objective stopped improving
    EmptyActiveSet,  // no margins in (0, delta); nothing to optimize
    IterationCap,    // flip cycle guard (1000 iterations) triggered
};

struct DoomResult {
    std::vector<double> weights;
    std::vector<DoomIteration> trace;  // entry 0 is the initial state
    DoomStatus status = DoomStatus::Converged;
};

/**
 * DOOM-LP: repeatedly solves the partition LP, recomputes margins, and
 * migrates boundary examples (margins at 0 or delta, tolerance 1e-8)
 * between cells, until the objective stops decreasing or the active set
 * empties. initial_w must be simplex-feasible; delta in (1e-6, 1].
 */
DoomResult doom_lp(std::span<const double> initial_w, const LabeledDataset& ds,
                   std::span<const Stump> classifiers, double delta);

}  // namespace stumpbounds
