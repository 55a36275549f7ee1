#include "stumpbounds/doomlp.hpp"

#include <algorithm>
#include <cmath>

#include "stumpbounds/errors.hpp"

namespace stumpbounds {

namespace {

double phi(double v) {
    if (v <= 0.0) return 1.0;
    if (v <= 1.0) return 1.0 - v;
    return 0.0;
}

}  // namespace

double margin_cost(std::span<const double> margins, double delta) {
    if (!(delta > 0.0)) throw ConfigError("margin cost requires delta > 0");
    double total = 0.0;
    for (double m : margins) total += phi(m / delta);
    return total / static_cast<double>(margins.size());
}

double margin_cost(const MarginProfile& profile, double delta) {
    return margin_cost(std::span<const double>(profile.sorted()), delta);
}

RademacherMarginBound rademacher_margin_bound(const MarginProfile& profile,
                                              double rad_estimate, double t,
                                              std::span<const double> delta_grid) {
    if (delta_grid.empty()) throw ConfigError("delta grid must not be empty");
    if (rad_estimate < 0.0)
        throw ConfigError("Rademacher estimate must be nonnegative");
    const double n = static_cast<double>(profile.n());
    RademacherMarginBound best;
    bool first = true;
    for (double delta : delta_grid) {
        if (!(delta > 0.0 && delta <= 1.0))
            throw ConfigError("delta grid values must lie in (0, 1]");
        const double inner = margin_cost(profile, delta) +
                             8.0 / delta * rad_estimate +
                             std::sqrt(std::log(std::log2(2.0 / delta)) / n);
        if (first || inner < best.value) {
            best.best_delta = delta;
            best.value = inner;
            first = false;
        }
    }
    best.value += t / std::sqrt(n);
    return best;
}

MarginPartition MarginPartition::from_margins(std::span<const double> margins,
                                              double delta) {
    MarginPartition p;
    p.delta = delta;
    p.cell.resize(margins.size());
    for (std::size_t i = 0; i < margins.size(); ++i) {
        const double m = margins[i];
        if (m <= kBoundaryTol)
            p.cell[i] = MarginCell::Minus;
        else if (m <= delta + kBoundaryTol)
            p.cell[i] = MarginCell::Active;
        else
            p.cell[i] = MarginCell::Clear;
    }
    return p;
}

std::size_t MarginPartition::count(MarginCell c) const {
    std::size_t k = 0;
    for (MarginCell v : cell)
        if (v == c) ++k;
    return k;
}

bool MarginPartition::consistent_with(std::span<const double> margins,
                                      double tol) const {
    for (std::size_t i = 0; i < cell.size(); ++i) {
        const double m = margins[i];
        switch (cell[i]) {
            case MarginCell::Minus:
                if (m > tol) return false;
                break;
            case MarginCell::Active:
                if (m < -tol || m > delta + tol) return false;
                break;
            case MarginCell::Clear:
                if (m < delta - tol) return false;
                break;
        }
    }
    return true;
}

namespace {

// Signed predictions g[i*T + k] = Y_i h_k(X_i).
std::vector<double> signed_predictions(const LabeledDataset& ds,
                                       std::span<const Stump> classifiers) {
    const std::size_t n = ds.size(), T = classifiers.size();
    std::vector<double> g(n * T);
    const auto nn = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < nn; ++i) {
        const auto row = ds.row(static_cast<std::size_t>(i));
        for (std::size_t k = 0; k < T; ++k)
            g[i * T + k] = ds.y(i) * classifiers[k].predict(row);
    }
    return g;
}

std::vector<double> compute_margins(const std::vector<double>& g, std::size_t n,
                                    std::span<const double> w) {
    const std::size_t T = w.size();
    std::vector<double> m(n);
    const auto nn = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < nn; ++i) {
        double v = 0.0;
        for (std::size_t k = 0; k < T; ++k) v += g[i * T + k] * w[k];
        m[i] = v;
    }
    return m;
}

std::vector<double> compute_b(const std::vector<double>& g, std::size_t n,
                              std::size_t T, const MarginPartition& partition) {
    std::vector<double> b(T, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        if (partition.cell[i] == MarginCell::Active)
            for (std::size_t k = 0; k < T; ++k) b[k] -= g[i * T + k];
    return b;
}

double dot(std::span<const double> a, std::span<const double> b) {
    double v = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) v += a[i] * b[i];
    return v;
}

// Boundary migrations of Algorithm 1, each rule evaluated against the
// pre-update cells: an Active margin at 0 moves to Minus, a Minus margin
// at 0 moves to Active, a Clear margin at delta moves to Active, an Active
// margin at delta moves to Clear.
void update_partition(MarginPartition& partition,
                      std::span<const double> margins) {
    const double tol = MarginPartition::kBoundaryTol;
    for (std::size_t i = 0; i < partition.cell.size(); ++i) {
        const double m = margins[i];
        const bool at_zero = std::abs(m) <= tol;
        const bool at_delta = std::abs(m - partition.delta) <= tol;
        switch (partition.cell[i]) {
            case MarginCell::Minus:
                if (at_zero) partition.cell[i] = MarginCell::Active;
                break;
            case MarginCell::Active:
                if (at_zero)
                    partition.cell[i] = MarginCell::Minus;
                else if (at_delta)
                    partition.cell[i] = MarginCell::Clear;
                break;
            case MarginCell::Clear:
                if (at_delta) partition.cell[i] = MarginCell::Active;
                break;
        }
    }
}

}  // namespace

StandardLp build_partition_lp(const DoomState& state,
                              const MarginPartition& partition,
                              const LabeledDataset& ds,
                              std::span<const Stump> classifiers) {
    const std::size_t n = ds.size();
    const std::size_t T = classifiers.size();
    if (partition.size() != n || state.b.size() != T)
        throw NumericError("partition/state shapes do not match the dataset");

    const std::vector<double> g = signed_predictions(ds, classifiers);
    const std::size_t actives = partition.count(MarginCell::Active);
    const std::size_t rows = n + actives + 1;
    const std::size_t vars = T + n + actives + 1;

    std::vector<double> a(rows * vars, 0.0);
    std::vector<double> b(rows, 0.0);
    std::vector<double> c(vars, 0.0);
    for (std::size_t k = 0; k < T; ++k) c[k] = state.b[k];

    // Row 0: sum of weights with its slack; columns T is the sum slack,
    // aux columns for the margin rows start at T + 1.
    for (std::size_t k = 0; k < T; ++k) a[0 * vars + k] = 1.0;
    a[0 * vars + T] = 1.0;
    b[0] = 1.0;

    std::size_t row = 1;
    std::size_t aux = T + 1;
    for (std::size_t i = 0; i < n; ++i) {
        const double* gi = g.data() + i * T;
        auto fill_margin_row = [&](double rhs, double aux_sign) {
            for (std::size_t k = 0; k < T; ++k) a[row * vars + k] = gi[k];
            a[row * vars + aux] = aux_sign;
            b[row] = rhs;
            ++row;
            ++aux;
        };
        switch (partition.cell[i]) {
            case MarginCell::Minus:  // M_i <= 0
                fill_margin_row(0.0, 1.0);
                break;
            case MarginCell::Active:  // 0 <= M_i <= delta
                fill_margin_row(0.0, -1.0);
                fill_margin_row(partition.delta, 1.0);
                break;
            case MarginCell::Clear:  // M_i >= delta
                fill_margin_row(partition.delta, -1.0);
                break;
        }
    }
    return StandardLp::create(rows, vars, std::move(c), std::move(a), std::move(b));
}

DoomResult doom_lp(std::span<const double> initial_w, const LabeledDataset& ds,
                   std::span<const Stump> classifiers, double delta) {
    const std::size_t n = ds.size();
    const std::size_t T = classifiers.size();
    if (initial_w.size() != T)
        throw ConfigError("initial weights do not match classifier count");
    if (!(delta > 1e-6 && delta <= 1.0))
        throw ConfigError("doom-lp delta must lie in (1e-6, 1]");
    double wsum = 0.0;
    for (double w : initial_w) {
        if (w < -1e-10) throw ConfigError("initial weights must be nonnegative");
        wsum += w;
    }
    if (std::abs(wsum - 1.0) > 1e-9)
        throw ConfigError("initial weights must sum to 1");

    const std::vector<double> g = signed_predictions(ds, classifiers);

    DoomState state;
    state.w.assign(initial_w.begin(), initial_w.end());
    state.margins = compute_margins(g, n, state.w);
    MarginPartition partition = MarginPartition::from_margins(state.margins, delta);
    state.b = compute_b(g, n, T, partition);
    state.objective = dot(state.b, state.w);

    DoomResult result;
    auto record = [&](int iter) {
        result.trace.push_back({iter, state.objective,
                                partition.count(MarginCell::Minus),
                                partition.count(MarginCell::Active),
                                partition.count(MarginCell::Clear),
                                margin_cost(state.margins, delta)});
    };
    record(0);

    const int iteration_cap = 1000;
    for (int iter = 1;; ++iter) {
        const double c_min = state.objective;
        if (partition.count(MarginCell::Active) == 0) {
            result.status = DoomStatus::EmptyActiveSet;
            break;
        }

        const StandardLp lp = build_partition_lp(state, partition, ds, classifiers);
        const LpSolution sol = solve(lp);
        if (sol.status != LpStatus::Optimal)
            throw NumericError("doom-lp partition LP did not solve to optimality");

        std::vector<double> w_new(sol.x.begin(), sol.x.begin() + T);
        for (double& w : w_new) w = std::max(w, 0.0);

        // The sum row carries a slack, so the LP may return total weight
        // below 1; rescale to the simplex when the partition constraints
        // allow it (the objective is <= 0, so rescaling never hurts it).
        double total = 0.0;
        for (double w : w_new) total += w;
        if (total < 1.0 - 1e-9 && total > 0.0) {
            std::vector<double> scaled = w_new;
            for (double& w : scaled) w /= total;
            const std::vector<double> scaled_margins = compute_margins(g, n, scaled);
            if (partition.consistent_with(scaled_margins, MarginPartition::kBoundaryTol)) {
                w_new = std::move(scaled);
            }
        }

        state.w = std::move(w_new);
        state.margins = compute_margins(g, n, state.w);
        update_partition(partition, state.margins);
        state.b = compute_b(g, n, T, partition);
        state.objective = dot(state.b, state.w);
        record(iter);

        if (state.objective >= c_min) {
            result.status = DoomStatus::Converged;
            break;
        }
        if (iter >= iteration_cap) {
            result.status = DoomStatus::IterationCap;
            break;
        }
    }

    result.weights = state.w;
    return result;
}

}  // namespace stumpbounds
