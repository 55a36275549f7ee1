#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "stumpbounds/errors.hpp"

namespace stumpbounds {

/**
 * Sorted empirical margins of a classifier on a sample. P_n{f <= delta}
 * is the right-continuous step function #(margins <= delta)/n, answered
 * by binary search.
 */
class MarginProfile {
public:
    /// Sorts the margins; values must lie in [-1, 1] (1e-9 slack).
    static MarginProfile from_margins(std::vector<double> margins);

    std::size_t n() const { return sorted_.size(); }
    const std::vector<double>& sorted() const { return sorted_; }

    /// P_n{f <= delta}.
    double cdf(double delta) const;

    double min_margin() const { return sorted_.front(); }
    double max_margin() const { return sorted_.back(); }

private:
    std::vector<double> sorted_;
};

/**
 * A right-continuous step CDF given as jump points with cumulative
 * probabilities: P{ <= values[i] } = cum[i]. Used for the exact margin
 * distribution of the intervals problem, where jumps carry Lebesgue
 * measure instead of 1/n counts.
 */
struct StepCdf {
    std::vector<double> values;  // strictly increasing
    std::vector<double> cum;     // nondecreasing, last entry = 1

    static StepCdf from_profile(const MarginProfile& profile);
    double at(double delta) const;
};

/// Result of the gamma-margin supremum. When the defining condition holds
/// nowhere in (0,1) (possible only through floating-point underflow; the
/// condition always holds for small enough delta), feasible is false and
/// delta_hat is 0.
struct GammaMargin {
    double delta_hat = 0.0;
    bool feasible = true;
};

/**
 * The gamma-margin sup{ delta in (0,1) : delta^gamma P{f <= delta}
 * <= n^(gamma/2 - 1) }, computed exactly segment by segment: between
 * consecutive jumps the CDF is constant, so the condition on a segment
 * reduces to delta <= (n^(gamma/2) / (n P))^(1/gamma). Returns 1 when the
 * condition holds on all of (0,1).
 *
 * `n` is the sample size appearing in the threshold; for the empirical
 * profile it equals profile.n(), while the exact-distribution variant
 * keeps the n of the sample being compared against.
 */
GammaMargin gamma_margin_cdf(const StepCdf& cdf, double gamma, std::size_t n);
GammaMargin gamma_margin(const MarginProfile& profile, double gamma);

/// 1 / (n^(1-gamma/2) * delta_hat^gamma); +infinity when delta_hat = 0.
double gamma_bound(const MarginProfile& profile, double gamma);
double gamma_bound_cdf(const StepCdf& cdf, double gamma, std::size_t n);

/**
 * A concave nondecreasing complexity function psi on [0, inf) with
 * psi(0) = 0. phi(x) = psi(x)/x is nonincreasing; phi_inverse(y) returns
 * sup{ x > 0 : phi(x) >= y }, analytically when the instance provides a
 * closed form, otherwise by monotone bisection to 1e-12 relative width.
 */
class PsiFunction {
public:
    virtual ~PsiFunction() = default;

    virtual double psi(double x) const = 0;
    double phi(double x) const;
    virtual double phi_inverse(double y) const;

    /// Smallest admissible epsilon for psi_delta, as a multiple of 1/n
    /// (Example-2 style instances restrict the domain). Zero means no
    /// restriction.
    virtual double min_eps_times_n() const { return 0.0; }

protected:
    /// Bisection bracket for the generic phi_inverse.
    virtual double bracket_hi() const { return 1e6; }
};

/// psi(x) = x^(1 - alpha/2), alpha in (0, 2). phi_inverse(y) = y^(-2/alpha).
class PowerPsi final : public PsiFunction {
public:
    explicit PowerPsi(double alpha);
    double psi(double x) const override;
    double phi_inverse(double y) const override;
    double alpha() const { return alpha_; }

private:
    double alpha_;
};

/// psi(x) = x sqrt(log(e/x)) for x <= 1, x for x > 1; requires eps >= 1/n.
class VcPsi final : public PsiFunction {
public:
    double psi(double x) const override;
    double phi_inverse(double y) const override;
    double min_eps_times_n() const override { return 1.0; }
};

/// Piecewise-linear psi through user-supplied points (must start at (0,0));
/// nondecreasing and concave, validated on a 1024-point grid at
/// construction. Extends with the final slope beyond the last point.
class TabulatedPsi final : public PsiFunction {
public:
    TabulatedPsi(std::vector<double> xs, std::vector<double> ys);
    double psi(double x) const override;

protected:
    double bracket_hi() const override;

private:
    std::vector<double> xs_, ys_;
};

/// delta_n^psi(eps) = phi_inverse(sqrt(eps n)) / sqrt(eps): the largest
/// delta at which the complexity eps is attainable. Throws NumericError
/// outside the instance's domain or when phi is not invertible.
double psi_delta(const PsiFunction& psi, std::size_t n, double eps);

/**
 * Parameters shared by the psi-bounds. floor() = max(t, 2 log n)/n is the
 * smallest epsilon considered. gamma and alpha are tied by
 * gamma = 2 alpha/(alpha + 2).
 */
struct BoundParams {
    std::size_t n = 1;
    double t = 1.0;
    double gamma = 1.0;
    double alpha = 2.0;

    double floor() const;

    static BoundParams for_gamma(std::size_t n, double gamma, double t);
    static BoundParams for_alpha(std::size_t n, double alpha, double t);
};

/**
 * Empirical psi-bound inf{ eps >= floor : P_n{f <= delta_n^psi(eps)} <= eps }.
 * delta_n^psi is nonincreasing in eps and the CDF nondecreasing in delta,
 * so feasibility is monotone and the infimum is found by bisection over
 * [floor, 1] to 1e-10 absolute, returning a verified-feasible point.
 */
double empirical_psi_bound(const MarginProfile& profile, const PsiFunction& psi,
                           const BoundParams& params);

/// Example-2 specialization: psi-bound with the VC-type psi.
double vc_psi_bound(const MarginProfile& profile, const BoundParams& params);

}  // namespace stumpbounds
