#include "stumpbounds/margins.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace stumpbounds {

MarginProfile MarginProfile::from_margins(std::vector<double> margins) {
    if (margins.empty()) throw NumericError("margin profile needs at least one value");
    for (double& m : margins) {
        if (m < -1.0 - 1e-9 || m > 1.0 + 1e-9)
            throw NumericError("margins must lie in [-1, 1]");
        m = std::clamp(m, -1.0, 1.0);
    }
    std::sort(margins.begin(), margins.end());
    MarginProfile p;
    p.sorted_ = std::move(margins);
    return p;
}

double MarginProfile::cdf(double delta) const {
    const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), delta);
    return static_cast<double>(it - sorted_.begin()) /
           static_cast<double>(sorted_.size());
}

StepCdf StepCdf::from_profile(const MarginProfile& profile) {
    StepCdf cdf;
    const auto& m = profile.sorted();
    const double n = static_cast<double>(m.size());
    std::size_t i = 0;
    while (i < m.size()) {
        std::size_t j = i;
        while (j < m.size() && m[j] == m[i]) ++j;
        cdf.values.push_back(m[i]);
        cdf.cum.push_back(static_cast<double>(j) / n);
        i = j;
    }
    return cdf;
}

double StepCdf::at(double delta) const {
    const auto it = std::upper_bound(values.begin(), values.end(), delta);
    if (it == values.begin()) return 0.0;
    return cum[static_cast<std::size_t>(it - values.begin()) - 1];
}

GammaMargin gamma_margin_cdf(const StepCdf& cdf, double gamma, std::size_t n) {
    if (!(gamma > 0.0 && gamma <= 1.0))
        throw ConfigError("gamma must lie in (0, 1]");
    const double thr = std::pow(static_cast<double>(n), gamma / 2.0 - 1.0);

    // Segment boundaries of the CDF inside (0,1). On each segment the CDF
    // is constant, so the condition delta^gamma P <= thr holds up to
    // (thr/P)^(1/gamma); the product delta^gamma P is nondecreasing in
    // delta overall, so the scan can stop at the first partial segment.
    std::vector<double> starts{0.0};
    for (double v : cdf.values)
        if (v > 0.0 && v < 1.0) starts.push_back(v);

    double best = 0.0;
    for (std::size_t s = 0; s < starts.size(); ++s) {
        const double a = starts[s];
        const double b = s + 1 < starts.size() ? starts[s + 1] : 1.0;
        const double mass = cdf.at(a);
        if (mass <= 0.0) {
            best = b;
            continue;
        }
        const double t_max = std::pow(thr / mass, 1.0 / gamma);
        if (t_max >= b) {
            best = b;
            continue;
        }
        if (t_max > a) best = t_max;
        break;
    }
    if (best >= 1.0) return {1.0, true};
    if (best <= 0.0) return {0.0, false};
    return {best, true};
}

GammaMargin gamma_margin(const MarginProfile& profile, double gamma) {
    return gamma_margin_cdf(StepCdf::from_profile(profile), gamma, profile.n());
}

double gamma_bound_cdf(const StepCdf& cdf, double gamma, std::size_t n) {
    const GammaMargin gm = gamma_margin_cdf(cdf, gamma, n);
    if (!gm.feasible || gm.delta_hat <= 0.0)
        return std::numeric_limits<double>::infinity();
    return std::pow(static_cast<double>(n), gamma / 2.0 - 1.0) *
           std::pow(gm.delta_hat, -gamma);
}

double gamma_bound(const MarginProfile& profile, double gamma) {
    return gamma_bound_cdf(StepCdf::from_profile(profile), gamma, profile.n());
}

double PsiFunction::phi(double x) const {
    if (!(x > 0.0)) throw NumericError("phi(x) requires x > 0");
    return psi(x) / x;
}

double PsiFunction::phi_inverse(double y) const {
    if (!(y > 0.0)) throw NumericError("phi_inverse requires a positive level");
    double lo = 1e-300;
    if (phi(lo) < y)
        throw NumericError("phi never reaches the requested level");
    double hi = bracket_hi();
    int expand = 0;
    while (phi(hi) >= y) {
        hi *= 16.0;
        if (++expand > 60)
            throw NumericError("phi is not invertible at this level");
    }
    while (hi - lo > 1e-12 * hi) {
        const double mid = 0.5 * (lo + hi);
        if (phi(mid) >= y)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

PowerPsi::PowerPsi(double alpha) : alpha_(alpha) {
    if (!(alpha > 0.0 && alpha < 2.0))
        throw ConfigError("power psi requires alpha in (0, 2)");
}

double PowerPsi::psi(double x) const { return std::pow(x, 1.0 - alpha_ / 2.0); }

double PowerPsi::phi_inverse(double y) const {
    if (!(y > 0.0)) throw NumericError("phi_inverse requires a positive level");
    return std::pow(y, -2.0 / alpha_);
}

double VcPsi::psi(double x) const {
    if (x > 1.0) return x;
    if (x <= 0.0) return 0.0;
    return x * std::sqrt(std::log(std::numbers::e / x));
}

double VcPsi::phi_inverse(double y) const {
    // phi(x) = sqrt(log(e/x)) on (0,1], identically 1 beyond; levels below
    // 1 are unattained (the sup would be infinite).
    if (y < 1.0)
        throw NumericError("VC psi requires eps >= 1/n (level below 1)");
    return std::exp(1.0 - y * y);
}

TabulatedPsi::TabulatedPsi(std::vector<double> xs, std::vector<double> ys)
    : xs_(std::move(xs)), ys_(std::move(ys)) {
    if (xs_.size() != ys_.size() || xs_.size() < 2)
        throw ConfigError("tabulated psi needs matching xs/ys with >= 2 points");
    if (xs_.front() != 0.0 || ys_.front() != 0.0)
        throw ConfigError("tabulated psi must start at (0, 0)");
    for (std::size_t i = 1; i < xs_.size(); ++i)
        if (!(xs_[i] > xs_[i - 1]))
            throw ConfigError("tabulated psi xs must be strictly increasing");

    // Concavity and monotonicity, spot-checked on a 1024-point grid.
    const double hi = xs_.back();
    double prev = 0.0;
    for (int k = 1; k <= 1024; ++k) {
        const double a = hi * (k - 1) / 1024.0;
        const double b = hi * k / 1024.0;
        const double va = psi(a), vb = psi(b);
        if (vb + 1e-12 < va)
            throw ConfigError("tabulated psi must be nondecreasing");
        if (psi(0.5 * (a + b)) + 1e-9 < 0.5 * (va + vb))
            throw ConfigError("tabulated psi must be concave");
        prev = vb;
    }
    (void)prev;
}

double TabulatedPsi::psi(double x) const {
    if (x <= 0.0) return 0.0;
    const auto it = std::lower_bound(xs_.begin(), xs_.end(), x);
    std::size_t i = static_cast<std::size_t>(it - xs_.begin());
    if (i >= xs_.size()) i = xs_.size() - 1;  // extend with the final slope
    if (i == 0) i = 1;
    const double slope = (ys_[i] - ys_[i - 1]) / (xs_[i] - xs_[i - 1]);
    return ys_[i - 1] + slope * (x - xs_[i - 1]);
}

double TabulatedPsi::bracket_hi() const { return xs_.back() * 1e6 + 1.0; }

double psi_delta(const PsiFunction& psi, std::size_t n, double eps) {
    if (!(eps > 0.0)) throw NumericError("psi_delta requires eps > 0");
    const double en = eps * static_cast<double>(n);
    if (en < psi.min_eps_times_n())
        throw NumericError("eps below the psi instance's domain");
    return psi.phi_inverse(std::sqrt(en)) / std::sqrt(eps);
}

double BoundParams::floor() const {
    return std::max(t, 2.0 * std::log(static_cast<double>(n))) /
           static_cast<double>(n);
}

BoundParams BoundParams::for_gamma(std::size_t n, double gamma, double t) {
    if (!(gamma > 0.0 && gamma <= 1.0))
        throw ConfigError("gamma must lie in (0, 1]");
    BoundParams p;
    p.n = n;
    p.t = t;
    p.gamma = gamma;
    p.alpha = 2.0 * gamma / (2.0 - gamma);
    return p;
}

BoundParams BoundParams::for_alpha(std::size_t n, double alpha, double t) {
    if (!(alpha > 0.0 && alpha < 2.0))
        throw ConfigError("alpha must lie in (0, 2)");
    BoundParams p;
    p.n = n;
    p.t = t;
    p.alpha = alpha;
    p.gamma = 2.0 * alpha / (alpha + 2.0);
    return p;
}

double empirical_psi_bound(const MarginProfile& profile, const PsiFunction& psi,
                           const BoundParams& params) {
    const double eps_floor = params.floor();
    if (eps_floor > 1.0)
        throw ConfigError("psi-bound floor exceeds 1; t too large for n");

    const auto feasible = [&](double eps) {
        return profile.cdf(psi_delta(psi, params.n, eps)) <= eps;
    };

    if (feasible(eps_floor)) return eps_floor;
    if (!feasible(1.0)) return 1.0;  // P_n <= 1 always; defensive

    double lo = eps_floor, hi = 1.0;
    while (hi - lo > 1e-10) {
        const double mid = 0.5 * (lo + hi);
        if (feasible(mid))
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

double vc_psi_bound(const MarginProfile& profile, const BoundParams& params) {
    return empirical_psi_bound(profile, VcPsi{}, params);
}

}  // namespace stumpbounds
