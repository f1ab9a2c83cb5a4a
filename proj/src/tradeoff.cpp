#include "cvtrade/tradeoff.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cvtrade {

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw std::domain_error(msg);
}

constexpr double kDomainSlack = 1e-12;

double checked_unit_interval(double v, const char* what) {
    if (v < -1e-9 || v > 1.0 + 1e-9) throw std::domain_error(what);
    return std::clamp(v, 0.0, 1.0);
}

}  // namespace

WidthRatios make_width_ratios(double y, double z) {
    require(std::isfinite(y) && y >= 0.0, "width ratio y must be >= 0");
    require(std::isfinite(z) && z > 0.0, "width ratio z must be > 0");
    return {y, z};
}

double kappa_opt(ProbeConfig cfg, const SignalEnsemble& ens,
                 std::optional<double> sigma) {
    const double d2 = ens.delta * ens.delta;
    const double t2 = ens.tau * ens.tau;
    switch (cfg) {
        case ProbeConfig::A:
            return d2 / (d2 + t2);
        case ProbeConfig::B: {
            require(sigma.has_value(), "configuration B needs the probe width");
            require(*sigma > 0.0, "probe width sigma must be > 0");
            return d2 / (d2 + t2 + *sigma * *sigma);
        }
        case ProbeConfig::C:
            return 2.0 * d2 / (1.0 + 2.0 * d2 + 2.0 * t2);
    }
    throw std::logic_error("unreachable");
}

FidelityPoint config_A(double theta, const WidthRatios& r) {
    require(theta >= 0.0 && theta <= M_PI_2, "theta must lie in [0, pi/2]");
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    FidelityPoint pt;
    pt.F = s * s;
    pt.G = c * c * std::sqrt((1.0 + r.y) / (1.0 + 1.5 * r.y));
    return pt;
}

double curve_A(double G, double y) {
    require(std::isfinite(y) && y >= 0.0, "width ratio y must be >= 0");
    const double g_max = std::sqrt((1.0 + y) / (1.0 + 1.5 * y));
    require(G >= -kDomainSlack && G <= g_max + kDomainSlack,
            "G outside the configuration-A domain [0, sqrt((1+y)/(1+1.5y))]");
    return checked_unit_interval(1.0 - G / g_max, "curve_A out of range");
}

FidelityPoint config_B(const WidthRatios& r) {
    FidelityPoint pt;
    pt.F = std::sqrt(2.0 * r.z / (1.0 + 2.0 * r.z));
    pt.G = std::sqrt((1.0 + r.z + r.y) /
                     (1.0 + r.z + 0.5 * r.y * (3.0 + r.z)));
    return pt;
}

double curve_B_G_min(double y) {
    return std::sqrt(2.0 / (2.0 + y));
}

double curve_B_G_max(double y) {
    return std::sqrt((1.0 + y) / (1.0 + 1.5 * y));
}

double curve_B(double G, double y) {
    require(std::isfinite(y) && y > 0.0, "configuration B trade-off needs y > 0");
    const double g = G * G;
    const double lo = 2.0 / (2.0 + y);
    const double hi = (1.0 + y) / (1.0 + 1.5 * y);
    require(g >= lo - kDomainSlack && g <= hi + kDomainSlack,
            "G outside the configuration-B domain");
    // Numerator and denominator are both <= 0 on the domain.
    const double num = g * (4.0 + 6.0 * y) - 4.0 * (1.0 + y);
    const double den = g * (2.0 + 5.0 * y) - 4.0 * (0.5 + y);
    return std::sqrt(checked_unit_interval(num / den, "curve_B out of range"));
}

namespace {

// Shared radicand of both configuration-C trade-off variants,
//   R = (1-g)^2 + 2 delta^2 (1-g)(2-g) + delta^4 (2-3g)^2   with g = G^2,
// an exact refactoring of the expanded polynomial in g that avoids the
// g ~ 1 cancellation.
double curve_C_radicand(double g, double d2) {
    const double omg = 1.0 - g;
    const double two3 = 2.0 - 3.0 * g;
    return omg * omg + 2.0 * d2 * omg * (2.0 - g) + d2 * d2 * two3 * two3;
}

}  // namespace

FidelityPoint config_C(double tau, double delta, ClosedForm form) {
    require(std::isfinite(tau) && tau > 0.0, "signal width tau must be > 0");
    require(std::isfinite(delta) && delta >= 0.0, "alphabet spread delta must be >= 0");
    const double t2 = tau * tau;
    const double d2 = delta * delta;
    FidelityPoint pt;
    pt.F = 1.0 / std::sqrt(1.0 + t2);
    const double num = 2.0 * t2 * (1.0 + 2.0 * d2 + 2.0 * t2);
    const double den = form == ClosedForm::corrected
                           ? 4.0 * t2 * t2 + d2 + 2.0 * t2 * (1.0 + 3.0 * d2)
                           : 4.0 * t2 * t2 + d2 + t2 * (1.0 + 3.0 * d2);
    pt.G = std::sqrt(num / den);
    return pt;
}

double curve_C(double G, double delta, ClosedForm form) {
    require(std::isfinite(delta) && delta >= 0.0, "alphabet spread delta must be >= 0");
    const double g = G * G;
    require(g >= -kDomainSlack && g <= 1.0 + kDomainSlack,
            "G outside the configuration-C domain [0, 1]");
    const double d2 = delta * delta;

    if (form == ClosedForm::printed) {
        // Verbatim variant, kept for audit; disagrees with the quadrature
        // oracle (see discrepancy_report) and can leave [0, 1].
        const double num = 3.0 - 2.0 * d2 + 3.0 * g * (d2 - 1.0) -
                           std::sqrt(curve_C_radicand(g, d2));
        const double den = 2.0 - 4.0 * d2 - g * (5.0 * d2 - 2.0);
        return std::sqrt(num / den);  // NaN when the printed ratio is negative
    }

    // Corrected variant, rationalized:  F^2 = 4(1-g) / (A + sqrt(R)) with
    // A = 3(1-g) - delta^2 (2-3g).  Equivalent to (A - sqrt(R)) over the
    // printed-style denominator but exact at g = 1 and stable for large
    // delta, where the direct difference of radicals loses every digit.
    const double gc = std::min(g, 1.0);
    const double A = 3.0 * (1.0 - gc) - d2 * (2.0 - 3.0 * gc);
    const double den = A + std::sqrt(curve_C_radicand(gc, d2));
    // den = 0 only at g = 1, delta = 0, where the family degenerates to
    // F = 1 for every tau and the optimum is the tau -> 0 endpoint.
    if (den == 0.0) return 1.0;
    const double F2 = 4.0 * (1.0 - gc) / den;
    return std::sqrt(checked_unit_interval(F2, "curve_C out of range"));
}

double cv_bound(double G) {
    const double g = G * G;
    require(G >= -kDomainSlack && g <= 2.0 / 3.0 + kDomainSlack,
            "G outside the coherent-alphabet bound domain [0, sqrt(2/3)]");
    const double gc = std::min(g, 2.0 / 3.0);
    return std::sqrt((4.0 - 6.0 * gc) / (4.0 - 5.0 * gc));
}

double qudit_bound(double G, int d) {
    require(d >= 2, "alphabet dimension d must be >= 2");
    const double lo = 1.0 / (d + 1.0);
    const double hi = 2.0 / (d + 1.0);
    require(G >= lo - kDomainSlack && G <= hi + kDomainSlack,
            "G outside the qudit bound domain [1/(d+1), 2/(d+1)]");
    const double gl = std::clamp(G, lo, hi);
    const double root = std::sqrt(gl - lo) + std::sqrt((d - 1.0) * (hi - gl));
    return checked_unit_interval(lo + root * root, "qudit_bound out of range");
}

namespace {

std::vector<double> uniform_grid(double lo, double hi, int n) {
    require(n >= 2, "a curve needs at least 2 samples");
    std::vector<double> g(n);
    for (int i = 0; i < n; ++i) g[i] = lo + (hi - lo) * i / (n - 1.0);
    g.front() = lo;
    g.back() = hi;
    return g;
}

void validate_curve(const TradeoffCurve& c) {
    for (size_t i = 0; i < c.samples.size(); ++i) {
        const auto& s = c.samples[i];
        require(s.F >= 0.0 && s.F <= 1.0 && s.G >= 0.0 && s.G <= 1.0,
                "curve sample left the unit square");
        if (i > 0)
            require(s.sweep_value != c.samples[i - 1].sweep_value,
                    "curve sweep variable must be strictly monotone");
    }
}

}  // namespace

TradeoffCurve sample_curve_A(double y, int n) {
    TradeoffCurve curve{"A", y, {}};
    // Swept in theta from pi/2 down to 0 so G increases; the endpoints land
    // exactly on the (0, 1) and (G_max, 0) intercepts.
    for (double theta : uniform_grid(0.0, M_PI_2, n)) {
        const double t = M_PI_2 - theta;
        const FidelityPoint pt = config_A(t, {y, 1.0});
        curve.samples.push_back({t, pt.G, pt.F});
    }
    validate_curve(curve);
    return curve;
}

TradeoffCurve sample_curve_B(double y, int n) {
    require(y > 0.0, "configuration B trade-off needs y > 0");
    TradeoffCurve curve{"B", y, {}};
    for (double G : uniform_grid(curve_B_G_min(y), curve_B_G_max(y), n))
        curve.samples.push_back({G, G, curve_B(G, y)});
    validate_curve(curve);
    return curve;
}

TradeoffCurve sample_curve_C(double delta, int n, ClosedForm form) {
    TradeoffCurve curve{"C", delta, {}};
    for (double G : uniform_grid(0.0, 1.0, n))
        curve.samples.push_back({G, G, curve_C(G, delta, form)});
    if (form == ClosedForm::corrected) validate_curve(curve);
    return curve;
}

TradeoffCurve sample_cv_bound(int n) {
    TradeoffCurve curve{"cv-bound", 0.0, {}};
    for (double G : uniform_grid(0.0, std::sqrt(2.0 / 3.0), n))
        curve.samples.push_back({G, G, cv_bound(G)});
    validate_curve(curve);
    return curve;
}

TradeoffCurve sample_qudit_bound(int d, int n) {
    require(d >= 2, "alphabet dimension d must be >= 2");
    TradeoffCurve curve{"qudit", static_cast<double>(d), {}};
    for (double G : uniform_grid(1.0 / (d + 1.0), 2.0 / (d + 1.0), n))
        curve.samples.push_back({G, G, qudit_bound(G, d)});
    validate_curve(curve);
    return curve;
}

std::vector<CompareRow> compare_B_C(double delta, std::span<const double> G_grid) {
    require(std::isfinite(delta) && delta > 0.0, "comparison needs delta > 0");
    const double y = 2.0 * delta * delta;  // tau^2 = 1/2
    const double lo = curve_B_G_min(y);
    const double hi = curve_B_G_max(y);
    std::vector<CompareRow> rows;
    for (double G : G_grid) {
        if (G < lo || G > hi || G > 1.0) continue;
        rows.push_back({G, curve_B(G, y), curve_C(G, delta)});
    }
    return rows;
}

std::vector<double> common_G_grid_B_C(double delta, int n) {
    require(std::isfinite(delta) && delta > 0.0, "comparison needs delta > 0");
    const double y = 2.0 * delta * delta;
    return uniform_grid(curve_B_G_min(y), std::min(curve_B_G_max(y), 1.0), n);
}

}  // namespace cvtrade
