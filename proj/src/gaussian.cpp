#include "cvtrade/gaussian.hpp"

#include <stdexcept>

namespace cvtrade {

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw std::domain_error(msg);
}

}  // namespace

SignalEnsemble make_signal_ensemble(double tau, double delta) {
    require(std::isfinite(tau) && tau > 0.0, "signal width tau must be > 0");
    require(std::isfinite(delta) && delta >= 0.0, "alphabet spread delta must be >= 0");
    return {tau, delta};
}

ProbeSpec make_probe(double theta, double sigma) {
    require(std::isfinite(theta) && theta >= 0.0 && theta <= M_PI_2,
            "probe mixing angle theta must lie in [0, pi/2]");
    require(std::isfinite(sigma) && sigma > 0.0, "probe width sigma must be > 0");

    ProbeSpec p;
    p.theta = theta;
    p.sigma = sigma;
    p.beta = std::sqrt(sigma * sigma + 1.0 / (4.0 * sigma * sigma));

    double c = std::cos(theta);
    if (std::abs(c) < 1e-15) c = 0.0;  // cos(pi/2) rounds to ~6e-17
    const double s = std::sin(theta);
    p.cos_theta = c;
    p.sin_theta = s;

    if (c == 0.0) {
        p.gamma = 1.0;
    } else {
        // gamma = (sqrt(1 + u^2) - 1)/u rewritten as u/(1 + sqrt(1 + u^2)),
        // which is exact at u = 0 and free of cancellation for all u >= 0.
        const double u = p.beta * s / c;
        p.gamma = u / (1.0 + std::sqrt(1.0 + u * u));
    }
    return p;
}

double overlap_amplitude(const SqrtGaussian& g1, const SqrtGaussian& g2) {
    const double s = g1.width * g1.width + g2.width * g2.width;
    const double d = g1.mean - g2.mean;
    return std::sqrt(2.0 * g1.width * g2.width / s) * std::exp(-d * d / (4.0 * s));
}

double signal_overlap(double a, double tau1, double b, double tau2) {
    require(std::isfinite(tau1) && tau1 > 0.0 && std::isfinite(tau2) && tau2 > 0.0,
            "packet widths must be > 0");
    const double amp = overlap_amplitude({a, tau1}, {b, tau2});
    return amp * amp;
}

ScaledSqrtGaussian product(const SqrtGaussian& g1, const SqrtGaussian& g2) {
    const double v1 = g1.width * g1.width;
    const double v2 = g2.width * g2.width;
    const double s = v1 + v2;
    const double d = g1.mean - g2.mean;
    ScaledSqrtGaussian out;
    out.shape.mean = (g1.mean * v2 + g2.mean * v1) / s;
    out.shape.width = std::sqrt(v1 * v2 / s);
    out.coeff = std::pow(2.0 * M_PI, -0.25) * std::pow(s, -0.25) *
                std::exp(-d * d / (4.0 * s));
    return out;
}

double mean_energy(const SqrtGaussian& g) {
    const double v = g.width * g.width;
    return 0.5 * (g.mean * g.mean + v + 1.0 / (4.0 * v));
}

double cross_energy(const SqrtGaussian& g1, const SqrtGaussian& g2) {
    // <X^2> cross-moment is 2 W^2 <g2|g1> with W the product width; the
    // momentum moment is the same expression in the Fourier widths 1/(2w).
    const double v1 = g1.width * g1.width;
    const double v2 = g2.width * g2.width;
    const double s = v1 + v2;
    const double w2 = v1 * v2 / s;
    return overlap_amplitude(g1, g2) * (w2 + 1.0 / (4.0 * s));
}

double signal_energy(double a, double tau) {
    require(std::isfinite(tau) && tau > 0.0, "signal width tau must be > 0");
    return mean_energy({a, tau});
}

double mean_signal_energy(const SignalEnsemble& ens) {
    // E_a[ N(a, tau) ] with a ~ N(0, delta^2).
    const double v = ens.tau * ens.tau;
    return 0.5 * (ens.delta * ens.delta + v + 1.0 / (4.0 * v));
}

double probe_energy(const ProbeSpec& p) {
    const double cl = p.coeff_localized();
    const double cd = p.coeff_delocalized();
    const SqrtGaussian gl = p.localized();
    const SqrtGaussian gd = p.delocalized();
    return cl * cl * mean_energy(gl) + cd * cd * mean_energy(gd) +
           2.0 * cl * cd * cross_energy(gl, gd);
}

double min_energy_theta(double sigma) {
    require(std::isfinite(sigma) && sigma > 0.0, "probe width sigma must be > 0");
    const double b = std::sqrt(sigma * sigma + 1.0 / (4.0 * sigma * sigma));
    const double t2 = 1.0 + 2.0 * (b - std::sqrt(2.0 * b * (1.0 + b))) / (2.0 + b);
    return 2.0 * std::atan(std::sqrt(t2));
}

double min_probe_energy(double sigma) {
    require(std::isfinite(sigma) && sigma > 0.0, "probe width sigma must be > 0");
    const double b = std::sqrt(sigma * sigma + 1.0 / (4.0 * sigma * sigma));
    return (1.0 + b * (b - 1.0) * (b * b + 1.0)) / (2.0 * b * b);
}

double squeezing_for_width(double tau) {
    require(std::isfinite(tau) && tau > 0.0, "packet width tau must be > 0");
    return std::asinh(std::sqrt(0.5 * (tau * tau + 1.0 / (4.0 * tau * tau))));
}

EnergyReport energy_report(const SignalEnsemble& ens, const ProbeSpec& p) {
    return {mean_signal_energy(ens), probe_energy(p)};
}

}  // namespace cvtrade
