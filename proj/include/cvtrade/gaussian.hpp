#pragma once

#include <cmath>

namespace cvtrade {

// Real square-root-Gaussian wavepacket
//
//   g_{m,w}(x) = (2 pi w^2)^(-1/4) exp(-(x - m)^2 / (4 w^2))
//
// normalized so that |g|^2 is a probability density with standard
// deviation w (not 2w; the 4 in the exponent is deliberate).
struct SqrtGaussian {
    double mean = 0.0;
    double width = 1.0;  // > 0

    double amplitude(double x) const {
        const double d = x - mean;
        return std::pow(2.0 * M_PI * width * width, -0.25) *
               std::exp(-d * d / (4.0 * width * width));
    }
};

// coeff * g_{mean,width}; closed under pointwise products of SqrtGaussians.
struct ScaledSqrtGaussian {
    double coeff = 0.0;
    SqrtGaussian shape;

    double amplitude(double x) const { return coeff * shape.amplitude(x); }
};

// Gaussian alphabet of signal packets: amplitude a is drawn from
// N(0, delta^2), the transmitted state is g_{a,tau}.
struct SignalEnsemble {
    double tau = M_SQRT1_2;  // packet width, > 0
    double delta = 1.0;      // alphabet spread, >= 0
};

SignalEnsemble make_signal_ensemble(double tau, double delta);

// Two-branch probe  cos(theta) g_{0,sigma} + gamma sin(theta) g_{0,1/(2sigma)}
// with gamma chosen so the state is normalized for every theta in [0, pi/2].
//
// beta^2 = sigma^2 + 1/(4 sigma^2) >= 1, and <g_sigma|g_{1/(2sigma)}> = 1/beta.
struct ProbeSpec {
    double theta = 0.0;
    double sigma = M_SQRT1_2;
    double beta = 1.0;   // derived
    double gamma = 0.0;  // derived

    // cos/sin of theta with values snapped to exact 0 at the interval ends,
    // so the degenerate single-branch probes are represented exactly.
    double cos_theta = 1.0;
    double sin_theta = 0.0;

    SqrtGaussian localized() const { return {0.0, sigma}; }
    SqrtGaussian delocalized() const { return {0.0, 1.0 / (2.0 * sigma)}; }
    double coeff_localized() const { return cos_theta; }
    double coeff_delocalized() const { return gamma * sin_theta; }
};

ProbeSpec make_probe(double theta, double sigma);

struct EnergyReport {
    double signal_mean_energy = 0.0;
    double probe_energy = 0.0;
};

// <g_{m2,w2}|g_{m1,w1}>, real and positive.
double overlap_amplitude(const SqrtGaussian& g1, const SqrtGaussian& g2);

// |<psi_{b,tau2}|psi_{a,tau1}>|^2
double signal_overlap(double a, double tau1, double b, double tau2);

// Pointwise product g_{m1,w1}(x) g_{m2,w2}(x) = coeff * g_{mu,W}(x).
ScaledSqrtGaussian product(const SqrtGaussian& g1, const SqrtGaussian& g2);

// <N> = (<X^2> + <P^2>)/2 for a single packet (vacuum term included).
double mean_energy(const SqrtGaussian& g);

// <g2|N|g1> for two zero-mean packets.
double cross_energy(const SqrtGaussian& g1, const SqrtGaussian& g2);

double signal_energy(double a, double tau);
double mean_signal_energy(const SignalEnsemble& ens);

double probe_energy(const ProbeSpec& p);

// Argmin over theta of probe_energy at fixed sigma, and its value.
double min_energy_theta(double sigma);
double min_probe_energy(double sigma);

// Squeezing parameter r with sinh^2 r = (tau^2 + 1/(4 tau^2))/2, the
// single-mode squeezing that prepares a packet of width tau.
double squeezing_for_width(double tau);

EnergyReport energy_report(const SignalEnsemble& ens, const ProbeSpec& p);

}  // namespace cvtrade
