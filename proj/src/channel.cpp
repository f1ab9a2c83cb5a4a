#include "cvtrade/channel.hpp"

#include <algorithm>
#include <cfloat>
#include <stdexcept>

namespace cvtrade {

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw std::domain_error(msg);
}

double normal_density(double x, double mean, double variance) {
    const double d = x - mean;
    return std::exp(-d * d / (2.0 * variance)) / std::sqrt(2.0 * M_PI * variance);
}

}  // namespace

MeasurementSpec make_measurement(double kappa) {
    require(std::isfinite(kappa) && kappa > 0.0, "measurement gain kappa must be > 0");
    return {kappa};
}

double GaussianMixture1D::density(double b) const {
    double q = 0.0;
    for (const auto& c : components) q += c.weight * normal_density(b, c.mean, c.variance);
    return q;
}

double GaussianMixture1D::total_weight() const {
    double w = 0.0;
    for (const auto& c : components) w += c.weight;
    return w;
}

GaussianMixture1D outcome_density(double a, const SignalEnsemble& ens,
                                  const ProbeSpec& p, const MeasurementSpec& m) {
    require(std::isfinite(a), "signal amplitude must be finite");
    const double k = m.kappa;
    const double k2 = k * k;
    const double t2 = ens.tau * ens.tau;
    const double s2 = p.sigma * p.sigma;
    const double c = p.cos_theta;
    const double s = p.sin_theta;
    const double g = p.gamma;

    // Branch variances tau^2 + w^2 for probe widths sigma, 1/(2 sigma) and
    // the cross width 1/(sqrt(2) beta); the cross weight is fixed by the
    // probe normalization identity, so the weights sum to one exactly.
    GaussianMixture1D mix;
    const double mean = k * a;
    const double w1 = c * c;
    const double w2 = g * s * g * s;
    const double w3 = 2.0 * g * s * c / p.beta;
    if (w1 > 0.0) mix.components.push_back({w1, mean, k2 * (t2 + s2)});
    if (w2 > 0.0) mix.components.push_back({w2, mean, k2 * (t2 + 1.0 / (4.0 * s2))});
    if (w3 > 0.0) mix.components.push_back({w3, mean, k2 * (t2 + 1.0 / (2.0 * p.beta * p.beta))});
    return mix;
}

double ConditionalState::norm_squared() const {
    double n2 = 0.0;
    for (size_t i = 0; i < branches.size(); ++i) {
        n2 += branches[i].coeff * branches[i].coeff;
        for (size_t j = i + 1; j < branches.size(); ++j) {
            n2 += 2.0 * branches[i].coeff * branches[j].coeff *
                  overlap_amplitude(branches[i].shape, branches[j].shape);
        }
    }
    return n2;
}

double ConditionalState::overlap_amplitude_with(const SqrtGaussian& target) const {
    double amp = 0.0;
    for (const auto& br : branches) amp += br.coeff * overlap_amplitude(br.shape, target);
    return amp;
}

ConditionalState conditional_state(double b, double a, const SignalEnsemble& ens,
                                   const ProbeSpec& p, const MeasurementSpec& m) {
    require(std::isfinite(b) && std::isfinite(a), "outcome and amplitude must be finite");
    const double inferred = b / m.kappa;
    const double root_k = std::sqrt(m.kappa);
    const SqrtGaussian signal{a, ens.tau};

    ConditionalState st;
    st.outcome = b;
    const double cl = p.coeff_localized();
    const double cd = p.coeff_delocalized();
    if (cl > 0.0) {
        ScaledSqrtGaussian br = product(signal, {inferred, p.sigma});
        br.coeff *= cl / root_k;
        st.branches.push_back(br);
    }
    if (cd > 0.0) {
        ScaledSqrtGaussian br = product(signal, {inferred, 1.0 / (2.0 * p.sigma)});
        br.coeff *= cd / root_k;
        st.branches.push_back(br);
    }
    return st;
}

double conditional_overlap(double b, double a, double target_amp,
                           const SignalEnsemble& ens, const ProbeSpec& p,
                           const MeasurementSpec& m) {
    const ConditionalState st = conditional_state(b, a, ens, p, m);
    const double n2 = st.norm_squared();
    require(n2 >= DBL_MIN, "outcome lies too deep in the tails to condition on");
    const double amp = st.overlap_amplitude_with({target_amp, ens.tau});
    return std::clamp(amp * amp / n2, 0.0, 1.0);
}

}  // namespace cvtrade
