#pragma once

#include <vector>

#include "cvtrade/gaussian.hpp"

namespace cvtrade {

// Gained position readout of the probe after the position-adding coupling:
// outcome b estimates kappa * a.
struct MeasurementSpec {
    double kappa = 1.0;  // > 0
};

MeasurementSpec make_measurement(double kappa);

struct GaussianComponent {
    double weight = 0.0;
    double mean = 0.0;
    double variance = 0.0;
};

struct GaussianMixture1D {
    std::vector<GaussianComponent> components;

    double density(double b) const;
    double total_weight() const;
};

// Exact outcome density q(b|a) of the gained position measurement on the
// probe coupled to signal g_{a,tau}: a Gaussian mixture whose components all
// have mean kappa*a.  Zero-weight branches (theta at 0 or pi/2) are omitted.
GaussianMixture1D outcome_density(double a, const SignalEnsemble& ens,
                                  const ProbeSpec& p, const MeasurementSpec& m);

// Unnormalized post-measurement signal state for outcome b,
//   phi~_b(y) = sum_i branch_i(y),
// a combination of at most two SqrtGaussians.  Its squared norm equals the
// outcome density q(b|a).
struct ConditionalState {
    double outcome = 0.0;
    std::vector<ScaledSqrtGaussian> branches;

    double norm_squared() const;
    // <g_target|phi~_b>, unnormalized.
    double overlap_amplitude_with(const SqrtGaussian& target) const;
};

ConditionalState conditional_state(double b, double a, const SignalEnsemble& ens,
                                   const ProbeSpec& p, const MeasurementSpec& m);

// |<g_{target_amp,tau}|phi_b>|^2 against the normalized conditional state.
double conditional_overlap(double b, double a, double target_amp,
                           const SignalEnsemble& ens, const ProbeSpec& p,
                           const MeasurementSpec& m);

}  // namespace cvtrade
