#pragma once

#include "cvtrade/channel.hpp"
#include "cvtrade/gaussian.hpp"

namespace cvtrade {

struct FidelityPoint {
    double F = 0.0;  // transmission fidelity
    double G = 0.0;  // estimation fidelity
};

// Average transmission fidelity F = E_a int db |<phi_b|psi_a>|^2 q(b|a),
// in closed form.  Independent of the alphabet spread and of the gain.
double transmission_fidelity(const ProbeSpec& p, double tau);

// Average estimation fidelity G = E_a int db q(b|a) |<psi_b|psi_a>|^2 under
// the rule that record b is reported as the packet g_{b,tau}; the gain kappa
// rescales the record before it is reported, and at the optimal gain b is
// the posterior mean of a.
double estimation_fidelity(const ProbeSpec& p, const SignalEnsemble& ens,
                           const MeasurementSpec& m);

namespace detail {

// Raw closed forms before the [0,1] clamp; the quadrature cross-checks
// compare against these so a clamp can never mask a defect.
double transmission_fidelity_unclamped(const ProbeSpec& p, double tau);
double estimation_fidelity_unclamped(const ProbeSpec& p, const SignalEnsemble& ens,
                                     const MeasurementSpec& m);

}  // namespace detail

}  // namespace cvtrade
