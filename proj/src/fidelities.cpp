#include "cvtrade/fidelities.hpp"

#include <algorithm>
#include <stdexcept>

namespace cvtrade {

namespace detail {

// Both averages reduce to three terms, one per pairing of probe branches.
// The naive textbook grouping subtracts nearly equal radicals near theta=0;
// here every term is written through
//
//   S = sqrt(4 sigma^2 cos^2 + (1+4 sigma^4) sin^2),   D = S - 2 sigma cos
//     = (1+4 sigma^4) sin^2 / (S + 2 sigma cos),
//
// which keeps each term nonnegative and cancellation-free on all of
// [0, pi/2].

namespace {

struct Terms {
    double c;   // cos theta
    double q4;  // 1 + 4 sigma^4
    double D;
};

Terms branch_terms(const ProbeSpec& p) {
    const double c = p.cos_theta;
    const double s = p.sin_theta;
    const double s2 = p.sigma * p.sigma;
    const double q4 = 1.0 + 4.0 * s2 * s2;
    const double S = std::sqrt(4.0 * s2 * c * c + q4 * s * s);
    const double D = (S + 2.0 * p.sigma * c) > 0.0
                         ? q4 * s * s / (S + 2.0 * p.sigma * c)
                         : 0.0;
    return {c, q4, D};
}

}  // namespace

double transmission_fidelity_unclamped(const ProbeSpec& p, double tau) {
    if (!(std::isfinite(tau) && tau > 0.0))
        throw std::domain_error("signal width tau must be > 0");
    const auto [c, q4, D] = branch_terms(p);
    const double sg = p.sigma;
    const double t2 = tau * tau;

    const double term1 = M_SQRT2 * sg * c * c / std::sqrt(2.0 * sg * sg + t2);
    const double term2 = 4.0 * sg * c * D / std::sqrt(q4 * (q4 + 4.0 * sg * sg * t2));
    const double term3 = D * D / (q4 * std::sqrt(1.0 + 2.0 * sg * sg * t2));
    return term1 + term2 + term3;
}

double estimation_fidelity_unclamped(const ProbeSpec& p, const SignalEnsemble& ens,
                                     const MeasurementSpec& m) {
    const auto [c, q4, D] = branch_terms(p);
    const double sg = p.sigma;
    const double s2 = sg * sg;
    const double t2 = ens.tau * ens.tau;
    const double d2 = ens.delta * ens.delta;
    const double k = m.kappa;
    const double km1 = k - 1.0;

    const double den1 = d2 * km1 * km1 + 2.0 * t2 + k * k * (s2 + t2);
    const double den2 = q4 * (d2 * km1 * km1 + 2.0 * t2) +
                        k * k * (2.0 * s2 + t2 + 4.0 * s2 * s2 * t2);
    // 4 sigma^2 (d2 (k-1)^2 + 2 t2 + k^2 (t2 + 1/(4 sigma^2))), grouped to
    // stay manifestly positive for all gains.
    const double den3 =
        4.0 * s2 * (d2 * km1 * km1 + 2.0 * t2 + k * k * (t2 + 1.0 / (4.0 * s2)));

    return M_SQRT2 * ens.tau *
           (c * c / std::sqrt(den1) + 4.0 * sg * c * D / std::sqrt(q4 * den2) +
            2.0 * sg * D * D / (q4 * std::sqrt(den3)));
}

}  // namespace detail

double transmission_fidelity(const ProbeSpec& p, double tau) {
    return std::clamp(detail::transmission_fidelity_unclamped(p, tau), 0.0, 1.0);
}

double estimation_fidelity(const ProbeSpec& p, const SignalEnsemble& ens,
                           const MeasurementSpec& m) {
    return std::clamp(detail::estimation_fidelity_unclamped(p, ens, m), 0.0, 1.0);
}

}  // namespace cvtrade
