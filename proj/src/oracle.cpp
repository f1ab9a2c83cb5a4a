#include "cvtrade/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cvtrade/quadrature.hpp"
#include "cvtrade/tradeoff.hpp"

namespace cvtrade {

namespace {

void validate(const QuadratureConfig& q) {
    if (q.abscissa_count < 32)
        throw std::domain_error("abscissa_count must be >= 32");
    if (!(q.domain_halfwidth_sigmas >= 6.0))
        throw std::domain_error("domain_halfwidth_sigmas must be >= 6");
    if (!(q.target_abs_tol > 0.0))
        throw std::domain_error("target_abs_tol must be > 0");
}

double clamp_unit(double v) {
    // Quadrature round-off only; anything larger is left visible.
    if (v > 1.0 && v < 1.0 + 1e-12) return 1.0;
    if (v < 0.0 && v > -1e-12) return 0.0;
    return v;
}

struct OutcomeDomain {
    double lo = 0.0, hi = 0.0;
    std::vector<Feature> features;
};

OutcomeDomain outcome_domain(const GaussianMixture1D& mix, double halfwidth) {
    OutcomeDomain d;
    d.lo = INFINITY;
    d.hi = -INFINITY;
    for (const auto& c : mix.components) {
        const double s = std::sqrt(c.variance);
        d.features.push_back({c.mean, s});
        d.lo = std::min(d.lo, c.mean - halfwidth * s);
        d.hi = std::max(d.hi, c.mean + halfwidth * s);
    }
    return d;
}

double transmitted_overlap_integral(const ProbeSpec& p, double tau, double a,
                                    const MeasurementSpec& m, double halfwidth,
                                    int nodes) {
    const SignalEnsemble ens{tau, 0.0};
    const GaussianMixture1D mix = outcome_density(a, ens, p, m);
    const OutcomeDomain d = outcome_domain(mix, halfwidth);
    const SqrtGaussian target{a, tau};
    auto integrand = [&](double b) {
        const double amp =
            conditional_state(b, a, ens, p, m).overlap_amplitude_with(target);
        return amp * amp;
    };
    return integrate_multiscale(integrand, d.lo, d.hi, d.features, nodes);
}

double estimation_inner_integral(const ProbeSpec& p, const SignalEnsemble& ens,
                                 const MeasurementSpec& m, double a,
                                 double halfwidth, int nodes) {
    const GaussianMixture1D mix = outcome_density(a, ens, p, m);
    OutcomeDomain d = outcome_domain(mix, halfwidth);
    // The inferred-packet overlap factor is centered on the amplitude itself.
    const double overlap_scale = M_SQRT2 * ens.tau;
    d.features.push_back({a, overlap_scale});
    d.lo = std::min(d.lo, a - halfwidth * overlap_scale);
    d.hi = std::max(d.hi, a + halfwidth * overlap_scale);
    auto integrand = [&](double b) {
        return mix.density(b) * signal_overlap(a, ens.tau, b, ens.tau);
    };
    return integrate_multiscale(integrand, d.lo, d.hi, d.features, nodes);
}

double estimation_integral(const ProbeSpec& p, const SignalEnsemble& ens,
                           const MeasurementSpec& m, double halfwidth, int nodes) {
    if (ens.delta == 0.0)
        return estimation_inner_integral(p, ens, m, 0.0, halfwidth, nodes);
    const double dl = ens.delta;
    const std::vector<Feature> features{{0.0, dl}, {0.0, std::min(dl, ens.tau)}};
    auto integrand = [&](double a) {
        const double prior =
            std::exp(-a * a / (2.0 * dl * dl)) / std::sqrt(2.0 * M_PI * dl * dl);
        return prior * estimation_inner_integral(p, ens, m, a, halfwidth, nodes);
    };
    return integrate_multiscale(integrand, -halfwidth * dl, halfwidth * dl,
                                features, nodes);
}

double converged(double coarse, double fine, double tol, const char* what) {
    if (!(std::abs(coarse - fine) <= tol))
        throw OracleConvergenceError(std::string(what) +
                                     ": refinements differ beyond target_abs_tol");
    return fine;
}

}  // namespace

double oracle_F(const ProbeSpec& p, double tau, const QuadratureConfig& q,
                double amplitude, const MeasurementSpec& m) {
    validate(q);
    if (!(std::isfinite(tau) && tau > 0.0))
        throw std::domain_error("signal width tau must be > 0");
    const double h = q.domain_halfwidth_sigmas;
    const double coarse =
        transmitted_overlap_integral(p, tau, amplitude, m, h, q.abscissa_count);
    const double fine =
        transmitted_overlap_integral(p, tau, amplitude, m, h, 2 * q.abscissa_count);
    return clamp_unit(converged(coarse, fine, q.target_abs_tol, "oracle_F"));
}

double oracle_G(const ProbeSpec& p, const SignalEnsemble& ens,
                const MeasurementSpec& m, const QuadratureConfig& q) {
    validate(q);
    const double h = q.domain_halfwidth_sigmas;
    const double coarse = estimation_integral(p, ens, m, h, q.abscissa_count);
    const double fine = estimation_integral(p, ens, m, h, 2 * q.abscissa_count);
    return clamp_unit(converged(coarse, fine, q.target_abs_tol, "oracle_G"));
}

FidelityGrid FidelityGrid::standard() {
    return {{0.0, M_PI / 6.0, M_PI / 3.0, M_PI_2},
            {0.2, M_SQRT1_2, 1.0, 2.0},
            {0.4, M_SQRT1_2, 2.0},
            {0.5, M_SQRT1_2, 2.0},
            {0.5, 1.0, 1.5}};
}

bool DiscrepancyReport::passed() const {
    return std::none_of(rows.begin(), rows.end(), [](const DiscrepancyRow& r) {
        return r.status == RowStatus::fail;
    });
}

double DiscrepancyReport::max_gap(const std::string& quantity_prefix) const {
    double g = 0.0;
    for (const auto& r : rows) {
        if (r.status == RowStatus::known) continue;
        if (r.quantity.rfind(quantity_prefix, 0) != 0) continue;
        if (std::isnan(r.gap)) continue;
        g = std::max(g, r.gap);
    }
    return g;
}

const char* to_string(RowStatus s) {
    switch (s) {
        case RowStatus::ok: return "OK";
        case RowStatus::known: return "KNOWN";
        case RowStatus::fail: return "FAIL";
    }
    return "?";
}

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

DiscrepancyRow make_row(std::string quantity, double theta, double sigma,
                        double tau, double delta, double kappa, double analytic,
                        double oracle, double tol, bool expected_discrepancy) {
    DiscrepancyRow row{std::move(quantity), theta, sigma, tau,
                       delta, kappa, analytic, oracle,
                       std::abs(analytic - oracle), tol, RowStatus::ok};
    if (!(row.gap <= tol))
        row.status = expected_discrepancy ? RowStatus::known : RowStatus::fail;
    return row;
}

}  // namespace

DiscrepancyReport discrepancy_report(const FidelityGrid& grid,
                                     const QuadratureConfig& q, double tolerance) {
    DiscrepancyReport report;

    for (double theta : grid.thetas) {
        for (double sigma : grid.sigmas) {
            const ProbeSpec p = make_probe(theta, sigma);
            for (double tau : grid.taus) {
                const double analytic = detail::transmission_fidelity_unclamped(p, tau);
                const double oracle = oracle_F(p, tau, q);
                report.rows.push_back(make_row("avF", theta, sigma, tau, kNaN, kNaN,
                                               analytic, oracle, tolerance, false));
                for (double delta : grid.deltas) {
                    const SignalEnsemble ens = make_signal_ensemble(tau, delta);
                    for (double kappa : grid.kappas) {
                        const MeasurementSpec m = make_measurement(kappa);
                        const double ag =
                            detail::estimation_fidelity_unclamped(p, ens, m);
                        const double og = oracle_G(p, ens, m, q);
                        report.rows.push_back(make_row("avG", theta, sigma, tau,
                                                       delta, kappa, ag, og,
                                                       tolerance, false));
                    }
                }
            }
        }
    }

    // Adjudication of the two configuration-C closed-form variants against
    // the oracle at the optimal gain.  The printed variant is expected to
    // disagree; it is kept visible and flagged "KNOWN".
    const ProbeSpec probe_c = make_probe(0.0, M_SQRT1_2);
    for (double tau : {M_SQRT1_2, 1.0}) {
        const double delta = 1.0;
        const SignalEnsemble ens = make_signal_ensemble(tau, delta);
        const MeasurementSpec m =
            make_measurement(kappa_opt(ProbeConfig::C, ens));
        const double og = oracle_G(probe_c, ens, m, q);
        const double of = oracle_F(probe_c, tau, q);
        report.rows.push_back(make_row(
            "configC_F", 0.0, M_SQRT1_2, tau, delta, m.kappa,
            config_C(tau, delta).F, of, tolerance, false));
        report.rows.push_back(make_row(
            "configC_G_corrected", 0.0, M_SQRT1_2, tau, delta, m.kappa,
            config_C(tau, delta).G, og, tolerance, false));
        report.rows.push_back(make_row(
            "configC_G_printed", 0.0, M_SQRT1_2, tau, delta, m.kappa,
            config_C(tau, delta, ClosedForm::printed).G, og, tolerance, true));
    }

    // Trade-off curve variants evaluated at the parametric point (tau = 1,
    // delta = 1): the curve must return the parametric transmission fidelity.
    {
        const FidelityPoint pt = config_C(1.0, 1.0);
        report.rows.push_back(make_row("curveC_corrected", kNaN, M_SQRT1_2, 1.0,
                                       1.0, kNaN, curve_C(pt.G, 1.0), pt.F,
                                       tolerance, false));
        report.rows.push_back(make_row(
            "curveC_printed", kNaN, M_SQRT1_2, 1.0, 1.0, kNaN,
            curve_C(pt.G, 1.0, ClosedForm::printed), pt.F, tolerance, true));
    }

    // Configuration B closed forms at the optimal gain.
    {
        const double tau = 1.0, delta = 1.0, sigma = M_SQRT1_2;
        const SignalEnsemble ens = make_signal_ensemble(tau, delta);
        const MeasurementSpec m =
            make_measurement(kappa_opt(ProbeConfig::B, ens, sigma));
        const ProbeSpec p = make_probe(0.0, sigma);
        const WidthRatios r{delta * delta / (tau * tau),
                            sigma * sigma / (tau * tau)};
        const FidelityPoint pt = config_B(r);
        report.rows.push_back(make_row("configB_F", 0.0, sigma, tau, delta,
                                       m.kappa, pt.F, oracle_F(p, tau, q),
                                       tolerance, false));
        report.rows.push_back(make_row("configB_G", 0.0, sigma, tau, delta,
                                       m.kappa, pt.G, oracle_G(p, ens, m, q),
                                       tolerance, false));
    }

    // Configuration A through the narrow-probe proxy sigma = 1e-3.  The
    // proxy bias is first order in sigma: ~ sqrt(2) sigma cos^2(theta)/tau
    // for F, and for G an O(sigma) tail from the spread branch plus the
    // interference weight whenever theta > 0.  At interior theta the G bias
    // exceeds the 1e-3 gate by construction, so those rows are flagged
    // "known" like the misprints; the theta = 0 endpoint (tau large enough
    // that F's bias also fits) is where the proxy genuinely converges.
    {
        const double sigma = 1e-3;
        {
            const double tau = 2.0, delta = 2.0;
            const SignalEnsemble ens = make_signal_ensemble(tau, delta);
            const MeasurementSpec m =
                make_measurement(kappa_opt(ProbeConfig::A, ens));
            const WidthRatios r{1.0, sigma * sigma / (tau * tau)};
            const ProbeSpec p = make_probe(0.0, sigma);
            const FidelityPoint pt = config_A(0.0, r);
            report.rows.push_back(make_row("configA_F_proxy", 0.0, sigma, tau,
                                           delta, m.kappa, pt.F,
                                           oracle_F(p, tau, q), 1e-3, false));
            report.rows.push_back(make_row("configA_G_proxy", 0.0, sigma, tau,
                                           delta, m.kappa, pt.G,
                                           oracle_G(p, ens, m, q), 1e-3, false));
        }
        const double tau = 1.0, delta = 1.0;
        const SignalEnsemble ens = make_signal_ensemble(tau, delta);
        const MeasurementSpec m =
            make_measurement(kappa_opt(ProbeConfig::A, ens));
        const WidthRatios r{1.0, sigma * sigma / (tau * tau)};
        for (double theta : {M_PI / 4.0, M_PI / 3.0}) {
            const ProbeSpec p = make_probe(theta, sigma);
            const FidelityPoint pt = config_A(theta, r);
            report.rows.push_back(make_row("configA_F_proxy", theta, sigma, tau,
                                           delta, m.kappa, pt.F,
                                           oracle_F(p, tau, q), 1e-3, false));
            report.rows.push_back(make_row("configA_G_proxy", theta, sigma, tau,
                                           delta, m.kappa, pt.G,
                                           oracle_G(p, ens, m, q), 1e-3, true));
        }
    }

    return report;
}

}  // namespace cvtrade
