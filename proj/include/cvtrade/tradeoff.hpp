#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cvtrade/fidelities.hpp"
#include "cvtrade/gaussian.hpp"

namespace cvtrade {

// Width ratios fixing the named probe configurations:
//   y = delta^2 / tau^2,   z = sigma^2 / tau^2.
struct WidthRatios {
    double y = 1.0;  // >= 0
    double z = 1.0;  // > 0
};

WidthRatios make_width_ratios(double y, double z);

enum class ProbeConfig { A, B, C };

// Closed-form variant selector for configuration C.  "printed" keeps the
// misprinted formulas that circulate (estimation fidelity denominator
// tau^2(1+3 delta^2) instead of 2 tau^2(1+3 delta^2), and a flipped sign on
// the G^2(5 delta^2 - 2) term of the trade-off denominator) so the
// discrepancy report can adjudicate them against the quadrature oracle; all
// defaults use "corrected".
enum class ClosedForm { corrected, printed };

// Gain maximizing the estimation fidelity for the given configuration.
// Configuration B needs the probe width; A and C do not.
double kappa_opt(ProbeConfig cfg, const SignalEnsemble& ens,
                 std::optional<double> sigma = std::nullopt);

// Configuration A: point-like probe, theta sweeps the trade-off.
FidelityPoint config_A(double theta, const WidthRatios& r);
double curve_A(double G, double y);

// Configuration B: theta = 0, the probe width sweeps the trade-off.
FidelityPoint config_B(const WidthRatios& r);
double curve_B(double G, double y);
double curve_B_G_min(double y);
double curve_B_G_max(double y);

// Configuration C: minimum-energy probe sigma^2 = 1/2, the signal width
// sweeps the trade-off.
FidelityPoint config_C(double tau, double delta,
                       ClosedForm form = ClosedForm::corrected);
double curve_C(double G, double delta, ClosedForm form = ClosedForm::corrected);

// Optimal trade-off for Gaussian-distributed coherent input, G in [0, sqrt(2/3)].
double cv_bound(double G);

// Optimal trade-off for uniform d-dimensional alphabets, G in [1/(d+1), 2/(d+1)].
double qudit_bound(double G, int d);

struct CurveSample {
    double sweep_value = 0.0;
    double G = 0.0;
    double F = 0.0;
};

struct TradeoffCurve {
    std::string config;      // "A", "B", "C", "cv-bound", "qudit"
    double parameter = 0.0;  // y, delta, or d; 0 for the cv bound
    std::vector<CurveSample> samples;
};

// Curves sampled on 201 points by default, ordered by increasing G with the
// endpoints at the analytic intercepts.
TradeoffCurve sample_curve_A(double y, int n = 201);
TradeoffCurve sample_curve_B(double y, int n = 201);
TradeoffCurve sample_curve_C(double delta, int n = 201,
                             ClosedForm form = ClosedForm::corrected);
TradeoffCurve sample_cv_bound(int n = 201);
TradeoffCurve sample_qudit_bound(int d, int n = 201);

struct CompareRow {
    double G = 0.0;
    double F_B = 0.0;
    double F_C = 0.0;
};

// F_B(G, 2 delta^2) next to curve_C(G, delta): configuration B at the
// minimum-energy signal width tau^2 = 1/2 against configuration C.  Grid
// values outside the common G domain are skipped.
std::vector<CompareRow> compare_B_C(double delta, std::span<const double> G_grid);

// Uniform n-point grid on the common G domain of that comparison.
std::vector<double> common_G_grid_B_C(double delta, int n);

}  // namespace cvtrade
