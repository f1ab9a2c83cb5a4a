#pragma once

#include <functional>
#include <vector>

namespace cvtrade {

struct GaussLegendreRule {
    std::vector<double> nodes;    // on [-1, 1], ascending
    std::vector<double> weights;
};

// n-point rule, computed once per order and cached.  Thread-safe.
const GaussLegendreRule& gauss_legendre(int n);

template <typename Fn>
double integrate_panel(Fn&& f, double lo, double hi, const GaussLegendreRule& rule) {
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    double acc = 0.0;
    for (size_t i = 0; i < rule.nodes.size(); ++i)
        acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return acc * half;
}

// A location/scale pair the integrand varies on; used to grade the mesh.
struct Feature {
    double center = 0.0;
    double scale = 1.0;  // > 0
};

// Panel boundaries over [lo, hi]: around every feature center the spacing
// starts at the feature scale and doubles outward, so integrands mixing very
// different widths are resolved without a dense global mesh.
std::vector<double> graded_breakpoints(double lo, double hi,
                                       const std::vector<Feature>& features);

template <typename Fn>
double integrate_multiscale(Fn&& f, double lo, double hi,
                            const std::vector<Feature>& features,
                            int nodes_per_panel) {
    const GaussLegendreRule& rule = gauss_legendre(nodes_per_panel);
    const std::vector<double> cuts = graded_breakpoints(lo, hi, features);
    double acc = 0.0;
    for (size_t i = 0; i + 1 < cuts.size(); ++i)
        acc += integrate_panel(f, cuts[i], cuts[i + 1], rule);
    return acc;
}

}  // namespace cvtrade
