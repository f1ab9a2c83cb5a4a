#pragma once

#include <functional>

#include "cvtrade/quadrature.hpp"

namespace testsupport {

// Brute-force reference integral: uniform composite Gauss-Legendre with no
// grading, so checks against it do not inherit the library's meshing logic.
inline double integrate_dense(const std::function<double(double)>& f,
                              double lo, double hi, int panels = 200,
                              int nodes = 16) {
    const auto& rule = cvtrade::gauss_legendre(nodes);
    double acc = 0.0;
    for (int i = 0; i < panels; ++i) {
        const double a = lo + (hi - lo) * i / panels;
        const double b = lo + (hi - lo) * (i + 1) / panels;
        acc += cvtrade::integrate_panel(f, a, b, rule);
    }
    return acc;
}

// Central-difference derivative for kinetic-energy cross-checks.
inline double derivative(const std::function<double(double)>& f, double x,
                         double h = 1e-5) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

}  // namespace testsupport
