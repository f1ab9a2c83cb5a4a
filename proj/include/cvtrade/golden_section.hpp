#pragma once

#include <functional>

namespace cvtrade {

struct ScalarOptimum {
    double x = 0.0;
    double value = 0.0;
};

// Golden-section search for the minimum of a unimodal function on [lo, hi];
// stops when the bracket is narrower than xtol.
ScalarOptimum golden_section_min(const std::function<double(double)>& f,
                                 double lo, double hi, double xtol,
                                 int max_iterations = 200);

ScalarOptimum golden_section_max(const std::function<double(double)>& f,
                                 double lo, double hi, double xtol,
                                 int max_iterations = 200);

}  // namespace cvtrade
