#include "cvtrade/golden_section.hpp"

#include <cmath>
#include <stdexcept>

namespace cvtrade {

ScalarOptimum golden_section_min(const std::function<double(double)>& f,
                                 double lo, double hi, double xtol,
                                 int max_iterations) {
    if (!(lo < hi)) throw std::domain_error("search interval is empty");
    if (!(xtol > 0.0)) throw std::domain_error("xtol must be > 0");

    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = f(c), fd = f(d);
    for (int it = 0; it < max_iterations && (b - a) > xtol; ++it) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = f(d);
        }
    }
    const double x = 0.5 * (a + b);
    return {x, f(x)};
}

ScalarOptimum golden_section_max(const std::function<double(double)>& f,
                                 double lo, double hi, double xtol,
                                 int max_iterations) {
    ScalarOptimum r = golden_section_min([&f](double x) { return -f(x); }, lo, hi,
                                         xtol, max_iterations);
    r.value = -r.value;
    return r;
}

}  // namespace cvtrade
