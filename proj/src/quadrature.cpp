#include "cvtrade/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace cvtrade {

namespace {

GaussLegendreRule compute_rule(int n) {
    GaussLegendreRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    // Newton iteration on P_n from the Chebyshev initial guess.
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.weights[i] = w;
        rule.nodes[n - 1 - i] = x;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

}  // namespace

const GaussLegendreRule& gauss_legendre(int n) {
    if (n < 1) throw std::domain_error("quadrature order must be >= 1");
    static std::map<int, GaussLegendreRule> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, compute_rule(n)).first;
    return it->second;
}

std::vector<double> graded_breakpoints(double lo, double hi,
                                       const std::vector<Feature>& features) {
    if (!(lo < hi)) throw std::domain_error("integration interval is empty");
    std::vector<double> cuts{lo, hi};
    for (const auto& ft : features) {
        if (!(ft.scale > 0.0)) throw std::domain_error("feature scale must be > 0");
        if (ft.center > lo && ft.center < hi) cuts.push_back(ft.center);
        for (double step = 2.0 * ft.scale; step < hi - lo; step *= 4.0) {
            const double left = ft.center - step;
            const double right = ft.center + step;
            if (left > lo && left < hi) cuts.push_back(left);
            if (right > lo && right < hi) cuts.push_back(right);
            if (left <= lo && right >= hi) break;
        }
    }
    std::sort(cuts.begin(), cuts.end());
    // Merge panels much thinner than their neighborhood scale.
    const double eps = 1e-12 * (hi - lo);
    std::vector<double> merged{cuts.front()};
    for (double c : cuts)
        if (c - merged.back() > eps) merged.push_back(c);
    if (merged.back() != hi) merged.back() = hi;
    return merged;
}

}  // namespace cvtrade
