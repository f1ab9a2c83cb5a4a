#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "cvtrade/quadrature.hpp"

using namespace cvtrade;

TEST_CASE("Gauss-Legendre rule basics") {
    const auto& rule = gauss_legendre(32);
    REQUIRE(rule.nodes.size() == 32);
    REQUIRE(rule.weights.size() == 32);

    double weight_sum = 0.0;
    for (size_t i = 0; i < 32; ++i) {
        CHECK(rule.nodes[i] > -1.0);
        CHECK(rule.nodes[i] < 1.0);
        if (i > 0) CHECK(rule.nodes[i] > rule.nodes[i - 1]);
        CHECK(rule.weights[i] > 0.0);
        // symmetry about zero
        CHECK(rule.nodes[i] == doctest::Approx(-rule.nodes[31 - i]).epsilon(1e-14));
        weight_sum += rule.weights[i];
    }
    CHECK(weight_sum == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("rule of order n integrates monomials up to degree 2n-1 exactly") {
    const auto& rule = gauss_legendre(8);
    for (int k = 0; k <= 15; ++k) {
        const double got =
            integrate_panel([k](double x) { return std::pow(x, k); }, -1.0, 1.0, rule);
        const double expect = (k % 2 == 0) ? 2.0 / (k + 1) : 0.0;
        CHECK(got == doctest::Approx(expect).epsilon(1e-13));
    }
    // degree 2n is the first one the rule misses
    const double got16 =
        integrate_panel([](double x) { return std::pow(x, 16); }, -1.0, 1.0, rule);
    CHECK(std::abs(got16 - 2.0 / 17.0) > 1e-10);
}

TEST_CASE("integrate_panel on a shifted interval") {
    const auto& rule = gauss_legendre(32);
    const double got = integrate_panel([](double x) { return std::exp(x); },
                                       0.0, 1.0, rule);
    CHECK(got == doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-14));
}

TEST_CASE("rules are cached per order") {
    const auto* first = &gauss_legendre(40);
    const auto* second = &gauss_legendre(40);
    CHECK(first == second);
}

TEST_CASE("graded breakpoints cover the interval and respect features") {
    const std::vector<Feature> features{{0.0, 1e-4}, {3.0, 1.0}};
    const auto cuts = graded_breakpoints(-8.0, 12.0, features);
    REQUIRE(cuts.size() >= 3);
    CHECK(cuts.front() == -8.0);
    CHECK(cuts.back() == 12.0);
    for (size_t i = 1; i < cuts.size(); ++i) CHECK(cuts[i] > cuts[i - 1]);

    // a cut lands on (or extremely near) each feature center
    for (const auto& ft : features) {
        double best = 1e300;
        for (double c : cuts) best = std::min(best, std::abs(c - ft.center));
        CHECK(best <= 1e-9);
    }
}

TEST_CASE("multiscale integration resolves widths five orders apart") {
    auto normal = [](double x, double mu, double sd) {
        const double z = (x - mu) / sd;
        return std::exp(-0.5 * z * z) / (sd * std::sqrt(2.0 * M_PI));
    };
    auto f = [&](double x) {
        return normal(x, 0.0, 1e-4) + normal(x, 3.0, 1.0);
    };
    const double got = integrate_multiscale(
        f, -8.0, 12.0, {{0.0, 1e-4}, {3.0, 1.0}}, 32);
    CHECK(got == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("multiscale integration reproduces Gaussian moments") {
    const double mu = 0.7, sd = 0.3;
    auto f = [&](double x) {
        const double z = (x - mu) / sd;
        return x * x * std::exp(-0.5 * z * z) / (sd * std::sqrt(2.0 * M_PI));
    };
    const double got =
        integrate_multiscale(f, mu - 10 * sd, mu + 10 * sd, {{mu, sd}}, 32);
    CHECK(got == doctest::Approx(mu * mu + sd * sd).epsilon(1e-12));
}
