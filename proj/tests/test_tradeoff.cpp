#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "cvtrade/tradeoff.hpp"

using namespace cvtrade;

TEST_CASE("width ratio validation") {
    CHECK_THROWS_AS(make_width_ratios(-0.1, 1.0), std::domain_error);
    CHECK_THROWS_AS(make_width_ratios(1.0, 0.0), std::domain_error);
    CHECK(make_width_ratios(0.0, 2.0).y == 0.0);
}

TEST_CASE("optimal gain closed forms") {
    const auto ens = make_signal_ensemble(1.0, 1.0);
    CHECK(kappa_opt(ProbeConfig::A, ens) == doctest::Approx(0.5));
    CHECK(kappa_opt(ProbeConfig::B, ens, M_SQRT1_2) == doctest::Approx(0.4));
    CHECK(kappa_opt(ProbeConfig::C, make_signal_ensemble(M_SQRT1_2, 1.0)) ==
          doctest::Approx(0.5));
    CHECK_THROWS_AS(kappa_opt(ProbeConfig::B, ens), std::domain_error);
}

TEST_CASE("configuration A point and curve") {
    const auto pt = config_A(M_PI_4, make_width_ratios(0.5, 1.0));
    CHECK(pt.F == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(pt.G == doctest::Approx(0.4629100498862757).epsilon(1e-14));

    // the curve returns the parametric transmission fidelity
    for (double y : {0.0, 0.5, 3.0, 7.0})
        for (double theta : {0.0, 0.4, M_PI_4, 1.2, M_PI_2}) {
            const auto p = config_A(theta, make_width_ratios(y, 1.0));
            CHECK(curve_A(p.G, y) == doctest::Approx(p.F).epsilon(1e-12));
        }

    CHECK(curve_A(0.0, 3.0) == doctest::Approx(1.0));
    CHECK(curve_A(std::sqrt(4.0 / 5.5), 3.0) == doctest::Approx(0.0));
    CHECK_THROWS_AS(curve_A(0.99, 3.0), std::domain_error);  // beyond G_max
}

TEST_CASE("configuration B point and curve") {
    const auto pt = config_B(make_width_ratios(2.0, 1.0));
    CHECK(pt.F == doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-14));
    CHECK(pt.G == doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-14));

    for (double y : {0.1, 1.0, 3.0, 7.0})
        for (double z : {0.05, 0.3, 1.0, 4.0, 20.0}) {
            const auto p = config_B(make_width_ratios(y, z));
            CHECK(curve_B(p.G, y) == doctest::Approx(p.F).epsilon(1e-9));
        }

    // domain endpoints: z -> infinity gives G_min, z -> 0 gives G_max
    CHECK(curve_B_G_min(2.0) == doctest::Approx(std::sqrt(0.5)));
    CHECK(curve_B_G_max(1e4) ==
          doctest::Approx(0.8165102).epsilon(1e-6));
    CHECK(std::abs(curve_B_G_max(1e4) - std::sqrt(2.0 / 3.0)) <= 1e-3);
    CHECK_THROWS_AS(curve_B(0.3, 1.0), std::domain_error);
}

TEST_CASE("configuration C point, both closed-form variants") {
    const auto balanced = config_C(M_SQRT1_2, 1.0);
    CHECK(balanced.F == doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-14));
    CHECK(balanced.G == doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-14));

    const auto unit = config_C(1.0, 1.0);
    CHECK(unit.F == doctest::Approx(M_SQRT1_2).epsilon(1e-14));
    CHECK(unit.G == doctest::Approx(0.8770580193070292).epsilon(1e-14));

    // the circulating printed denominator gives exactly 1 here, the value
    // the quadrature oracle rejects
    CHECK(config_C(M_SQRT1_2, 1.0, ClosedForm::printed).G ==
          doctest::Approx(1.0).epsilon(1e-14));

    // a single-symbol alphabet is estimated perfectly
    CHECK(config_C(0.8, 0.0).G == doctest::Approx(1.0));
}

TEST_CASE("configuration C curve matches its parametric points") {
    for (double delta : {0.3, 1.0, 2.0, 5.0})
        for (double tau : {0.3, M_SQRT1_2, 1.0, 2.0}) {
            const auto p = config_C(tau, delta);
            CHECK(curve_C(p.G, delta) == doctest::Approx(p.F).epsilon(1e-9));
        }
    CHECK(curve_C(0.877058, 1.0) == doctest::Approx(0.707107).epsilon(1e-5));
    // degenerate alphabet: no information is extracted, nothing is disturbed
    for (double G : {0.0, 0.3, 0.9, 1.0})
        CHECK(curve_C(G, 0.0) == doctest::Approx(1.0));
    // the printed variant leaves the unit square where the corrected one
    // is well defined
    CHECK(std::isnan(curve_C(0.877058, 1.0, ClosedForm::printed)));
}

TEST_CASE("curves degrade as the alphabet grows") {
    for (double G : {0.2, 0.5, 0.8}) {
        CHECK(curve_A(G, 0.5) > curve_A(G, 3.0));
        CHECK(curve_A(G, 3.0) > curve_A(G, 7.0));
        CHECK(curve_C(G, 0.2) > curve_C(G, 2.0));
        CHECK(curve_C(G, 2.0) > curve_C(G, 5.0));
    }
}

TEST_CASE("coherent-alphabet bound") {
    CHECK(cv_bound(0.0) == doctest::Approx(1.0));
    CHECK(cv_bound(0.5) == doctest::Approx(0.9534625892455922).epsilon(1e-14));
    CHECK(cv_bound(std::sqrt(2.0 / 3.0)) == doctest::Approx(0.0));
    CHECK_THROWS_AS(cv_bound(0.83), std::domain_error);
}

TEST_CASE("qudit bound for d = 2") {
    CHECK(qudit_bound(1.0 / 3.0, 2) == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
    CHECK(qudit_bound(2.0 / 3.0, 2) == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
    CHECK(qudit_bound(0.5, 2) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK_THROWS_AS(qudit_bound(0.8, 2), std::domain_error);
    CHECK_THROWS_AS(qudit_bound(0.5, 1), std::domain_error);
}

TEST_CASE("sampled curves are monotone and inside the unit square") {
    for (const auto& curve :
         {sample_curve_A(3.0, 101), sample_curve_B(1.0, 101),
          sample_curve_C(2.0, 101), sample_cv_bound(101),
          sample_qudit_bound(2, 101)}) {
        REQUIRE(curve.samples.size() == 101);
        for (size_t i = 0; i < curve.samples.size(); ++i) {
            const auto& s = curve.samples[i];
            CHECK(s.F >= 0.0);
            CHECK(s.F <= 1.0);
            CHECK(s.G >= 0.0);
            CHECK(s.G <= 1.0);
            if (i > 0) CHECK(s.G >= curve.samples[i - 1].G - 1e-15);
        }
    }

    const auto a = sample_curve_A(10000.0, 51);
    CHECK(a.samples.front().F == doctest::Approx(1.0));
    CHECK(a.samples.front().G == doctest::Approx(0.0).epsilon(1e-30));
    CHECK(a.samples.back().F == doctest::Approx(0.0));
    CHECK(std::abs(a.samples.back().G - std::sqrt(2.0 / 3.0)) <= 1e-3);

    const auto qd = sample_qudit_bound(2, 51);
    CHECK(qd.samples.front().G == doctest::Approx(1.0 / 3.0));
    CHECK(qd.samples.back().G == doctest::Approx(2.0 / 3.0));
    CHECK(qd.samples.front().F == doctest::Approx(2.0 / 3.0));
    CHECK(qd.samples.back().F == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("small-alphabet expansion of the C trade-off") {
    const double delta = 0.05;
    const double d2 = delta * delta;
    for (double G : {0.3, 0.5, 0.7, 0.9}) {
        const double g = G * G;
        const double series = 1.0 + g * d2 / (4.0 * (g - 1.0));
        CHECK(std::abs(curve_C(G, delta) - series) <=
              5.0 * d2 * d2);
    }
}

TEST_CASE("narrow-alphabet comparison of configurations B and C") {
    const auto grid = common_G_grid_B_C(0.2, 101);
    REQUIRE(grid.size() == 101);
    CHECK(grid.front() == doctest::Approx(0.98058068).epsilon(1e-7));
    CHECK(grid.back() == doctest::Approx(0.98198058).epsilon(1e-7));

    const auto rows = compare_B_C(0.2, grid);
    REQUIRE(rows.size() == grid.size());
    const double y = 2.0 * 0.2 * 0.2;
    for (const auto& r : rows) {
        CHECK(r.F_B == doctest::Approx(curve_B(r.G, y)).epsilon(1e-12));
        CHECK(r.F_C == doctest::Approx(curve_C(r.G, 0.2)).epsilon(1e-12));
    }

    // the two configurations cross inside this narrow window: B wins at the
    // left edge, C wins at the right edge
    CHECK(rows[1].F_B > rows[1].F_C);
    CHECK(rows[99].F_B < rows[99].F_C);

    // grid values outside the common window are skipped
    const double outside[] = {0.1, 0.981, 2.0};
    CHECK(compare_B_C(0.2, outside).size() == 1);
}

TEST_CASE("wide-alphabet comparison of configurations B and C") {
    const auto grid = common_G_grid_B_C(100.0, 101);
    const auto rows = compare_B_C(100.0, grid);
    REQUIRE(!rows.empty());
    double max_gap = 0.0;
    for (size_t i = 1; i + 1 < rows.size(); ++i)
        max_gap = std::max(max_gap, std::abs(rows[i].F_B - rows[i].F_C));
    CHECK(max_gap <= 0.01);
}
