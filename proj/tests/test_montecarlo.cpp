#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "cvtrade/fidelities.hpp"
#include "cvtrade/montecarlo.hpp"
#include "cvtrade/tradeoff.hpp"

using namespace cvtrade;

namespace {

bool within_3_sigma(const McEstimate& e, double reference) {
    return std::abs(e.mean - reference) <= 3.0 * e.std_error;
}

}  // namespace

TEST_CASE("estimates are a pure function of (trials, seed, chunk)") {
    const auto ens = make_signal_ensemble(M_SQRT1_2, 1.0);
    const auto p = make_probe(0.3, 0.9);
    const auto m = make_measurement(0.7);

    McConfig cfg{20000, 7, 512, 1};
    const auto first = simulate_estimation_fidelity(ens, p, m, cfg);
    const auto again = simulate_estimation_fidelity(ens, p, m, cfg);
    CHECK(first.mean == again.mean);
    CHECK(first.std_error == again.std_error);
    CHECK(first.trials == 20000);

    // scheduling across threads must not move a single bit
    cfg.threads = 4;
    const auto threaded = simulate_estimation_fidelity(ens, p, m, cfg);
    CHECK(threaded.mean == first.mean);
    CHECK(threaded.std_error == first.std_error);

    const auto ft = simulate_transmission_fidelity(p, 1.0, m, {20000, 7, 512, 1});
    const auto ft4 = simulate_transmission_fidelity(p, 1.0, m, {20000, 7, 512, 4});
    CHECK(ft.mean == ft4.mean);
    CHECK(ft.std_error == ft4.std_error);

    // a different seed gives a different sample
    const auto other = simulate_estimation_fidelity(ens, p, m, {20000, 8, 512, 1});
    CHECK(other.mean != first.mean);
}

TEST_CASE("a chunk size that does not divide the trials still counts them all") {
    const auto ens = make_signal_ensemble(M_SQRT1_2, 1.0);
    const auto p = make_probe(0.0, M_SQRT1_2);
    const auto m = make_measurement(0.5);
    const auto e = simulate_estimation_fidelity(ens, p, m, {10001, 3, 4096, 2});
    CHECK(e.trials == 10001);
    CHECK(e.std_error > 0.0);
}

TEST_CASE("estimation estimate agrees with the closed form") {
    // balanced point: G = sqrt(2/3)
    const auto ens = make_signal_ensemble(M_SQRT1_2, 1.0);
    const auto p = make_probe(0.0, M_SQRT1_2);
    const auto m = make_measurement(0.5);
    const auto e = simulate_estimation_fidelity(ens, p, m, {100000, 1, 4096, 2});
    const double ref = estimation_fidelity(p, ens, m);
    CHECK(ref == doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-12));
    CHECK(within_3_sigma(e, ref));

    // superposition probe away from any optimum
    const auto ens2 = make_signal_ensemble(1.0, 1.4);
    const auto p2 = make_probe(1.1, 0.6);
    const auto m2 = make_measurement(1.3);
    const auto e2 = simulate_estimation_fidelity(ens2, p2, m2, {100000, 5, 4096, 2});
    CHECK(within_3_sigma(e2, estimation_fidelity(p2, ens2, m2)));
}

TEST_CASE("a near-degenerate alphabet is estimated perfectly") {
    const auto ens = make_signal_ensemble(1.0, 1e-6);
    const auto p = make_probe(0.0, M_SQRT1_2);
    const auto m = make_measurement(kappa_opt(ProbeConfig::C, ens));
    const auto e = simulate_estimation_fidelity(ens, p, m, {50000, 2, 4096, 2});
    CHECK(std::abs(e.mean - 1.0) <= std::max(3.0 * e.std_error, 1e-9));
}

TEST_CASE("transmission estimate agrees with the closed form") {
    const auto p = make_probe(0.0, 1.0);
    const auto m = make_measurement(1.0);
    const auto e = simulate_transmission_fidelity(p, 1.0, m, {100000, 1, 4096, 2});
    CHECK(transmission_fidelity(p, 1.0) ==
          doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-12));
    CHECK(within_3_sigma(e, transmission_fidelity(p, 1.0)));

    const auto pb = make_probe(0.0, M_SQRT1_2);
    const auto eb = simulate_transmission_fidelity(pb, 1.0, m, {100000, 2, 4096, 2});
    CHECK(within_3_sigma(eb, transmission_fidelity(pb, 1.0)));
}

TEST_CASE("transmission fidelity does not depend on the record gain") {
    const auto p = make_probe(M_PI / 3.0, 0.8);
    const auto lo = simulate_transmission_fidelity(p, 1.0, make_measurement(0.5),
                                                   {60000, 11, 4096, 2});
    const auto hi = simulate_transmission_fidelity(p, 1.0, make_measurement(2.0),
                                                   {60000, 12, 4096, 2});
    const double combined =
        std::sqrt(lo.std_error * lo.std_error + hi.std_error * hi.std_error);
    CHECK(std::abs(lo.mean - hi.mean) <= 3.0 * combined);
}

TEST_CASE("standard error shrinks like one over root trials") {
    const auto ens = make_signal_ensemble(M_SQRT1_2, 1.0);
    const auto p = make_probe(0.7, 0.9);
    const auto m = make_measurement(0.8);
    const auto small = simulate_estimation_fidelity(ens, p, m, {25000, 9, 1024, 2});
    const auto large = simulate_estimation_fidelity(ens, p, m, {100000, 9, 1024, 2});
    const double ratio = small.std_error / large.std_error;
    CHECK(ratio > 1.6);
    CHECK(ratio < 2.4);
}

TEST_CASE("degenerate sampling controls are rejected") {
    const auto ens = make_signal_ensemble(M_SQRT1_2, 1.0);
    const auto p = make_probe(0.0, M_SQRT1_2);
    const auto m = make_measurement(1.0);
    CHECK_THROWS_AS(simulate_estimation_fidelity(ens, p, m, {0, 1, 4096, 1}),
                    std::domain_error);
    CHECK_THROWS_AS(simulate_estimation_fidelity(ens, p, m, {100, 1, 0, 1}),
                    std::domain_error);
    CHECK_THROWS_AS(simulate_transmission_fidelity(p, 1.0, m, {0, 1, 4096, 1}),
                    std::domain_error);
}
