#pragma once

#include <cstdint>

#include "cvtrade/channel.hpp"
#include "cvtrade/gaussian.hpp"

namespace cvtrade {

/// Controls for the sampling estimators.  Results are a deterministic
/// function of (trials, seed, chunk_size); the thread count never changes
/// the estimate, only how the chunks are scheduled.
struct McConfig {
    std::uint64_t trials = 100000;
    std::uint64_t seed = 1;
    std::uint64_t chunk_size = 4096;
    unsigned threads = 1;
};

struct McEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::uint64_t trials = 0;
};

/// Samples (a, b) from the joint outcome law and averages the estimation
/// score of the raw record b against the true signal position a.
McEstimate simulate_estimation_fidelity(const SignalEnsemble& ensemble,
                                        const ProbeSpec& probe,
                                        const MeasurementSpec& measurement,
                                        const McConfig& config);

/// Samples outcomes for a signal prepared at the origin and averages the
/// transmission fidelity of the conditional state against that signal.
McEstimate simulate_transmission_fidelity(const ProbeSpec& probe,
                                          double tau,
                                          const MeasurementSpec& measurement,
                                          const McConfig& config);

}  // namespace cvtrade
