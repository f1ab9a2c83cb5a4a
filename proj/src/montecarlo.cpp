#include "cvtrade/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

namespace cvtrade {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Both uniforms come from the top 53 bits; u1 is shifted into (0, 1] so the
// logarithm below never sees zero.
double uniform_open_closed(std::mt19937_64& rng) {
    return static_cast<double>((rng() >> 11) + 1) * 0x1.0p-53;
}

double uniform_closed_open(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double standard_normal(std::mt19937_64& rng) {
    const double u1 = uniform_open_closed(rng);
    const double u2 = uniform_closed_open(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

// Draws the mixture component index by inverse transform on the weights.
// Consumes exactly one variate regardless of the branch taken.
std::size_t pick_component(const GaussianMixture1D& mixture,
                           std::mt19937_64& rng) {
    const double u = uniform_closed_open(rng) * mixture.total_weight();
    double cumulative = 0.0;
    for (std::size_t i = 0; i + 1 < mixture.components.size(); ++i) {
        cumulative += mixture.components[i].weight;
        if (u < cumulative) return i;
    }
    return mixture.components.size() - 1;
}

struct Accumulator {
    std::uint64_t count = 0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double x) {
        ++count;
        const double d = x - mean;
        mean += d / static_cast<double>(count);
        m2 += d * (x - mean);
    }

    // Chan's pairwise update; applied in chunk order so the merged moments
    // are independent of the thread schedule.
    void merge(const Accumulator& other) {
        if (other.count == 0) return;
        if (count == 0) {
            *this = other;
            return;
        }
        const double n1 = static_cast<double>(count);
        const double n2 = static_cast<double>(other.count);
        const double d = other.mean - mean;
        const double n = n1 + n2;
        mean += d * n2 / n;
        m2 += other.m2 + d * d * n1 * n2 / n;
        count += other.count;
    }
};

template <typename ChunkFn>
McEstimate run_chunks(const McConfig& config, ChunkFn&& chunk_fn) {
    if (config.trials == 0) throw std::domain_error("trials must be positive");
    if (config.chunk_size == 0)
        throw std::domain_error("chunk_size must be positive");

    const std::uint64_t chunks =
        (config.trials + config.chunk_size - 1) / config.chunk_size;
    std::vector<Accumulator> partial(chunks);

    auto run_range = [&](std::uint64_t stride, std::uint64_t offset) {
        for (std::uint64_t c = offset; c < chunks; c += stride) {
            const std::uint64_t begin = c * config.chunk_size;
            const std::uint64_t end =
                std::min(begin + config.chunk_size, config.trials);
            std::mt19937_64 rng(splitmix64(config.seed ^ (c + 1)));
            Accumulator acc;
            for (std::uint64_t t = begin; t < end; ++t)
                acc.add(chunk_fn(rng));
            partial[c] = acc;
        }
    };

    const unsigned workers =
        std::max(1u, std::min<unsigned>(config.threads,
                                        static_cast<unsigned>(chunks)));
    if (workers == 1) {
        run_range(1, 0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(run_range, workers, w);
        for (auto& th : pool) th.join();
    }

    Accumulator total;
    for (const auto& acc : partial) total.merge(acc);

    McEstimate estimate;
    estimate.mean = total.mean;
    estimate.trials = total.count;
    if (total.count > 1) {
        const double n = static_cast<double>(total.count);
        estimate.std_error = std::sqrt(total.m2 / (n - 1.0) / n);
    }
    return estimate;
}

double sample_outcome(const GaussianMixture1D& mixture, std::mt19937_64& rng) {
    const auto& comp = mixture.components[pick_component(mixture, rng)];
    return comp.mean + std::sqrt(comp.variance) * standard_normal(rng);
}

}  // namespace

McEstimate simulate_estimation_fidelity(const SignalEnsemble& ensemble,
                                        const ProbeSpec& probe,
                                        const MeasurementSpec& measurement,
                                        const McConfig& config) {
    return run_chunks(config, [&](std::mt19937_64& rng) {
        const double a = ensemble.delta * standard_normal(rng);
        const auto mixture = outcome_density(a, ensemble, probe, measurement);
        const double b = sample_outcome(mixture, rng);
        return signal_overlap(a, ensemble.tau, b, ensemble.tau);
    });
}

McEstimate simulate_transmission_fidelity(const ProbeSpec& probe,
                                          double tau,
                                          const MeasurementSpec& measurement,
                                          const McConfig& config) {
    SignalEnsemble point_source;
    point_source.tau = tau;
    point_source.delta = 1.0;  // unused: the signal is pinned at the origin
    return run_chunks(config, [&](std::mt19937_64& rng) {
        const auto mixture =
            outcome_density(0.0, point_source, probe, measurement);
        const double b = sample_outcome(mixture, rng);
        return conditional_overlap(b, 0.0, 0.0, point_source, probe,
                                   measurement);
    });
}

}  // namespace cvtrade
