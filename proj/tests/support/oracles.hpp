#pragma once

// Test-only oracles, kept independent of the library code paths they audit.

#include <cmath>
#include <random>
#include <vector>

#include "snlb/interpolation.hpp"
#include "snlb/k_functional.hpp"

namespace snlb::testing {

struct TestRng {
    std::mt19937_64 gen;
    explicit TestRng(std::uint64_t seed) : gen(seed) {}
    double uniform() { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }
    double symmetric() { return 2.0 * uniform() - 1.0; }
    double log_uniform(double lo, double hi) { return lo * std::pow(hi / lo, uniform()); }
};

/// Exhaustive zoomed grid search over decompositions x = x0 + x1. The
/// objective is convex, so refining around the coarse argmin converges.
inline double brute_force_k(const WeightedSpacePair& pair, double t, std::span<const double> x,
                            int rounds = 4, int pts = 33) {
    const std::size_t dim = pair.dimension();
    std::vector<double> lo(dim), hi(dim), best(dim, 0.0), probe(dim), x1(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        const double r = std::abs(x[i]) + 1.0;
        lo[i] = -r;
        hi[i] = r;
    }
    auto cost = [&](const std::vector<double>& x0) {
        for (std::size_t i = 0; i < dim; ++i) x1[i] = x[i] - x0[i];
        return pair.first(x0) + t * pair.second(x1);
    };
    double best_val = cost(best);
    for (int round = 0; round < rounds; ++round) {
        std::vector<std::size_t> idx(dim, 0);
        std::vector<double> step(dim);
        for (std::size_t i = 0; i < dim; ++i) step[i] = (hi[i] - lo[i]) / (pts - 1);
        bool done = false;
        std::vector<double> local_best = best;
        double local_val = best_val;
        while (!done) {
            for (std::size_t i = 0; i < dim; ++i) probe[i] = lo[i] + step[i] * idx[i];
            const double c = cost(probe);
            if (c < local_val) {
                local_val = c;
                local_best = probe;
            }
            std::size_t a = 0;
            while (a < dim && ++idx[a] == static_cast<std::size_t>(pts)) idx[a++] = 0;
            done = a == dim;
        }
        best = local_best;
        best_val = local_val;
        for (std::size_t i = 0; i < dim; ++i) {
            lo[i] = best[i] - 2.0 * step[i];
            hi[i] = best[i] + 2.0 * step[i];
        }
    }
    return best_val;
}

/// Plain trapezoid in log t over the closed-form K; an independent route
/// against the segment-exact integration backend.
inline double reference_interpolation_seminorm(const WeightedSpacePair& pair,
                                               const InterpolationParams& params,
                                               std::span<const double> x, int nodes = 1 << 14,
                                               double octaves = 48.0) {
    const double hi = std::isinf(params.sigma) ? std::exp2(octaves) : params.sigma;
    const double lo = hi * std::exp2(-2.0 * octaves);
    const double du = std::log(hi / lo) / (nodes - 1);
    double acc = 0.0, sup = 0.0, prev = 0.0;
    for (int i = 0; i < nodes; ++i) {
        const double t = lo * std::exp(du * i);
        const double g = std::pow(t, -params.s) * k_functional(pair, t, x).value;
        if (std::isinf(params.q)) {
            sup = std::max(sup, g);
        } else {
            const double gq = std::pow(g, params.q);
            if (i > 0) acc += 0.5 * (prev + gq) * du;
            prev = gq;
        }
    }
    return std::isinf(params.q) ? sup : std::pow(acc, 1.0 / params.q);
}

inline WeightedSpacePair random_diag_l1_pair(TestRng& rng, std::size_t dim, double wlo = 0.1,
                                             double whi = 10.0) {
    std::vector<double> w0(dim), w1(dim);
    for (double& w : w0) w = rng.log_uniform(wlo, whi);
    for (double& w : w1) w = rng.log_uniform(wlo, whi);
    return WeightedSpacePair::diag_l1(w0, w1);
}

inline std::vector<double> random_vector(TestRng& rng, std::size_t dim) {
    std::vector<double> x(dim);
    for (double& v : x) v = rng.symmetric();
    return x;
}

}  // namespace snlb::testing
