#pragma once

#include <limits>
#include <span>
#include <vector>

#include "snlb/k_functional.hpp"
#include "snlb/seminorm.hpp"

namespace snlb {

constexpr double kInf = std::numeric_limits<double>::infinity();

/// Parameters (s, q, sigma) of the truncated K-method seminorm
///   [x]_{s,q}^{(sigma)} = || t^{-s} K(t, x) ||_{L^q((0,sigma), dt/t)}.
/// q = inf and sigma = inf are admitted sentinels.
struct InterpolationParams {
    double s = 0.5;
    double q = 2.0;
    double sigma = kInf;

    void validate() const;
};

/// Log-spaced nodes discretizing dt/t on (0, sigma); for sigma = inf the
/// window is centered at 1.
struct QuadratureGrid {
    std::vector<double> nodes;  // strictly increasing
    static QuadratureGrid log_uniform(double sigma, int log2_nodes = 12, double octaves = 40.0);
};

struct SeminormEstimate {
    double value = 0.0;
    /// Additive bounds on the truncated contributions (same units as value).
    double tail_low = 0.0;
    double tail_high = 0.0;
    /// Trapezoid curvature estimate; zero on the exact backend.
    double quad_error = 0.0;
    bool exact = false;
    bool converged = true;  // all K evaluations converged
};

/// Continuous-mode truncated interpolation seminorm. Diagonal l1/l1 pairs
/// with q in {1, 2, inf} integrate the piecewise-linear K exactly; other
/// pairs use trapezoid quadrature in log t over the grid.
SeminormEstimate interpolation_seminorm(const WeightedSpacePair& pair, const InterpolationParams& params,
                                        std::span<const double> x, int log2_nodes = 12,
                                        double octaves = 40.0, KMethod method = KMethod::Auto);

/// Discrete-mode seminorm || { r^{sk} K(sigma r^{-k}, x) }_k ||_{l^q},
/// k in N for finite sigma and k in Z (|k| <= depth) for sigma = inf, with
/// geometric tail bounds from K(t,x) <= min(1, t) [x]_Delta.
SeminormEstimate discrete_interpolation_seminorm(const WeightedSpacePair& pair,
                                                 const InterpolationParams& params,
                                                 std::span<const double> x, double r,
                                                 int depth = 96, KMethod method = KMethod::Auto);

/// The seminorm itself as a FiniteSeminorm (used to nest couples, e.g. for
/// reiteration checks). Discrete mode keeps evaluation costs predictable.
FiniteSeminorm make_interpolation_seminorm(WeightedSpacePair pair, InterpolationParams params,
                                           double r = 2.0, int depth = 48);

}  // namespace snlb
