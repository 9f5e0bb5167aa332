#pragma once

#include <span>
#include <string>
#include <vector>

#include "snlb/seminorm.hpp"

namespace snlb {

/// A splitting x = x0 + x1 with value [x0]_0 + t*[x1]_1.
struct Decomposition {
    std::vector<double> x0;
    std::vector<double> x1;
    double t = 1.0;
    double value = 0.0;
};

enum class KMethod { Auto, ClosedForm, ConvexSearch };

struct KOptions {
    double tolerance = 1e-9;       // relative, against the sum-seminorm scale
    long max_iterations = 100000;  // 1-d line minimizations
};

struct KResult {
    double value = 0.0;
    Decomposition witness;
    bool converged = true;
    long iterations = 0;
    std::string method;
};

/// K(t, x) = inf { [x0]_0 + t [x1]_1 : x = x0 + x1 }.
/// Closed forms exist for diagonal l1/l1 pairs (coordinate thresholding,
/// ties to the first factor) and for weighted l1/linf pairs (breakpoint
/// scan over the sup-level). Everything else runs cyclic coordinate
/// descent with exact 1-d line searches; non-convergence is reported and
/// the value is an upper bound.
KResult k_functional(const WeightedSpacePair& pair, double t, std::span<const double> x,
                     KMethod method = KMethod::Auto, const KOptions& opts = {});

/// J(t, x) = max([x]_0, t [x]_1) on the intersection.
double j_functional(const WeightedSpacePair& pair, double t, std::span<const double> x);

/// ([x]_Sigma, [x]_Delta) = (K(1, x), max([x]_0, [x]_1)).
std::pair<double, double> sum_and_intersection_seminorms(const WeightedSpacePair& pair,
                                                         std::span<const double> x);

}  // namespace snlb
