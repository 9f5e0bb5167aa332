#pragma once

#include <span>
#include <vector>

namespace snlb {

/// Magnitudes sorted decreasing: the step function x*(u) with unit-width
/// steps under counting measure.
std::vector<double> decreasing_rearrangement(std::span<const double> x);

/// Discrete Lorentz quasinorm (sum_k ((k+1)^{1/p - 1/q} x*_k)^q)^{1/q};
/// sup_k (k+1)^{1/p} x*_k for q = infinity. p in [1, inf), q in [1, inf].
double lorentz_quasinorm(std::span<const double> x, double p, double q);

/// Integral of the decreasing rearrangement: int_0^t x*(u) du, the
/// K-functional of the (l1, linf) couple under the same step convention.
double rearrangement_integral(std::span<const double> x, double t);

}  // namespace snlb
