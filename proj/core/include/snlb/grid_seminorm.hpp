#pragma once

#include "snlb/field_ops.hpp"
#include "snlb/seminorm.hpp"

namespace snlb {

/// L^p norm of real samples on `spec`, exposed as an abstract seminorm so
/// grid couples plug into the K-functional machinery.
inline FiniteSeminorm make_grid_lp_seminorm(const GridSpec& spec, double p) {
    return FiniteSeminorm::custom(spec.total(), "grid-lp", [spec, p](std::span<const double> x) {
        return lp_norm(GridFunction(spec, std::vector<double>(x.begin(), x.end())), p);
    });
}

/// Homogeneous first-order Sobolev seminorm on real samples.
inline FiniteSeminorm make_grid_w1p_seminorm(const GridSpec& spec, double p) {
    return FiniteSeminorm::custom(spec.total(), "grid-w1p", [spec, p](std::span<const double> x) {
        return w1p_seminorm(GridFunction(spec, std::vector<double>(x.begin(), x.end())), p);
    });
}

inline WeightedSpacePair make_grid_pair(const GridSpec& spec, double p) {
    return WeightedSpacePair(make_grid_lp_seminorm(spec, p), make_grid_w1p_seminorm(spec, p));
}

}  // namespace snlb
