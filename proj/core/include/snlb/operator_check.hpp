#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "snlb/interpolation.hpp"

namespace snlb {

/// Dense row-major matrix, only ever applied to vectors.
struct Matrix {
    std::size_t rows = 0, cols = 0;
    std::vector<double> a;

    double& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    double at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
    std::vector<double> apply(std::span<const double> x) const;

    static Matrix identity(std::size_t n);
};

struct OperatorCheckReport {
    double c0 = 0.0, c1 = 0.0;  // factor bounds, maximized over probes
    double max_ratio = 0.0;     // worst [Tx]/(c0^{1-s} c1^s [x]) over samples
    bool pass = false;
    int samples = 0;
};

/// Checks [Tx]^{(sigma)}_{s,q} <= c0^{1-s} c1^s [x]^{(sigma c1/c0)}_{s,q}
/// on random samples. The factor bounds c_i are maximized over the basis
/// vectors and random probes; for weighted 1-norm factors the basis is
/// extremal so the estimate is the exact operator seminorm. Throws when a
/// probe exposes an unbounded factor (annihilator not preserved).
OperatorCheckReport operator_interpolation_check(const WeightedSpacePair& domain,
                                                 const WeightedSpacePair& range, const Matrix& T,
                                                 const InterpolationParams& params, int samples,
                                                 std::uint64_t seed, double slack = 1e-9);

}  // namespace snlb
