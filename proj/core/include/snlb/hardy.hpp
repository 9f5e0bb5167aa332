#pragma once

#include <span>

namespace snlb {

struct HardyResult {
    double lhs = 0.0;
    double rhs = 0.0;  // before the 1/s factor
    bool pass = false;
};

/// Exact two-sided evaluation of the truncated Hardy inequality
///   || t^{-s} int_0^t Omega dr/r ||_{L^p((0,sigma),dt/t)}
///     <= s^{-1} || t^{-s} Omega ||_{L^p((0,sigma),dt/t)}
/// for a step function Omega that vanishes on (0, breaks[0]) and takes
/// values[i] on (breaks[i], breaks[i+1]), breaks.back() <= sigma.
/// p must be a positive integer so both sides have elementary closed forms.
HardyResult hardy_verify(std::span<const double> breaks, std::span<const double> values, double s,
                         int p, double sigma);

/// The dual inequality with the tail integral int_t^inf Omega dr/r and
/// weight t^{+s}, over (0, inf), for compactly supported step functions.
HardyResult hardy_verify_upper(std::span<const double> breaks, std::span<const double> values,
                               double s, int p);

}  // namespace snlb
