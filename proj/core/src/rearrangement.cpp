#include "snlb/rearrangement.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace snlb {

std::vector<double> decreasing_rearrangement(std::span<const double> x) {
    std::vector<double> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = std::abs(x[i]);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

double lorentz_quasinorm(std::span<const double> x, double p, double q) {
    if (p < 1.0 || std::isinf(p)) throw std::invalid_argument("lorentz_quasinorm: p in [1, inf)");
    if (q < 1.0) throw std::invalid_argument("lorentz_quasinorm: q >= 1");
    const std::vector<double> xs = decreasing_rearrangement(x);
    if (std::isinf(q)) {
        double m = 0.0;
        for (std::size_t k = 0; k < xs.size(); ++k)
            m = std::max(m, std::pow(static_cast<double>(k + 1), 1.0 / p) * xs[k]);
        return m;
    }
    double s = 0.0;
    for (std::size_t k = 0; k < xs.size(); ++k)
        s += std::pow(std::pow(static_cast<double>(k + 1), 1.0 / p - 1.0 / q) * xs[k], q);
    return std::pow(s, 1.0 / q);
}

double rearrangement_integral(std::span<const double> x, double t) {
    if (t < 0.0) throw std::invalid_argument("rearrangement_integral: t >= 0");
    const std::vector<double> xs = decreasing_rearrangement(x);
    double acc = 0.0;
    double remaining = t;
    for (double v : xs) {
        if (remaining <= 0.0) break;
        const double width = std::min(remaining, 1.0);
        acc += width * v;
        remaining -= width;
    }
    return acc;
}

}  // namespace snlb
