#include "snlb/hardy.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace snlb {

namespace {

void check_step(std::span<const double> breaks, std::span<const double> values, int p) {
    if (breaks.size() != values.size() + 1)
        throw std::invalid_argument("hardy: breaks must have values.size()+1 entries");
    if (p < 1) throw std::invalid_argument("hardy: p must be a positive integer");
    for (std::size_t i = 0; i < breaks.size(); ++i) {
        if (!(breaks[i] > 0.0) || (i > 0 && !(breaks[i] > breaks[i - 1])))
            throw std::invalid_argument("hardy: breaks must be positive increasing");
    }
    for (double v : values)
        if (v < 0.0) throw std::invalid_argument("hardy: Omega must be nonnegative");
}

// int u^m e^{c u} du evaluated as F(b) - F(a), by repeated integration by
// parts; c != 0.
double int_poly_exp(int m, double c, double a, double b) {
    auto anti = [&](double u) {
        double term = std::pow(u, m) / c;
        double acc = term;
        double fact = 1.0;
        for (int i = 1; i <= m; ++i) {
            fact *= static_cast<double>(m - i + 1);
            term = std::pow(u, m - i) / std::pow(c, i + 1);
            acc += ((i % 2) ? -1.0 : 1.0) * fact * term;
        }
        return acc * std::exp(c * u);
    };
    return anti(b) - anti(a);
}

// int_{t=a}^{b} (A + B ln(t/t0))^p t^{w-1} dt with w != 0, p integer
double int_affine_log_pow(double A, double B, double t0, int p, double w, double a, double b) {
    // substitute u = ln t: int (A + B(u - ln t0))^p e^{w u} du
    const double ua = std::log(a), ub = std::log(b);
    const double C = A - B * std::log(t0);
    double acc = 0.0;
    double binom = 1.0;
    for (int j = 0; j <= p; ++j) {
        if (j > 0) binom = binom * static_cast<double>(p - j + 1) / static_cast<double>(j);
        const double coef = binom * std::pow(C, p - j) * std::pow(B, j);
        if (coef != 0.0) acc += coef * int_poly_exp(j, w, ua, ub);
    }
    return acc;
}

}  // namespace

HardyResult hardy_verify(std::span<const double> breaks, std::span<const double> values, double s,
                         int p, double sigma) {
    check_step(breaks, values, p);
    if (!(s > 0.0)) throw std::invalid_argument("hardy: s > 0");
    if (!(breaks.back() <= sigma * (1.0 + 1e-12)))
        throw std::invalid_argument("hardy: step support exceeds sigma");

    const double w = -s * static_cast<double>(p);
    double rhs_p = 0.0, lhs_p = 0.0;
    double G = 0.0;  // int_0^t Omega dr/r at running left endpoint
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double a = breaks[i], b = breaks[i + 1], om = values[i];
        rhs_p += std::pow(om, p) * (std::pow(a, w) - std::pow(b, w)) / (-w);
        lhs_p += int_affine_log_pow(G, om, a, p, w, a, b);
        G += om * std::log(b / a);
    }
    // beyond the support, G stays constant up to sigma
    if (sigma > breaks.back() && G > 0.0)
        lhs_p += std::pow(G, p) * (std::pow(breaks.back(), w) - std::pow(sigma, w)) / (-w);

    HardyResult r;
    r.lhs = std::pow(lhs_p, 1.0 / p);
    r.rhs = std::pow(rhs_p, 1.0 / p);
    r.pass = r.lhs <= r.rhs / s + 1e-12 * (1.0 + r.rhs / s);
    return r;
}

HardyResult hardy_verify_upper(std::span<const double> breaks, std::span<const double> values,
                               double s, int p) {
    check_step(breaks, values, p);
    if (!(s > 0.0)) throw std::invalid_argument("hardy: s > 0");

    const double w = s * static_cast<double>(p);
    double rhs_p = 0.0, lhs_p = 0.0;
    // H(t) = int_t^inf Omega dr/r, constant on (0, breaks[0])
    double H = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) H += values[i] * std::log(breaks[i + 1] / breaks[i]);
    lhs_p += std::pow(H, p) * std::pow(breaks.front(), w) / w;
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double a = breaks[i], b = breaks[i + 1], om = values[i];
        rhs_p += std::pow(om, p) * (std::pow(b, w) - std::pow(a, w)) / w;
        // on (a, b): H(t) = H(a) - om * ln(t/a)
        lhs_p += int_affine_log_pow(H, -om, a, p, w, a, b);
        H -= om * std::log(b / a);
    }

    HardyResult r;
    r.lhs = std::pow(lhs_p, 1.0 / p);
    r.rhs = std::pow(rhs_p, 1.0 / p);
    r.pass = r.lhs <= r.rhs / s + 1e-12 * (1.0 + r.rhs / s);
    return r;
}

}  // namespace snlb
