#include "snlb/fundamental.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace snlb {

double slack_profile(double t, double s) {
    const double u = std::log(t);
    return std::pow(t, s) / (1.0 + u * u);
}

double slack_profile_inf(double r, int k, double s) {
    const double a = std::pow(r, k - 1), b = std::pow(r, k + 1);
    double m = std::min(slack_profile(a, s), slack_profile(b, s));
    // critical points of u -> e^{su}/(1+u^2): s u^2 - 2u + s = 0
    const double disc = 1.0 - s * s;
    if (disc >= 0.0) {
        for (double u : {(1.0 - std::sqrt(disc)) / s, (1.0 + std::sqrt(disc)) / s}) {
            const double t = std::exp(u);
            if (t > a && t < b) m = std::min(m, slack_profile(t, s));
        }
    }
    return m;
}

FundamentalDecomposition fundamental_decomposition(const WeightedSpacePair& pair,
                                                   std::span<const double> x, double r, double eps,
                                                   int depth, double s, KMethod method) {
    if (!(r > 1.0)) throw std::invalid_argument("fundamental_decomposition: r > 1");
    if (depth < 1) throw std::invalid_argument("fundamental_decomposition: depth >= 1");
    if (!(eps >= 0.0)) throw std::invalid_argument("fundamental_decomposition: eps >= 0");
    const std::size_t dim = pair.dimension();
    if (x.size() != dim) throw std::invalid_argument("fundamental_decomposition: dimension mismatch");

    FundamentalDecomposition dec;
    dec.r = r;
    dec.eps = eps;
    dec.s = s;
    dec.depth = depth;

    // witnesses y_k (first factor part) for k = -depth-1 .. depth
    std::vector<std::vector<double>> y(static_cast<std::size_t>(2 * depth + 2));
    std::vector<double> kval(static_cast<std::size_t>(2 * depth + 2));
    for (int k = -depth - 1; k <= depth; ++k) {
        const double t = std::pow(r, k);
        KResult res = k_functional(pair, t, x, method);
        kval[static_cast<std::size_t>(k + depth + 1)] = res.value;
        const double slack = res.witness.value - res.value;
        if (slack > eps * slack_profile_inf(r, k, s) + 1e-15 * std::max(1.0, res.value))
            dec.witnesses_ok = false;
        y[static_cast<std::size_t>(k + depth + 1)] = std::move(res.witness.x0);
    }

    dec.xi.resize(static_cast<std::size_t>(2 * depth + 1));
    for (int k = -depth; k <= depth; ++k) {
        std::vector<double> d(dim);
        const auto& yk = y[static_cast<std::size_t>(k + depth + 1)];
        const auto& ykm1 = y[static_cast<std::size_t>(k + depth)];
        for (std::size_t i = 0; i < dim; ++i) d[i] = yk[i] - ykm1[i];
        dec.xi[static_cast<std::size_t>(k + depth)] = std::move(d);
    }

    // partial sum telescopes to y_depth - y_{-depth-1}; the residual is
    // [x - y_depth + y_{-depth-1}]_Sigma = [z_depth + y_{-depth-1}]_Sigma
    std::vector<double> rem(dim);
    const auto& ytop = y.back();
    const auto& ybot = y.front();
    for (std::size_t i = 0; i < dim; ++i) rem[i] = x[i] - ytop[i] + ybot[i];
    dec.residual = k_functional(pair, 1.0, rem, method).value;
    return dec;
}

double fundamental_bound_ratio(const WeightedSpacePair& pair, std::span<const double> x,
                               const FundamentalDecomposition& dec, int samples_per_interval) {
    const double r = dec.r;
    const double bound_const = r * (1.0 + r) / std::log(r);
    double worst = 0.0;
    for (int k = -dec.depth; k <= dec.depth; ++k) {
        std::vector<double> u(dec.at(k).begin(), dec.at(k).end());
        for (double& v : u) v /= std::log(r);
        for (int j = 0; j < samples_per_interval; ++j) {
            const double frac = (samples_per_interval == 1)
                                    ? 0.0
                                    : static_cast<double>(j) / (samples_per_interval - 1);
            const double t = std::pow(r, k - 1 + frac);
            const double lhs = j_functional(pair, t, u);
            const double rhs = bound_const * (k_functional(pair, t, x).value +
                                              dec.eps * slack_profile(t, dec.s));
            if (rhs > 0.0) worst = std::max(worst, lhs / rhs);
        }
    }
    return worst;
}

double j_method_upper_bound(const WeightedSpacePair& pair, double s, double q,
                            std::span<const double> x,
                            const std::vector<std::vector<double>>& xi, int offset, double r,
                            double residual_tol) {
    if (!(r > 1.0)) throw std::invalid_argument("j_method_upper_bound: r > 1");
    const std::size_t dim = pair.dimension();
    std::vector<double> sum(dim, 0.0);
    for (const auto& piece : xi) {
        if (piece.size() != dim) throw std::invalid_argument("j_method_upper_bound: piece dimension");
        for (std::size_t i = 0; i < dim; ++i) sum[i] += piece[i];
    }
    std::vector<double> rem(dim);
    for (std::size_t i = 0; i < dim; ++i) rem[i] = x[i] - sum[i];
    const double xnorm = k_functional(pair, 1.0, x).value;
    const double res = k_functional(pair, 1.0, rem).value;
    if (res > residual_tol * std::max(xnorm, 1e-300))
        throw std::invalid_argument("j_method_upper_bound: candidate does not reconstruct x");

    double acc = 0.0, sup = 0.0;
    for (std::size_t m = 0; m < xi.size(); ++m) {
        const int k = static_cast<int>(m) - offset;
        const double term = std::pow(r, s * k) * j_functional(pair, std::pow(r, -k), xi[m]);
        if (std::isinf(q))
            sup = std::max(sup, term);
        else
            acc += std::pow(term, q);
    }
    return std::isinf(q) ? sup : std::pow(acc, 1.0 / q);
}

SumCharWitness sum_characterization_witness(const WeightedSpacePair& pair,
                                            const InterpolationParams& params,
                                            std::span<const double> x, double eps,
                                            KMethod method) {
    params.validate();
    if (std::isinf(params.sigma))
        throw std::invalid_argument("sum_characterization_witness: sigma must be finite");
    const std::size_t dim = pair.dimension();
    if (x.size() != dim) throw std::invalid_argument("sum_characterization_witness: dimension mismatch");
    const double sigma = params.sigma;

    // depth: follow the scales down until the weighted K terms are dust
    const double xnorm = k_functional(pair, 1.0, x, method).value;
    int depth = 8;
    {
        const double x1 = pair.second(x);
        // 2^{sk} K(sigma 2^{-k}) <= sigma [x]_1 2^{-(1-s)k}
        const double rate = 1.0 - params.s;
        while (depth < 256 &&
               sigma * x1 * std::exp2(-rate * depth) > 1e-14 * std::max(xnorm, 1e-300))
            ++depth;
    }

    SumCharWitness w;
    w.terms = depth;
    // a_k + b_k at t = sigma 2^{-k}; closed-form witnesses carry no slack,
    // convex-search witnesses must stay within eps 2^{-k}
    std::vector<std::vector<double>> a(static_cast<std::size_t>(depth + 1));
    for (int k = 0; k <= depth; ++k) {
        KResult res = k_functional(pair, sigma * std::exp2(-k), x, method);
        const double slack = res.witness.value - res.value;
        if (slack > eps * std::exp2(-k) + 1e-15 * std::max(1.0, res.value))
            throw std::runtime_error("sum_characterization_witness: witness slack exceeds budget");
        a[static_cast<std::size_t>(k)] = std::move(res.witness.x0);
        if (k == 0) {
            w.eta = std::move(res.witness.x1);
            w.bound1 = pair.second(w.eta);
        }
    }

    w.xi.resize(static_cast<std::size_t>(depth));
    double acc = 0.0, sup = 0.0;
    for (int k = 0; k < depth; ++k) {
        std::vector<double> d(dim);
        for (std::size_t i = 0; i < dim; ++i)
            d[i] = a[static_cast<std::size_t>(k)][i] - a[static_cast<std::size_t>(k + 1)][i];
        const double term =
            std::exp2(params.s * k) * j_functional(pair, sigma * std::exp2(-k), d);
        if (std::isinf(params.q))
            sup = std::max(sup, term);
        else
            acc += std::pow(term, params.q);
        w.xi[static_cast<std::size_t>(k)] = std::move(d);
    }
    w.bound0 = std::isinf(params.q) ? sup : std::pow(acc, 1.0 / params.q);

    // eta + sum xi = x - a_depth
    w.residual = pair.first(a.back());
    return w;
}

}  // namespace snlb
