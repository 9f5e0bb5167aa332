#include "snlb/interpolation.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>

namespace snlb {

namespace {

// int_l^r t^(e-1) dt, stable for small |e|; r may be infinite when e < 0.
double int_pow(double l, double r, double e) {
    if (std::isinf(r)) {
        if (e >= 0.0) throw std::invalid_argument("int_pow: divergent tail");
        return -std::pow(l, e) / e;
    }
    if (l <= 0.0) {
        if (e <= 0.0) throw std::invalid_argument("int_pow: divergent at zero");
        return std::pow(r, e) / e;
    }
    const double u = std::log(r / l);
    if (e == 0.0) return u;
    return std::pow(l, e) * std::expm1(e * u) / e;
}

struct Segment {
    double lo, hi;     // may be hi = inf on the last piece when sigma = inf
    double alpha, beta;  // K(t) = alpha + beta t on [lo, hi]
};

// piecewise-linear K for a diagonal l1/l1 pair restricted to (0, sigma)
std::vector<Segment> k_segments(const WeightedSpacePair& pair, std::span<const double> x,
                                double sigma) {
    const auto w0 = pair.first.weights();
    const auto w1 = pair.second.weights();
    struct Break {
        double t;
        double dw0, dw1;  // crossing moves dw1 out of beta and dw0 into alpha
    };
    std::vector<Break> breaks;
    double beta = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double a = std::abs(x[i]);
        if (a == 0.0 || w0[i] == 0.0 || w1[i] == 0.0) continue;
        beta += w1[i] * a;
        breaks.push_back({w0[i] / w1[i], w0[i] * a, w1[i] * a});
    }
    std::sort(breaks.begin(), breaks.end(), [](const Break& a, const Break& b) { return a.t < b.t; });

    std::vector<Segment> segs;
    double alpha = 0.0, lo = 0.0;
    for (const Break& b : breaks) {
        if (b.t >= sigma) break;
        if (b.t > lo) segs.push_back({lo, b.t, alpha, beta});
        lo = std::max(lo, b.t);
        alpha += b.dw0;
        beta -= b.dw1;
    }
    if (lo < sigma) segs.push_back({lo, sigma, alpha, beta});
    return segs;
}

SeminormEstimate exact_diag_l1(const WeightedSpacePair& pair, const InterpolationParams& p,
                               std::span<const double> x) {
    SeminormEstimate out;
    out.exact = true;
    const auto segs = k_segments(pair, x, p.sigma);
    if (std::isinf(p.q)) {
        double sup = 0.0;
        for (const Segment& s : segs) {
            auto g = [&](double t) { return std::pow(t, -p.s) * (s.alpha + s.beta * t); };
            if (s.lo > 0.0) sup = std::max(sup, g(s.lo));
            if (!std::isinf(s.hi))
                sup = std::max(sup, g(s.hi));
            else if (s.beta == 0.0 && s.lo > 0.0)
                sup = std::max(sup, g(s.lo));  // decreasing tail
            if (s.alpha > 0.0 && s.beta > 0.0) {
                const double tstar = p.s * s.alpha / ((1.0 - p.s) * s.beta);
                if (tstar > s.lo && tstar < s.hi) sup = std::max(sup, g(tstar));
            }
        }
        out.value = sup;
        return out;
    }
    double acc = 0.0;  // value^q
    for (const Segment& s : segs) {
        if (s.hi <= s.lo) continue;
        if (p.q == 1.0) {
            if (s.alpha > 0.0) acc += s.alpha * int_pow(s.lo, s.hi, -p.s);
            if (s.beta > 0.0) acc += s.beta * int_pow(s.lo, s.hi, 1.0 - p.s);
        } else {  // q == 2
            if (s.alpha > 0.0) acc += s.alpha * s.alpha * int_pow(s.lo, s.hi, -2.0 * p.s);
            if (s.alpha > 0.0 && s.beta > 0.0)
                acc += 2.0 * s.alpha * s.beta * int_pow(s.lo, s.hi, 1.0 - 2.0 * p.s);
            if (s.beta > 0.0) acc += s.beta * s.beta * int_pow(s.lo, s.hi, 2.0 - 2.0 * p.s);
        }
    }
    out.value = std::pow(acc, 1.0 / p.q);
    return out;
}

}  // namespace

void InterpolationParams::validate() const {
    if (!(s > 0.0 && s < 1.0)) throw std::invalid_argument("InterpolationParams: s in (0,1)");
    if (!(q >= 1.0)) throw std::invalid_argument("InterpolationParams: q >= 1");
    if (!(sigma > 0.0)) throw std::invalid_argument("InterpolationParams: sigma > 0");
}

QuadratureGrid QuadratureGrid::log_uniform(double sigma, int log2_nodes, double octaves) {
    QuadratureGrid g;
    const int n = 1 << log2_nodes;
    const double hi = std::isinf(sigma) ? std::exp2(octaves) : sigma;
    const double lo = std::isinf(sigma) ? std::exp2(-octaves) : sigma * std::exp2(-octaves);
    const double du = std::log(hi / lo) / (n - 1);
    g.nodes.resize(n);
    for (int i = 0; i < n; ++i) g.nodes[i] = lo * std::exp(du * i);
    g.nodes.back() = hi;
    return g;
}

SeminormEstimate interpolation_seminorm(const WeightedSpacePair& pair, const InterpolationParams& params,
                                        std::span<const double> x, int log2_nodes, double octaves,
                                        KMethod method) {
    params.validate();
    if (x.size() != pair.dimension())
        throw std::invalid_argument("interpolation_seminorm: dimension mismatch");

    const bool exact_ok = pair.diagonal_l1() && method != KMethod::ConvexSearch &&
                          (params.q == 1.0 || params.q == 2.0 || std::isinf(params.q));
    if (exact_ok) return exact_diag_l1(pair, params, x);

    const QuadratureGrid grid = QuadratureGrid::log_uniform(params.sigma, log2_nodes, octaves);
    const double s = params.s, q = params.q;
    const double x0norm = pair.first(x);
    const double x1norm = pair.second(x);

    SeminormEstimate out;
    std::vector<double> g(grid.nodes.size());
    for (std::size_t i = 0; i < grid.nodes.size(); ++i) {
        const KResult k = k_functional(pair, grid.nodes[i], x, method);
        out.converged = out.converged && k.converged;
        g[i] = std::pow(grid.nodes[i], -s) * k.value;
    }
    const double lo = grid.nodes.front(), hi = grid.nodes.back();
    if (std::isinf(q)) {
        out.value = *std::max_element(g.begin(), g.end());
        out.tail_low = std::pow(lo, 1.0 - s) * x1norm;
        out.tail_high = std::isinf(params.sigma) ? std::pow(hi, -s) * x0norm : 0.0;
        double gap = 0.0;
        for (std::size_t i = 1; i < g.size(); ++i) gap = std::max(gap, std::abs(g[i] - g[i - 1]));
        out.quad_error = 0.5 * gap;
        return out;
    }

    const double du = std::log(hi / lo) / (static_cast<double>(g.size()) - 1.0);
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < g.size(); ++i)
        acc += 0.5 * (std::pow(g[i], q) + std::pow(g[i + 1], q)) * du;
    out.value = std::pow(acc, 1.0 / q);

    // omitted mass, bounded through K(t,x) <= min([x]_0, t [x]_1)
    out.tail_low = x1norm * std::pow(lo, 1.0 - s) * std::pow((1.0 - s) * q, -1.0 / q);
    out.tail_high = std::isinf(params.sigma)
                        ? x0norm * std::pow(hi, -s) * std::pow(s * q, -1.0 / q)
                        : 0.0;

    double curvature = 0.0;
    for (std::size_t i = 1; i + 1 < g.size(); ++i)
        curvature += std::abs(std::pow(g[i - 1], q) - 2.0 * std::pow(g[i], q) + std::pow(g[i + 1], q));
    const double err_q = curvature * du / 12.0;
    out.quad_error = (out.value > 0.0 && acc > 0.0)
                         ? err_q / (q * std::pow(out.value, q - 1.0))
                         : std::pow(err_q, 1.0 / q);
    return out;
}

SeminormEstimate discrete_interpolation_seminorm(const WeightedSpacePair& pair,
                                                 const InterpolationParams& params,
                                                 std::span<const double> x, double r, int depth,
                                                 KMethod method) {
    params.validate();
    if (!(r > 1.0)) throw std::invalid_argument("discrete_interpolation_seminorm: r > 1");
    const double s = params.s, q = params.q;
    const bool whole_line = std::isinf(params.sigma);
    const double sigma = whole_line ? 1.0 : params.sigma;
    const int k_lo = whole_line ? -depth : 0;
    const double x0norm = pair.first(x);
    const double x1norm = pair.second(x);

    SeminormEstimate out;
    double acc = 0.0, sup = 0.0;
    for (int k = k_lo; k <= depth; ++k) {
        const double t = sigma * std::pow(r, -k);
        const KResult kr = k_functional(pair, t, x, method);
        out.converged = out.converged && kr.converged;
        const double term = std::pow(r, s * k) * kr.value;
        if (std::isinf(q))
            sup = std::max(sup, term);
        else
            acc += std::pow(term, q);
    }

    // k > depth: terms <= sigma [x]_1 r^{-(1-s)k}; k < -depth: <= [x]_0 r^{s k}
    const double hi_ratio = std::pow(r, -(1.0 - s));
    const double lo_ratio = std::pow(r, -s);
    if (std::isinf(q)) {
        out.value = sup;
        out.tail_low = sigma * x1norm * std::pow(hi_ratio, depth + 1);
        out.tail_high = whole_line ? x0norm * std::pow(lo_ratio, depth + 1) : 0.0;
    } else {
        out.value = std::pow(acc, 1.0 / q);
        out.tail_low = sigma * x1norm * std::pow(hi_ratio, depth + 1) /
                       std::pow(1.0 - std::pow(hi_ratio, q), 1.0 / q);
        out.tail_high = whole_line ? x0norm * std::pow(lo_ratio, depth + 1) /
                                         std::pow(1.0 - std::pow(lo_ratio, q), 1.0 / q)
                                   : 0.0;
    }
    out.exact = pair.diagonal_l1() || pair.l1_linf();
    return out;
}

FiniteSeminorm make_interpolation_seminorm(WeightedSpacePair pair, InterpolationParams params,
                                           double r, int depth) {
    params.validate();
    auto shared = std::make_shared<WeightedSpacePair>(std::move(pair));
    const std::size_t dim = shared->dimension();
    return FiniteSeminorm::custom(dim, "interpolation", [shared, params, r, depth](std::span<const double> x) {
        return discrete_interpolation_seminorm(*shared, params, x, r, depth).value;
    });
}

}  // namespace snlb
