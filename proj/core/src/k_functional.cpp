#include "snlb/k_functional.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace snlb {

namespace {

KResult closed_form_diag_l1(const WeightedSpacePair& pair, double t, std::span<const double> x) {
    const auto w0 = pair.first.weights();
    const auto w1 = pair.second.weights();
    KResult res;
    res.method = "closed-form-l1l1";
    res.witness.t = t;
    res.witness.x0.assign(x.size(), 0.0);
    res.witness.x1.assign(x.size(), 0.0);
    double v = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        // ties go to the first factor for reproducible witnesses
        if (w0[i] <= t * w1[i]) {
            res.witness.x0[i] = x[i];
            v += w0[i] * std::abs(x[i]);
        } else {
            res.witness.x1[i] = x[i];
            v += t * w1[i] * std::abs(x[i]);
        }
    }
    res.value = v;
    res.witness.value = v;
    return res;
}

// inf over m >= 0 of sum_i w0_i * max(|x_i| - m / w1_i, 0) + t m,
// where m is the sup-level w1_i |x1_i| allowed in the second factor.
KResult closed_form_l1_linf(const WeightedSpacePair& pair, double t, std::span<const double> x) {
    const auto w0 = pair.first.weights();
    const auto w1 = pair.second.weights();
    KResult res;
    res.method = "closed-form-l1linf";
    res.witness.t = t;
    res.witness.x0.assign(x.begin(), x.end());
    res.witness.x1.assign(x.size(), 0.0);

    std::vector<double> levels{0.0};
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (w0[i] == 0.0) continue;      // free in the first factor
        if (w1[i] == 0.0) continue;      // free in the second factor
        levels.push_back(w1[i] * std::abs(x[i]));
    }
    std::sort(levels.begin(), levels.end());

    auto cost = [&](double m) {
        double c = t * m;
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (w0[i] == 0.0 || w1[i] == 0.0) continue;
            c += w0[i] * std::max(std::abs(x[i]) - m / w1[i], 0.0);
        }
        return c;
    };

    double best_m = 0.0, best = cost(0.0);
    for (double m : levels) {
        const double c = cost(m);
        if (c < best - 1e-15 * std::max(1.0, best)) {
            best = c;
            best_m = m;
        }
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
        double x1i;
        if (w0[i] == 0.0)
            x1i = 0.0;  // keep it in the free first factor
        else if (w1[i] == 0.0)
            x1i = x[i];  // free in the second factor
        else {
            const double cap = best_m / w1[i];
            x1i = std::copysign(std::min(std::abs(x[i]), cap), x[i]);
        }
        res.witness.x1[i] = x1i;
        res.witness.x0[i] = x[i] - x1i;
    }
    res.value = best;
    res.witness.value = best;
    return res;
}

double golden_min(const std::function<double(double)>& g, double lo, double hi, double tol,
                  long& evals, long budget) {
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = g(c), fd = g(d);
    evals += 2;
    while (b - a > tol && evals < budget) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = g(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = g(d);
        }
        ++evals;
    }
    return fc < fd ? c : d;
}

KResult convex_search(const WeightedSpacePair& pair, double t, std::span<const double> x,
                      const KOptions& opts) {
    const std::size_t dim = x.size();
    KResult res;
    res.method = "convex-search";
    res.witness.t = t;

    std::vector<double> x0(x.begin(), x.end());  // start: everything in X0
    std::vector<double> x1(dim, 0.0);
    auto objective = [&](const std::vector<double>& a) {
        std::vector<double> b(dim);
        for (std::size_t i = 0; i < dim; ++i) b[i] = x[i] - a[i];
        return pair.first(a) + t * pair.second(b);
    };

    {
        std::vector<double> zero(dim, 0.0);
        if (objective(zero) < objective(x0)) x0 = zero;
    }
    double best = objective(x0);
    const double scale = std::max(best, 1e-300);

    long evals = 0;
    bool converged = false;
    std::vector<double> trial = x0;
    for (int pass = 0; pass < 400 && !converged; ++pass) {
        const double before = best;
        for (std::size_t i = 0; i < dim && evals < opts.max_iterations; ++i) {
            auto line = [&](double c) {
                trial[i] = c;
                const double v = objective(trial);
                return v;
            };
            // expand a bracket around the current coordinate
            double radius = std::max({std::abs(x[i]), std::abs(x0[i]), scale / (1.0 + t), 1e-6});
            double lo = x0[i] - radius, hi = x0[i] + radius;
            for (int grow = 0; grow < 60; ++grow) {
                const bool lower = line(lo) < best - 1e-18 * scale;
                const bool upper = line(hi) < best - 1e-18 * scale;
                evals += 2;
                if (!lower && !upper) break;
                radius *= 4.0;
                lo = x0[i] - radius;
                hi = x0[i] + radius;
            }
            const double c = golden_min(line, lo, hi, 1e-12 * std::max(1.0, radius), evals,
                                        opts.max_iterations);
            trial[i] = c;
            const double v = objective(trial);
            ++evals;
            if (v < best) {
                best = v;
                x0[i] = c;
            }
            trial[i] = x0[i];
        }
        if (before - best <= opts.tolerance * scale && pass >= 1) converged = true;
        if (evals >= opts.max_iterations) break;
    }

    for (std::size_t i = 0; i < dim; ++i) x1[i] = x[i] - x0[i];
    res.value = best;
    res.converged = converged;
    res.iterations = evals;
    res.witness.x0 = std::move(x0);
    res.witness.x1 = std::move(x1);
    res.witness.value = best;
    return res;
}

}  // namespace

KResult k_functional(const WeightedSpacePair& pair, double t, std::span<const double> x,
                     KMethod method, const KOptions& opts) {
    if (!(t > 0.0)) throw std::invalid_argument("k_functional: t must be positive");
    if (x.size() != pair.dimension()) throw std::invalid_argument("k_functional: dimension mismatch");

    const bool can_closed = pair.diagonal_l1() || pair.l1_linf();
    if (method == KMethod::ClosedForm && !can_closed)
        throw std::invalid_argument("k_functional: no closed form for this pair");

    if (method != KMethod::ConvexSearch && can_closed)
        return pair.diagonal_l1() ? closed_form_diag_l1(pair, t, x)
                                  : closed_form_l1_linf(pair, t, x);
    return convex_search(pair, t, x, opts);
}

double j_functional(const WeightedSpacePair& pair, double t, std::span<const double> x) {
    if (!(t > 0.0)) throw std::invalid_argument("j_functional: t must be positive");
    return std::max(pair.first(x), t * pair.second(x));
}

std::pair<double, double> sum_and_intersection_seminorms(const WeightedSpacePair& pair,
                                                         std::span<const double> x) {
    const double sum = k_functional(pair, 1.0, x).value;
    const double inter = std::max(pair.first(x), pair.second(x));
    return {sum, inter};
}

}  // namespace snlb
