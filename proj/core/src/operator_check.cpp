#include "snlb/operator_check.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace snlb {

std::vector<double> Matrix::apply(std::span<const double> x) const {
    if (x.size() != cols) throw std::invalid_argument("Matrix::apply: dimension mismatch");
    std::vector<double> y(rows, 0.0);
    for (std::size_t i = 0; i < rows; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < cols; ++j) s += at(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m{n, n, std::vector<double>(n * n, 0.0)};
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

namespace {

double uniform01(std::mt19937_64& g) { return static_cast<double>(g() >> 11) * 0x1.0p-53; }

double factor_bound(const FiniteSeminorm& dom, const FiniteSeminorm& ran, const Matrix& T,
                    std::mt19937_64& g, int probes) {
    const std::size_t n = dom.dimension();
    double best = 0.0;
    std::vector<double> x(n, 0.0);
    auto consider = [&](std::span<const double> v) {
        const double dn = dom(v);
        const double rn = ran(T.apply(v));
        if (dn <= 1e-14 * std::max(1.0, rn)) {
            if (rn > 1e-12)
                throw std::runtime_error(
                    "operator_interpolation_check: operator does not preserve the annihilator");
            return;
        }
        best = std::max(best, rn / dn);
    };
    for (std::size_t j = 0; j < n; ++j) {
        std::fill(x.begin(), x.end(), 0.0);
        x[j] = 1.0;
        consider(x);
    }
    for (int k = 0; k < probes; ++k) {
        for (double& v : x) v = 2.0 * uniform01(g) - 1.0;
        consider(x);
    }
    return best;
}

}  // namespace

OperatorCheckReport operator_interpolation_check(const WeightedSpacePair& domain,
                                                 const WeightedSpacePair& range, const Matrix& T,
                                                 const InterpolationParams& params, int samples,
                                                 std::uint64_t seed, double slack) {
    params.validate();
    if (T.cols != domain.dimension() || T.rows != range.dimension())
        throw std::invalid_argument("operator_interpolation_check: matrix shape mismatch");

    std::mt19937_64 gen(seed);
    OperatorCheckReport rep;
    rep.samples = samples;
    rep.c0 = factor_bound(domain.first, range.first, T, gen, 64);
    rep.c1 = factor_bound(domain.second, range.second, T, gen, 64);

    const bool zero0 = rep.c0 == 0.0, zero1 = rep.c1 == 0.0;
    bool t_nonzero = false;
    for (double v : T.a) t_nonzero |= (v != 0.0);
    if ((zero0 || zero1) && t_nonzero)
        throw std::runtime_error("operator_interpolation_check: zero factor bound for nonzero operator");
    if (!t_nonzero) {
        rep.pass = true;
        return rep;
    }

    InterpolationParams shifted = params;
    if (!std::isinf(params.sigma)) shifted.sigma = params.sigma * rep.c1 / rep.c0;
    const double scale = std::pow(rep.c0, 1.0 - params.s) * std::pow(rep.c1, params.s);

    std::vector<double> x(domain.dimension());
    for (int k = 0; k < samples; ++k) {
        for (double& v : x) v = 2.0 * uniform01(gen) - 1.0;
        const double lhs = interpolation_seminorm(range, params, T.apply(x)).value;
        const SeminormEstimate rhs = interpolation_seminorm(domain, shifted, x);
        const double bound = scale * (rhs.value + rhs.tail_low + rhs.tail_high + rhs.quad_error);
        if (bound > 0.0) rep.max_ratio = std::max(rep.max_ratio, lhs / bound);
    }
    rep.pass = rep.max_ratio <= 1.0 + slack;
    return rep;
}

}  // namespace snlb
