#include "snlb/screened.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace snlb {

namespace {

double sinc(double z) { return z == 0.0 ? 1.0 : std::sin(z) / z; }

GridFunction cube_average(const GridFunction& f, double side) {
    SpectralField F = transform(f);
    std::array<double, 3> xi{};
    std::vector<cplx> c(F.coeff().begin(), F.coeff().end());
    for (std::size_t i = 0; i < c.size(); ++i) {
        F.frequencies(i, xi);
        double m = 1.0;
        for (int a = 0; a < f.spec().dim; ++a) m *= sinc(0.5 * xi[a] * side);
        c[i] *= m;
    }
    return inverse_transform(SpectralField(f.spec(), std::move(c), f.tag()));
}

double sphere_measure(int dim) {
    if (dim == 1) return 2.0;
    if (dim == 2) return 2.0 * std::numbers::pi;
    return 4.0 * std::numbers::pi;
}

double ball_measure(int dim) {
    if (dim == 1) return 2.0;
    if (dim == 2) return std::numbers::pi;
    return 4.0 * std::numbers::pi / 3.0;
}

}  // namespace

void ScreenedParams::validate(const GridSpec& spec) const {
    if (!(s > 0.0 && s < 1.0)) throw std::invalid_argument("ScreenedParams: s in (0,1)");
    if (!(p >= 1.0)) throw std::invalid_argument("ScreenedParams: p >= 1");
    if (!(q >= 1.0)) throw std::invalid_argument("ScreenedParams: q >= 1");
    if (!(sigma > 0.0) || sigma > 0.25 * spec.length * (1.0 + 1e-12))
        throw std::invalid_argument("ScreenedParams: need 0 < sigma <= L/4");
}

ScreenedResult screened_seminorm(const GridFunction& f, const ScreenedParams& params,
                                 ScreenedMode mode, const BesovOptions& opts) {
    params.validate(f.spec());
    BesovOptions o = opts;
    o.radius = params.sigma;
    const BesovResult r = besov_seminorm(
        f, params.s, params.p, params.q,
        mode == ScreenedMode::Difference ? BesovMode::DifferenceIntegral : BesovMode::Modulus, o);
    // the integral stops at sigma by definition; only the inner cut is a tail
    return {r.value, r.tail_small};
}

std::pair<double, double> screened_mode_bracket(int dim, double s, double q) {
    if (std::isinf(q)) return {1.0 / 1.25, 1.25};  // same sup over slightly different candidates
    const double surface = sphere_measure(dim);
    const double hi = std::pow(surface, 1.0 / q);
    const double lo =
        1.0 / (std::pow(2.0, dim + 1) * ball_measure(dim) / s * std::pow(surface, (q - 1.0) / q));
    return {lo, hi};
}

CubeDecomposition cube_k_decomposition(const GridFunction& f, double t, double p) {
    if (!(t > 0.0) || t > 0.25 * f.spec().length * (1.0 + 1e-12))
        throw std::invalid_argument("cube_k_decomposition: need 0 < t <= L/4");
    const double side = t / std::sqrt(static_cast<double>(f.spec().dim));
    CubeDecomposition d;
    d.t = t;
    d.w = cube_average(f, side);
    d.v = f - d.w;
    d.k_upper = lp_norm(d.v, p) + t * w1p_seminorm(d.w, p);
    return d;
}

std::pair<GridFunction, GridFunction> hl_decompose(const GridFunction& f) {
    if (f.spec().length < 2.0)
        throw std::invalid_argument("hl_decompose: the unit cube needs L >= 2");
    GridFunction lo = cube_average(f, 1.0);
    GridFunction hi = f - lo;
    return {hi, lo};
}

std::pair<GridFunction, GridFunction> highlow_decompose(const GridFunction& f,
                                                        const DyadicPartition& partition) {
    if (!(f.spec() == partition.spec()))
        throw std::invalid_argument("highlow_decompose: spec mismatch");
    SpectralField F = transform(f);
    std::vector<double> mult(f.spec().total(), 0.0);
    for (int j = std::max(0, partition.j_min()); j <= partition.j_max(); ++j) {
        const auto band = partition.band_multiplier(j);
        for (std::size_t i = 0; i < mult.size(); ++i) mult[i] += band[i];
    }
    std::vector<cplx> c(F.coeff().begin(), F.coeff().end());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] *= mult[i];
    GridFunction plus = inverse_transform(SpectralField(f.spec(), std::move(c), f.tag()));
    GridFunction minus = f - plus;
    return {plus, minus};
}

FrequencySeminormResult generalized_frequency_seminorm(const GridFunction& f, double r, double s,
                                                       double p, double q,
                                                       const DyadicPartition& partition,
                                                       FrequencyFamily family) {
    const std::vector<GridFunction> bands = project_bands(f, partition);
    const bool btilde = family == FrequencyFamily::Btilde;

    GridFunction sq(f.spec(), FieldTag::Real);
    double acc = 0.0, sup = 0.0;
    for (int j = partition.j_min(); j <= partition.j_max(); ++j) {
        const GridFunction& g = bands[static_cast<std::size_t>(j - partition.j_min())];
        const bool square_part = btilde ? (j < 0) : (j >= 0);
        if (square_part) {
            const double w = std::exp2(2.0 * s * j);
            for (std::size_t i = 0; i < sq.size(); ++i) sq[i] += w * std::norm(g[i]);
        } else {
            const double term = std::exp2(r * j) * lp_norm(g, p);
            if (std::isinf(q))
                sup = std::max(sup, term);
            else
                acc += std::pow(term, q);
        }
    }
    for (std::size_t i = 0; i < sq.size(); ++i) sq[i] = std::sqrt(sq[i].real());

    FrequencySeminormResult out;
    out.low = btilde ? lp_norm(sq, p) : (std::isinf(q) ? sup : std::pow(acc, 1.0 / q));
    out.high = btilde ? (std::isinf(q) ? sup : std::pow(acc, 1.0 / q)) : lp_norm(sq, p);
    out.value = out.low + out.high;
    SpectralField F = transform(f);
    const double tot = F.l2_norm();
    out.dropped_mass = tot > 0.0 ? std::norm(F.coeff()[0]) / (tot * tot) : 0.0;
    return out;
}

double strichartz_seminorm(const GridFunction& f, double s) {
    SpectralField F = transform(f);
    double acc = 0.0;
    for (std::size_t i = 0; i < F.size(); ++i) {
        const double m = F.freq_magnitude(i);
        if (m == 0.0) continue;
        acc += std::min(m * m, std::pow(m, 2.0 * s)) * std::norm(F.coeff()[i]);
    }
    return std::sqrt(acc);
}

GridFunction upsample(const GridFunction& f, int factor) {
    if (factor < 1) throw std::invalid_argument("upsample: factor >= 1");
    if (factor == 1) return f;
    const GridSpec& spec = f.spec();
    GridSpec fine = spec;
    for (int a = 0; a < spec.dim; ++a) fine.size[a] = spec.size[a] * static_cast<std::size_t>(factor);

    SpectralField F = transform(f);
    std::vector<cplx> big(fine.total(), cplx(0.0, 0.0));

    // each coarse wrapped index maps to the same frequency slot; a coarse
    // Nyquist coefficient splits evenly between +-Nyquist on the fine grid
    struct Target {
        long long k;
        double w;
    };
    auto targets = [&](std::size_t idx, int axis) {
        std::vector<Target> out;
        const long long n = static_cast<long long>(spec.size[axis]);
        const long long half = n / 2;
        long long k = static_cast<long long>(idx);
        if (k >= half) k -= n;
        if (k == -half && spec.size[axis] > 1)
            out = {{-half, 0.5}, {half, 0.5}};
        else
            out = {{k, 1.0}};
        return out;
    };
    auto fine_index = [&](long long k, int axis) {
        const long long n = static_cast<long long>(fine.size[axis]);
        return static_cast<std::size_t>(((k % n) + n) % n);
    };

    const std::size_t n1 = spec.size[0], n2 = spec.size[1];
    for (std::size_t i = 0; i < spec.total(); ++i) {
        const cplx c = F.coeff()[i];
        if (c == cplx(0.0, 0.0)) continue;
        for (const Target& t1 : targets(i % n1, 0))
            for (const Target& t2 : targets((i / n1) % n2, 1))
                for (const Target& t3 : targets(i / (n1 * n2), 2)) {
                    const std::size_t j =
                        (fine_index(t3.k, 2) * fine.size[1] + fine_index(t2.k, 1)) * fine.size[0] +
                        fine_index(t1.k, 0);
                    big[j] += c * (t1.w * t2.w * t3.w);
                }
    }
    return inverse_transform(SpectralField(fine, std::move(big), f.tag()));
}

std::vector<EquivalenceReport> equivalence_suite(const GridFunction& f, const std::string& case_id,
                                                 const ScreenedParams& params,
                                                 const DyadicPartition& partition,
                                                 const SuiteOptions& opts) {
    params.validate(f.spec());
    struct Measured {
        double lhs, rhs;
    };
    auto measure = [&](const GridFunction& g, const DyadicPartition& part) {
        std::vector<Measured> m;
        const GridSpec& spec = g.spec();

        // (a) polar difference integral against the modulus form
        const double diff =
            screened_seminorm(g, params, ScreenedMode::Difference, opts.quadrature).value;
        const double mod =
            screened_seminorm(g, params, ScreenedMode::Modulus, opts.quadrature).value;
        m.push_back({diff, mod});

        // (b) truncated K-seminorm through the cube upper envelope vs modulus
        {
            const int n = opts.quadrature.radial_nodes;
            const double lo = params.sigma * std::exp2(-opts.quadrature.octaves);
            const double du = std::log(params.sigma / lo) / (n - 1);
            double acc = 0.0, sup = 0.0, mod_acc = 0.0, mod_sup = 0.0;
            std::vector<double> radii(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) radii[static_cast<std::size_t>(i)] = lo * std::exp(du * i);
            radii.back() = params.sigma;
            const ModulusProfile prof =
                modulus_profile(g, radii, params.p, opts.quadrature.strategy, opts.quadrature.angular);
            std::vector<double> kv(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i)
                kv[static_cast<std::size_t>(i)] =
                    cube_k_decomposition(g, radii[static_cast<std::size_t>(i)], params.p).k_upper;
            for (int i = 0; i < n; ++i) {
                const double t = radii[static_cast<std::size_t>(i)];
                const double gk = std::pow(t, -params.s) * kv[static_cast<std::size_t>(i)];
                const double gm = std::pow(t, -params.s) * prof.value[static_cast<std::size_t>(i)];
                if (std::isinf(params.q)) {
                    sup = std::max(sup, gk);
                    mod_sup = std::max(mod_sup, gm);
                } else if (i + 1 < n) {
                    const double t2 = radii[static_cast<std::size_t>(i + 1)];
                    const double gk2 = std::pow(t2, -params.s) * kv[static_cast<std::size_t>(i + 1)];
                    const double gm2 =
                        std::pow(t2, -params.s) * prof.value[static_cast<std::size_t>(i + 1)];
                    acc += 0.5 * (std::pow(gk, params.q) + std::pow(gk2, params.q)) * du;
                    mod_acc += 0.5 * (std::pow(gm, params.q) + std::pow(gm2, params.q)) * du;
                }
            }
            const double kval = std::isinf(params.q) ? sup : std::pow(acc, 1.0 / params.q);
            const double mval = std::isinf(params.q) ? mod_sup : std::pow(mod_acc, 1.0 / params.q);
            m.push_back({kval, mval});
        }

        // (c) sigma -> rho truncation with the explicit constant
        {
            const double rho = std::min(2.0 * params.sigma, 0.25 * spec.length);
            ScreenedParams pr = params;
            pr.sigma = rho;
            const double at_rho =
                screened_seminorm(g, pr, ScreenedMode::Modulus, opts.quadrature).value;
            const double c = std::max(std::pow(rho / params.sigma, params.s),
                                      std::pow(params.sigma, 1.0 - params.s) *
                                          std::pow(rho, params.s - 1.0));
            m.push_back({mod, c * at_rho});
        }

        // (d) average/remainder split against the sigma = 1 seminorm
        {
            ScreenedParams unit = params;
            unit.sigma = 1.0;
            const double base =
                screened_seminorm(g, unit, ScreenedMode::Modulus, opts.quadrature).value;
            auto [hi, lo_part] = hl_decompose(g);
            BesovOptions bo = opts.quadrature;
            bo.radius = 0.0;  // full torus cut for the unscreened seminorm
            const double split = lp_norm(hi, params.p) +
                                 besov_seminorm(hi, params.s, params.p, params.q,
                                                BesovMode::Modulus, bo)
                                     .value +
                                 w1p_seminorm(lo_part, params.p);
            m.push_back({split, base});
        }

        // (e) p = q = 2 screened seminorm against the min-multiplier form
        {
            ScreenedParams two = params;
            two.p = 2.0;
            two.q = 2.0;
            two.sigma = 1.0;
            const double scr =
                screened_seminorm(g, two, ScreenedMode::Difference, opts.quadrature).value;
            m.push_back({scr, strichartz_seminorm(g, params.s)});
        }

        // (f) mixed frequency seminorm against its high/low split
        {
            const FrequencySeminormResult gen = generalized_frequency_seminorm(
                g, params.s, 1.0, params.p, params.q, part, FrequencyFamily::Btilde);
            auto [plus, minus] = highlow_decompose(g, part);
            const double split =
                besov_lipschitz_seminorm(plus, params.s, params.p, params.q, part) +
                riesz_seminorm(minus, 1.0, params.p, part).value;
            m.push_back({split, gen.value});
        }
        return m;
    };

    const std::vector<Measured> base = measure(f, partition);
    std::vector<Measured> fine;
    if (opts.refine) {
        const GridFunction f2 = upsample(f, 2);
        const DyadicPartition part2 = DyadicPartition::build(f2.spec());
        fine = measure(f2, part2);
    }

    const auto [mlo, mhi] = screened_mode_bracket(f.spec().dim, params.s, params.q);
    const double nhalf = std::pow(static_cast<double>(f.spec().dim), 1.5);
    struct Meta {
        const char* name;
        double lo, hi;
        bool empirical;
    };
    const Meta metas[6] = {
        {"screened-diff-vs-modulus", mlo, mhi, false},
        {"truncated-k-vs-modulus", 0.5, 1.0 + nhalf, false},
        {"sigma-vs-rho", 0.0, 1.0, false},
        {"hl-split-vs-screened", 1.0 / opts.empirical_cap, opts.empirical_cap, true},
        {"strichartz-vs-screened", 1.0 / opts.empirical_cap, opts.empirical_cap, true},
        {"freq-split-vs-gen", 1.0 / opts.empirical_cap, opts.empirical_cap, true},
    };

    std::vector<EquivalenceReport> out;
    for (std::size_t i = 0; i < 6; ++i) {
        EquivalenceReport r = EquivalenceReport::make(case_id, metas[i].name, base[i].lhs,
                                                      base[i].rhs, metas[i].lo, metas[i].hi,
                                                      metas[i].empirical, opts.slack);
        if (opts.refine) {
            const double r0 = base[i].rhs > 0.0 ? base[i].lhs / base[i].rhs : 0.0;
            const double r1 = fine[i].rhs > 0.0 ? fine[i].lhs / fine[i].rhs : 0.0;
            r.stable = (r0 == 0.0 && r1 == 0.0) ||
                       (r0 > 0.0 && r1 > 0.0 &&
                        std::abs(r1 / r0 - 1.0) <= opts.drift_budget);
            if (metas[i].empirical) r.pass = r.pass && r.stable;
        }
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace snlb
