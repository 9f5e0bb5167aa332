#include "snlb/littlewood_paley.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace snlb {

namespace {

double bump(double t) { return t > 0.0 ? std::exp(-1.0 / t) : 0.0; }

GridFunction apply_multiplier(const SpectralField& F, std::span<const double> m, FieldTag tag) {
    std::vector<cplx> c(F.coeff().begin(), F.coeff().end());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] *= m[i];
    return inverse_transform(SpectralField(F.spec(), std::move(c), tag));
}

}  // namespace

double DyadicPartition::cutoff(double r) {
    if (r <= 1.0) return 1.0;
    if (r >= 2.0) return 0.0;
    const double a = bump(2.0 - r);
    const double b = bump(r - 1.0);
    return a / (a + b);
}

double DyadicPartition::psi_radial(double r) { return cutoff(r) - cutoff(2.0 * r); }

DyadicPartition DyadicPartition::build(const GridSpec& spec) {
    spec.validate();
    DyadicPartition part;
    part.spec_ = spec;

    SpectralField probe(spec, std::vector<cplx>(spec.total(), cplx(0.0, 0.0)), FieldTag::Complex);
    part.mag_.resize(spec.total());
    double ximin = std::numeric_limits<double>::infinity(), ximax = 0.0;
    for (std::size_t i = 0; i < spec.total(); ++i) {
        const double m = probe.freq_magnitude(i);
        part.mag_[i] = m;
        if (m > 0.0) {
            ximin = std::min(ximin, m);
            ximax = std::max(ximax, m);
        }
    }
    part.j_min_ = static_cast<int>(std::floor(std::log2(ximin)));
    part.j_max_ = static_cast<int>(std::ceil(std::log2(ximax)));

    part.bands_.resize(static_cast<std::size_t>(part.j_max_ - part.j_min_ + 1));
    for (int j = part.j_min_; j <= part.j_max_; ++j) {
        std::vector<double>& band = part.bands_[static_cast<std::size_t>(j - part.j_min_)];
        band.resize(spec.total());
        const double scale = std::exp2(static_cast<double>(-j));
        for (std::size_t i = 0; i < spec.total(); ++i)
            band[i] = part.mag_[i] > 0.0 ? psi_radial(scale * part.mag_[i]) : 0.0;
    }
    return part;
}

std::span<const double> DyadicPartition::band_multiplier(int j) const {
    if (!in_band(j)) throw std::invalid_argument("DyadicPartition: band outside representable range");
    return bands_[static_cast<std::size_t>(j - j_min_)];
}

double DyadicPartition::partition_residual() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < mag_.size(); ++i) {
        if (mag_[i] == 0.0) continue;
        double s = 0.0;
        for (const auto& band : bands_) s += band[i];
        worst = std::max(worst, std::abs(s - 1.0));
    }
    return worst;
}

GridFunction project(const GridFunction& f, int j, const DyadicPartition& partition) {
    if (!(f.spec() == partition.spec())) throw std::invalid_argument("project: spec mismatch");
    return apply_multiplier(transform(f), partition.band_multiplier(j), f.tag());
}

std::vector<GridFunction> project_bands(const GridFunction& f, const DyadicPartition& partition) {
    if (!(f.spec() == partition.spec())) throw std::invalid_argument("project_bands: spec mismatch");
    SpectralField F = transform(f);
    std::vector<GridFunction> out;
    out.reserve(static_cast<std::size_t>(partition.j_max() - partition.j_min() + 1));
    for (int j = partition.j_min(); j <= partition.j_max(); ++j)
        out.push_back(apply_multiplier(F, partition.band_multiplier(j), f.tag()));
    return out;
}

std::vector<double> band_lp_norms(const GridFunction& f, double p, const DyadicPartition& partition) {
    std::vector<double> norms;
    for (const GridFunction& g : project_bands(f, partition)) norms.push_back(lp_norm(g, p));
    return norms;
}

GridFunction riesz_potential(const GridFunction& f, double s, const DyadicPartition& partition) {
    if (!(f.spec() == partition.spec())) throw std::invalid_argument("riesz_potential: spec mismatch");
    SpectralField F = transform(f);
    const double l2 = F.l2_norm();
    if (std::abs(F.coeff()[0]) > 1e-12 * std::max(l2, 1e-300))
        throw std::invalid_argument("riesz_potential: nonzero mean beyond tolerance");
    std::vector<cplx> c(F.coeff().begin(), F.coeff().end());
    const auto mag = partition.freq_magnitude();
    c[0] = 0.0;
    for (std::size_t i = 1; i < c.size(); ++i)
        c[i] *= mag[i] > 0.0 ? std::pow(mag[i], s) : 0.0;
    return inverse_transform(SpectralField(f.spec(), std::move(c), f.tag()));
}

BandSeminormResult riesz_seminorm(const GridFunction& f, double s, double p,
                                  const DyadicPartition& partition) {
    const std::vector<GridFunction> bands = project_bands(f, partition);
    GridFunction sq(f.spec(), FieldTag::Real);
    for (int j = partition.j_min(); j <= partition.j_max(); ++j) {
        const GridFunction& g = bands[static_cast<std::size_t>(j - partition.j_min())];
        const double w = std::exp2(2.0 * s * j);
        for (std::size_t i = 0; i < sq.size(); ++i)
            sq[i] += w * std::norm(g[i]);
    }
    for (std::size_t i = 0; i < sq.size(); ++i) sq[i] = std::sqrt(sq[i].real());

    BandSeminormResult out;
    out.value = lp_norm(sq, p);
    // the zero mode is the only lattice frequency with no band coverage
    SpectralField F = transform(f);
    const double tot = F.l2_norm();
    out.dropped_mass = tot > 0.0 ? std::norm(F.coeff()[0]) / (tot * tot) : 0.0;
    return out;
}

double besov_lipschitz_seminorm(const GridFunction& f, double s, double p, double q,
                                const DyadicPartition& partition) {
    const std::vector<double> norms = band_lp_norms(f, p, partition);
    double acc = 0.0, sup = 0.0;
    for (int j = partition.j_min(); j <= partition.j_max(); ++j) {
        const double term = std::exp2(s * j) * norms[static_cast<std::size_t>(j - partition.j_min())];
        if (std::isinf(q))
            sup = std::max(sup, term);
        else
            acc += std::pow(term, q);
    }
    return std::isinf(q) ? sup : std::pow(acc, 1.0 / q);
}

BandSeminormResult lp_square_seminorm(const GridFunction& f, double p,
                                      const DyadicPartition& partition) {
    return riesz_seminorm(f, 0.0, p, partition);
}

EquivalenceReport sobolev_frequency_check(const GridFunction& f, double p,
                                          const DyadicPartition& partition, double c_low,
                                          double c_high, double slack) {
    const double lhs = w1p_seminorm(f, p);
    const double rhs = riesz_seminorm(f, 1.0, p, partition).value;
    return EquivalenceReport::make("", "w1p-vs-riesz1", lhs, rhs, c_low, c_high, true, slack);
}

BesovResult besov_seminorm(const GridFunction& f, double s, double p, double q, BesovMode mode,
                           const BesovOptions& opts) {
    if (!(s > 0.0 && s < 1.0)) throw std::invalid_argument("besov_seminorm: s in (0,1)");
    const double radius = opts.radius > 0.0 ? opts.radius : 0.25 * f.spec().length;
    if (radius > 0.25 * f.spec().length * (1.0 + 1e-12))
        throw std::invalid_argument("besov_seminorm: radius exceeds L/4 (torus wrap)");
    const int n = opts.radial_nodes;
    std::vector<double> radii(static_cast<std::size_t>(n));
    const double lo = radius * std::exp2(-opts.octaves);
    const double du = std::log(radius / lo) / (n - 1);
    for (int i = 0; i < n; ++i) radii[static_cast<std::size_t>(i)] = lo * std::exp(du * i);
    radii.back() = radius;

    BesovResult out;
    const double wgrad = w1p_seminorm(f, p);

    if (mode == BesovMode::Modulus) {
        const ModulusProfile prof = modulus_profile(f, radii, p, opts.strategy, opts.angular);
        if (std::isinf(q)) {
            double sup = 0.0;
            for (int i = 0; i < n; ++i)
                sup = std::max(sup, std::pow(radii[i], -s) * prof.value[i]);
            out.value = sup;
            out.tail_small = std::pow(lo, 1.0 - s) * wgrad;
        } else {
            double acc = 0.0;
            for (int i = 0; i + 1 < n; ++i) {
                const double ga = std::pow(std::pow(radii[i], -s) * prof.value[i], q);
                const double gb = std::pow(std::pow(radii[i + 1], -s) * prof.value[i + 1], q);
                acc += 0.5 * (ga + gb) * du;
            }
            out.value = std::pow(acc, 1.0 / q);
            // omega_p(t) <= t [f]_{W^{1,p}} below the grid,
            // omega_p <= 2 ||f||_p beyond the torus cut
            out.tail_small = wgrad * std::pow(lo, 1.0 - s) * std::pow((1.0 - s) * q, -1.0 / q);
            out.tail_large =
                2.0 * lp_norm(f, p) * std::pow(radius, -s) * std::pow(s * q, -1.0 / q);
        }
        return out;
    }

    // polar difference integral: direction sum x radial log grid
    const int angular = opts.angular > 0 ? opts.angular : (f.spec().dim == 1 ? 1 : 64);
    SpectralField F = transform(f);
    std::vector<std::array<double, 3>> dirs;
    if (f.spec().dim == 1) {
        dirs.push_back({1.0, 0.0, 0.0});
    } else if (f.spec().dim == 2) {
        for (int k = 0; k < angular; ++k) {
            const double th = std::numbers::pi * (k + 0.5) / angular;
            dirs.push_back({std::cos(th), std::sin(th), 0.0});
        }
    } else {
        const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
        for (int k = 0; k < angular; ++k) {
            const double z = (k + 0.5) / angular;
            const double r2 = std::sqrt(std::max(0.0, 1.0 - z * z));
            const double th = 2.0 * std::numbers::pi * k / golden;
            dirs.push_back({r2 * std::cos(th), r2 * std::sin(th), z});
        }
    }
    // surface measure represented by both half-spheres
    const double sphere = (f.spec().dim == 1) ? 2.0
                          : (f.spec().dim == 2)
                              ? 2.0 * std::numbers::pi
                              : 4.0 * std::numbers::pi;
    const double wdir = sphere / static_cast<double>(dirs.size());

    std::vector<cplx> scratch(F.size());
    std::array<double, 3> xi{};
    std::vector<double> gq(static_cast<std::size_t>(n), 0.0);  // direction-integrated |.|^q at each radius
    double sup = 0.0;
    for (int i = 0; i < n; ++i) {
        const double t = radii[static_cast<std::size_t>(i)];
        for (const auto& d : dirs) {
            const std::array<double, 3> h = {t * d[0], t * d[1], t * d[2]};
            scratch.assign(F.coeff().begin(), F.coeff().end());
            for (std::size_t m = 0; m < scratch.size(); ++m) {
                F.frequencies(m, xi);
                const double phase = xi[0] * h[0] + xi[1] * h[1] + xi[2] * h[2];
                scratch[m] *= cplx(std::cos(phase) - 1.0, std::sin(phase));
            }
            const double dn = lp_norm(
                inverse_transform(SpectralField(f.spec(), scratch, FieldTag::Complex)), p);
            if (std::isinf(q))
                sup = std::max(sup, std::pow(t, -s) * dn);
            else
                gq[static_cast<std::size_t>(i)] += wdir * std::pow(dn, q);
        }
    }
    if (std::isinf(q)) {
        out.value = sup;
        out.tail_small = std::pow(lo, 1.0 - s) * wgrad;
        return out;
    }
    double acc = 0.0;
    for (int i = 0; i + 1 < n; ++i) {
        const double ga = std::pow(radii[i], -s * q) * gq[i];
        const double gb = std::pow(radii[i + 1], -s * q) * gq[i + 1];
        acc += 0.5 * (ga + gb) * du;
    }
    out.value = std::pow(acc, 1.0 / q);
    out.tail_small =
        std::pow(sphere, 1.0 / q) * wgrad * std::pow(lo, 1.0 - s) * std::pow((1.0 - s) * q, -1.0 / q);
    out.tail_large = std::pow(sphere, 1.0 / q) * 2.0 * lp_norm(f, p) * std::pow(radius, -s) *
                     std::pow(s * q, -1.0 / q);
    return out;
}

}  // namespace snlb
