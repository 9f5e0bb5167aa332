#include "snlb/field_ops.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace snlb {

namespace {

bool lattice_shift(const GridSpec& spec, const std::array<double, 3>& h, std::array<long long, 3>& cells) {
    for (int a = 0; a < 3; ++a) cells[a] = 0;
    for (int a = 0; a < spec.dim; ++a) {
        const double m = h[a] / spec.spacing(a);
        const double r = std::round(m);
        if (std::abs(m - r) > 1e-12 * std::max(1.0, std::abs(m))) return false;
        cells[a] = static_cast<long long>(r);
    }
    for (int a = spec.dim; a < 3; ++a)
        if (h[a] != 0.0) throw std::invalid_argument("translate: shift in unused axis");
    return true;
}

GridFunction cyclic_shift(const GridFunction& f, const std::array<long long, 3>& m) {
    const GridSpec& s = f.spec();
    GridFunction out(s, f.tag());
    const long long n1 = static_cast<long long>(s.size[0]);
    const long long n2 = static_cast<long long>(s.size[1]);
    const long long n3 = static_cast<long long>(s.size[2]);
    auto wrap = [](long long i, long long n) { return ((i % n) + n) % n; };
    for (long long i3 = 0; i3 < n3; ++i3)
        for (long long i2 = 0; i2 < n2; ++i2)
            for (long long i1 = 0; i1 < n1; ++i1) {
                const std::size_t src = f.spec().flat(
                    static_cast<std::size_t>(wrap(i1 - m[0], n1)),
                    static_cast<std::size_t>(wrap(i2 - m[1], n2)),
                    static_cast<std::size_t>(wrap(i3 - m[2], n3)));
                out[f.spec().flat(static_cast<std::size_t>(i1), static_cast<std::size_t>(i2),
                                  static_cast<std::size_t>(i3))] = f[src];
            }
    return out;
}

double lp_of_difference_lattice(const GridFunction& f, const std::array<long long, 3>& m, double p) {
    // || f(. + m*h) - f ||_p without materializing the shift
    const GridSpec& s = f.spec();
    const long long n1 = static_cast<long long>(s.size[0]);
    const long long n2 = static_cast<long long>(s.size[1]);
    const long long n3 = static_cast<long long>(s.size[2]);
    auto wrap = [](long long i, long long n) { return ((i % n) + n) % n; };
    double acc = 0.0;
    const bool inf = std::isinf(p);
    for (long long i3 = 0; i3 < n3; ++i3)
        for (long long i2 = 0; i2 < n2; ++i2)
            for (long long i1 = 0; i1 < n1; ++i1) {
                const std::size_t src = s.flat(static_cast<std::size_t>(wrap(i1 + m[0], n1)),
                                               static_cast<std::size_t>(wrap(i2 + m[1], n2)),
                                               static_cast<std::size_t>(wrap(i3 + m[2], n3)));
                const double d = std::abs(f[src] - f[s.flat(static_cast<std::size_t>(i1),
                                                            static_cast<std::size_t>(i2),
                                                            static_cast<std::size_t>(i3))]);
                if (inf)
                    acc = std::max(acc, d);
                else
                    acc += std::pow(d, p);
            }
    if (inf) return acc;
    return std::pow(s.cell_volume() * acc, 1.0 / p);
}

std::vector<std::array<double, 3>> sphere_directions(int dim, int count) {
    std::vector<std::array<double, 3>> dirs;
    if (dim == 1) {
        dirs.push_back({1.0, 0.0, 0.0});
        return dirs;
    }
    if (dim == 2) {
        // || Delta_{-h} f ||_p = || Delta_h f ||_p, so a half circle suffices
        for (int k = 0; k < count; ++k) {
            const double th = std::numbers::pi * (static_cast<double>(k) + 0.5) / count;
            dirs.push_back({std::cos(th), std::sin(th), 0.0});
        }
        return dirs;
    }
    // Fibonacci hemisphere
    const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
    for (int k = 0; k < count; ++k) {
        const double z = (static_cast<double>(k) + 0.5) / count;  // upper hemisphere
        const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        const double th = 2.0 * std::numbers::pi * k / golden;
        dirs.push_back({r * std::cos(th), r * std::sin(th), z});
    }
    return dirs;
}

}  // namespace

GridFunction translate(const GridFunction& f, const std::array<double, 3>& h) {
    std::array<long long, 3> cells{};
    if (lattice_shift(f.spec(), h, cells)) return cyclic_shift(f, cells);
    SpectralField F = transform(f);
    std::array<double, 3> xi{};
    for (std::size_t i = 0; i < F.size(); ++i) {
        F.frequencies(i, xi);
        const double phase = -(xi[0] * h[0] + xi[1] * h[1] + xi[2] * h[2]);
        F.coeff()[i] *= cplx(std::cos(phase), std::sin(phase));
    }
    return inverse_transform(F);
}

GridFunction difference(const GridFunction& f, const std::array<double, 3>& h) {
    const std::array<double, 3> neg = {-h[0], -h[1], -h[2]};
    GridFunction shifted = translate(f, neg);  // tau_{-h} f (x) = f(x + h)
    shifted -= f;
    return shifted;
}

double lp_norm(const GridFunction& f, double p) {
    if (p < 1.0) throw std::invalid_argument("lp_norm: p must be >= 1");
    if (std::isinf(p)) {
        double m = 0.0;
        for (const cplx& v : f.samples()) m = std::max(m, std::abs(v));
        return m;
    }
    double acc = 0.0;
    for (const cplx& v : f.samples()) acc += std::pow(std::abs(v), p);
    return std::pow(f.spec().cell_volume() * acc, 1.0 / p);
}

double ModulusProfile::at(double t) const {
    double best = 0.0;
    for (std::size_t i = 0; i < radius.size() && radius[i] <= t * (1.0 + 1e-12); ++i) best = value[i];
    return best;
}

ModulusProfile modulus_profile(const GridFunction& f, std::span<const double> radii, double p,
                               ModulusStrategy strategy, int angular) {
    const GridSpec& spec = f.spec();
    if (radii.empty()) return {};
    for (std::size_t i = 0; i < radii.size(); ++i) {
        if (radii[i] <= 0.0 || (i > 0 && radii[i] <= radii[i - 1]))
            throw std::invalid_argument("modulus_profile: radii must be positive increasing");
    }
    const double tmax = radii.back();
    if (tmax > 0.25 * spec.length * (1.0 + 1e-12))
        throw std::invalid_argument("modulus_profile: radius exceeds L/4 (torus wrap)");
    if (angular <= 0) angular = (spec.dim == 1) ? 1 : 64;

    // lattice candidates, half-space only (opposite shifts have equal norms)
    struct Cand {
        double r;
        std::array<long long, 3> m;
    };
    std::vector<Cand> lattice;
    const long long b1 = static_cast<long long>(tmax / spec.spacing(0));
    const long long b2 = spec.dim > 1 ? static_cast<long long>(tmax / spec.spacing(1)) : 0;
    const long long b3 = spec.dim > 2 ? static_cast<long long>(tmax / spec.spacing(2)) : 0;
    for (long long m3 = -b3; m3 <= b3; ++m3)
        for (long long m2 = -b2; m2 <= b2; ++m2)
            for (long long m1 = -b1; m1 <= b1; ++m1) {
                if (m1 == 0 && m2 == 0 && m3 == 0) continue;
                if (m3 < 0 || (m3 == 0 && m2 < 0) || (m3 == 0 && m2 == 0 && m1 < 0)) continue;
                const double h1 = static_cast<double>(m1) * spec.spacing(0);
                const double h2 = spec.dim > 1 ? static_cast<double>(m2) * spec.spacing(1) : 0.0;
                const double h3 = spec.dim > 2 ? static_cast<double>(m3) * spec.spacing(2) : 0.0;
                const double r = std::sqrt(h1 * h1 + h2 * h2 + h3 * h3);
                if (r <= tmax * (1.0 + 1e-12)) lattice.push_back({r, {m1, m2, m3}});
            }
    std::sort(lattice.begin(), lattice.end(), [](const Cand& a, const Cand& b) { return a.r < b.r; });
    if (strategy == ModulusStrategy::Lattice && lattice.empty())
        throw std::invalid_argument("modulus_profile: no lattice shift within radius; use the spectral strategy");

    SpectralField F;
    std::vector<std::array<double, 3>> dirs;
    if (strategy == ModulusStrategy::LatticeSpectral) {
        F = transform(f);
        dirs = sphere_directions(spec.dim, angular);
    }

    ModulusProfile out;
    out.radius.assign(radii.begin(), radii.end());
    out.value.assign(radii.size(), 0.0);

    double running = 0.0;
    std::size_t next_lattice = 0;
    std::vector<cplx> scratch(F.size());
    for (std::size_t ri = 0; ri < radii.size(); ++ri) {
        const double t = radii[ri];
        while (next_lattice < lattice.size() && lattice[next_lattice].r <= t * (1.0 + 1e-12)) {
            running = std::max(running, lp_of_difference_lattice(f, lattice[next_lattice].m, p));
            ++next_lattice;
        }
        if (strategy == ModulusStrategy::LatticeSpectral) {
            std::array<double, 3> xi{};
            for (const auto& d : dirs) {
                const std::array<double, 3> h = {t * d[0], t * d[1], t * d[2]};
                scratch.assign(F.coeff().begin(), F.coeff().end());
                for (std::size_t i = 0; i < scratch.size(); ++i) {
                    F.frequencies(i, xi);
                    const double phase = xi[0] * h[0] + xi[1] * h[1] + xi[2] * h[2];
                    scratch[i] *= cplx(std::cos(phase) - 1.0, std::sin(phase));
                }
                SpectralField D(spec, scratch, FieldTag::Complex);
                GridFunction diff = inverse_transform(D);
                running = std::max(running, lp_norm(diff, p));
            }
        }
        out.value[ri] = running;
    }
    return out;
}

double modulus_of_continuity(const GridFunction& f, double t, double p, ModulusStrategy strategy,
                             int angular) {
    const double radii[1] = {t};
    return modulus_profile(f, radii, p, strategy, angular).value[0];
}

std::vector<GridFunction> spectral_gradient(const GridFunction& f) {
    const GridSpec& spec = f.spec();
    SpectralField F = transform(f);
    std::vector<GridFunction> grad;
    grad.reserve(spec.dim);
    for (int a = 0; a < spec.dim; ++a) {
        std::vector<cplx> c(F.coeff().begin(), F.coeff().end());
        const std::size_t n1 = spec.size[0], n2 = spec.size[1];
        for (std::size_t i = 0; i < c.size(); ++i) {
            std::size_t ia = (a == 0) ? i % n1 : (a == 1) ? (i / n1) % n2 : i / (n1 * n2);
            // the self-conjugate Nyquist row has no real-valued derivative
            if (ia == spec.size[a] / 2) {
                c[i] = 0.0;
                continue;
            }
            c[i] *= cplx(0.0, F.frequency(a, ia));
        }
        grad.push_back(inverse_transform(SpectralField(spec, std::move(c), f.tag())));
    }
    return grad;
}

double w1p_seminorm(const GridFunction& f, double p) {
    double acc = 0.0;
    for (const GridFunction& g : spectral_gradient(f)) acc += lp_norm(g, p);
    return acc;
}

}  // namespace snlb
