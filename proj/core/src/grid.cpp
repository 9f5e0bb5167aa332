#include "snlb/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace snlb {

GridSpec GridSpec::make(int dim, std::size_t n, double length) {
    GridSpec s;
    s.dim = dim;
    s.size = {1, 1, 1};
    for (int a = 0; a < dim; ++a) s.size[a] = n;
    s.length = length;
    s.validate();
    return s;
}

double GridSpec::cell_volume() const {
    double v = 1.0;
    for (int a = 0; a < dim; ++a) v *= spacing(a);
    return v;
}

void GridSpec::validate() const {
    if (dim < 1 || dim > 3) throw std::invalid_argument("GridSpec: dim must be 1, 2, or 3");
    if (!(length > 0.0)) throw std::invalid_argument("GridSpec: length must be positive");
    for (int a = 0; a < dim; ++a) {
        if (size[a] < 8 || !is_pow2(size[a]))
            throw std::invalid_argument("GridSpec: sizes must be powers of two, at least 8");
    }
    for (int a = dim; a < 3; ++a)
        if (size[a] != 1) throw std::invalid_argument("GridSpec: unused extents must be 1");
}

GridFunction::GridFunction(GridSpec spec, FieldTag tag)
    : spec_(spec), samples_(spec.total(), cplx(0.0, 0.0)), tag_(tag) {
    spec_.validate();
}

GridFunction::GridFunction(GridSpec spec, std::vector<cplx> samples, FieldTag tag)
    : spec_(spec), samples_(std::move(samples)), tag_(tag) {
    spec_.validate();
    if (samples_.size() != spec_.total()) throw std::invalid_argument("GridFunction: sample count mismatch");
}

GridFunction::GridFunction(GridSpec spec, const std::vector<double>& samples)
    : spec_(spec), samples_(samples.begin(), samples.end()), tag_(FieldTag::Real) {
    spec_.validate();
    if (samples_.size() != spec_.total()) throw std::invalid_argument("GridFunction: sample count mismatch");
}

double GridFunction::imag_residual() const {
    double m = 0.0;
    for (const cplx& v : samples_) m = std::max(m, std::abs(v.imag()));
    return m;
}

void GridFunction::realify() {
    for (cplx& v : samples_) v = cplx(v.real(), 0.0);
}

std::vector<double> GridFunction::real_samples() const {
    std::vector<double> out(samples_.size());
    for (std::size_t i = 0; i < samples_.size(); ++i) out[i] = samples_[i].real();
    return out;
}

GridFunction& GridFunction::operator+=(const GridFunction& other) {
    if (!(spec_ == other.spec_)) throw std::invalid_argument("GridFunction: spec mismatch");
    for (std::size_t i = 0; i < samples_.size(); ++i) samples_[i] += other.samples_[i];
    if (other.tag_ == FieldTag::Complex) tag_ = FieldTag::Complex;
    return *this;
}

GridFunction& GridFunction::operator-=(const GridFunction& other) {
    if (!(spec_ == other.spec_)) throw std::invalid_argument("GridFunction: spec mismatch");
    for (std::size_t i = 0; i < samples_.size(); ++i) samples_[i] -= other.samples_[i];
    if (other.tag_ == FieldTag::Complex) tag_ = FieldTag::Complex;
    return *this;
}

GridFunction& GridFunction::operator*=(double a) {
    for (cplx& v : samples_) v *= a;
    return *this;
}

SpectralField::SpectralField(GridSpec spec, std::vector<cplx> coeff, FieldTag tag)
    : spec_(spec), coeff_(std::move(coeff)), tag_(tag) {
    spec_.validate();
    if (coeff_.size() != spec_.total()) throw std::invalid_argument("SpectralField: coefficient count mismatch");
}

double SpectralField::frequency(int axis, std::size_t i) const {
    const std::size_t n = spec_.size[axis];
    const auto k = static_cast<long long>(i);
    const long long half = static_cast<long long>(n) / 2;
    const long long wrapped = (k < half) ? k : k - static_cast<long long>(n);
    return 2.0 * std::numbers::pi * static_cast<double>(wrapped) / spec_.length;
}

void SpectralField::frequencies(std::size_t flat, std::array<double, 3>& out) const {
    const std::size_t n1 = spec_.size[0], n2 = spec_.size[1];
    out[0] = frequency(0, flat % n1);
    out[1] = frequency(1, (flat / n1) % n2);
    out[2] = frequency(2, flat / (n1 * n2));
}

double SpectralField::freq_magnitude(std::size_t flat) const {
    std::array<double, 3> xi{};
    frequencies(flat, xi);
    return std::sqrt(xi[0] * xi[0] + xi[1] * xi[1] + xi[2] * xi[2]);
}

double SpectralField::l2_norm() const {
    double s = 0.0;
    for (const cplx& c : coeff_) s += std::norm(c);
    return std::sqrt(s);
}

double SpectralField::conjugate_symmetry_residual() const {
    const std::size_t n1 = spec_.size[0], n2 = spec_.size[1], n3 = spec_.size[2];
    double m = 0.0;
    for (std::size_t i3 = 0; i3 < n3; ++i3)
        for (std::size_t i2 = 0; i2 < n2; ++i2)
            for (std::size_t i1 = 0; i1 < n1; ++i1) {
                const std::size_t j1 = (n1 - i1) % n1;
                const std::size_t j2 = (n2 - i2) % n2;
                const std::size_t j3 = (n3 - i3) % n3;
                const cplx a = coeff_[spec_.flat(i1, i2, i3)];
                const cplx b = coeff_[spec_.flat(j1, j2, j3)];
                m = std::max(m, std::abs(b - std::conj(a)));
            }
    return m;
}

SpectralField transform(const GridFunction& f) {
    const GridSpec& spec = f.spec();
    std::vector<cplx> data(f.samples().begin(), f.samples().end());
    fft_nd(data, spec.size, -1);
    const double scale =
        std::pow(spec.length, 0.5 * spec.dim) / static_cast<double>(spec.total());
    for (cplx& c : data) c *= scale;
    return SpectralField(spec, std::move(data), f.tag());
}

GridFunction inverse_transform(const SpectralField& F) {
    const GridSpec& spec = F.spec();
    std::vector<cplx> data(F.coeff().begin(), F.coeff().end());
    fft_nd(data, spec.size, +1);
    const double scale = 1.0 / std::pow(spec.length, 0.5 * spec.dim);
    for (cplx& c : data) c *= scale;
    GridFunction g(spec, std::move(data), F.tag());
    if (g.is_real()) {
        // radial real multipliers keep conjugate symmetry; drop fp dust
        g.realify();
    }
    return g;
}

double top_octave_energy_fraction(const GridFunction& f) {
    SpectralField F = transform(f);
    double top = 0.0, tot = 0.0, ximax = 0.0;
    for (std::size_t i = 0; i < F.size(); ++i) ximax = std::max(ximax, F.freq_magnitude(i));
    for (std::size_t i = 0; i < F.size(); ++i) {
        const double e = std::norm(F.coeff()[i]);
        tot += e;
        if (F.freq_magnitude(i) > 0.5 * ximax) top += e;
    }
    return tot > 0.0 ? top / tot : 0.0;
}

}  // namespace snlb
