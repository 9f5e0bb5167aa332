#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "snlb/fft.hpp"

namespace snlb {

/// Uniform periodic grid on [0, L)^dim, sampled at size[a] points per axis.
struct GridSpec {
    int dim = 1;
    std::array<std::size_t, 3> size = {8, 1, 1};
    double length = 2.0 * 3.14159265358979323846;

    static GridSpec make(int dim, std::size_t n, double length);

    std::size_t total() const { return size[0] * size[1] * size[2]; }
    double spacing(int axis) const { return length / static_cast<double>(size[axis]); }
    double cell_volume() const;
    /// Sample coordinate along `axis` for lattice index i.
    double coord(int axis, std::size_t i) const { return spacing(axis) * static_cast<double>(i); }
    std::size_t flat(std::size_t i1, std::size_t i2 = 0, std::size_t i3 = 0) const {
        return (i3 * size[1] + i2) * size[0] + i1;
    }
    bool operator==(const GridSpec&) const = default;

    void validate() const;  // throws on unsupported sizes
};

enum class FieldTag { Real, Complex };

/// Samples of a periodic function. Real-tagged functions keep zero
/// imaginary parts; operations built from radial real multipliers preserve
/// the tag.
class GridFunction {
  public:
    GridFunction() = default;
    GridFunction(GridSpec spec, FieldTag tag);
    GridFunction(GridSpec spec, std::vector<cplx> samples, FieldTag tag);
    GridFunction(GridSpec spec, const std::vector<double>& samples);

    const GridSpec& spec() const { return spec_; }
    FieldTag tag() const { return tag_; }
    bool is_real() const { return tag_ == FieldTag::Real; }
    std::size_t size() const { return samples_.size(); }
    std::span<const cplx> samples() const { return samples_; }
    std::span<cplx> samples() { return samples_; }
    cplx operator[](std::size_t i) const { return samples_[i]; }
    cplx& operator[](std::size_t i) { return samples_[i]; }

    /// Largest |imag| over samples; should be ~0 for real-tagged data.
    double imag_residual() const;
    /// Zeroes imaginary parts (call after real-multiplier round trips).
    void realify();
    std::vector<double> real_samples() const;

    GridFunction& operator+=(const GridFunction& other);
    GridFunction& operator-=(const GridFunction& other);
    GridFunction& operator*=(double a);
    friend GridFunction operator+(GridFunction a, const GridFunction& b) { return a += b; }
    friend GridFunction operator-(GridFunction a, const GridFunction& b) { return a -= b; }
    friend GridFunction operator*(double a, GridFunction f) { return f *= a; }

  private:
    GridSpec spec_;
    std::vector<cplx> samples_;
    FieldTag tag_ = FieldTag::Real;
};

/// Discrete Fourier coefficients on the lattice xi_k = 2*pi*k/L with
/// k wrapped to [-N/2, N/2). Normalized so that the plain l^2 norm of the
/// coefficients equals the L^2 norm of the samples (discrete Plancherel).
class SpectralField {
  public:
    SpectralField() = default;
    SpectralField(GridSpec spec, std::vector<cplx> coeff, FieldTag tag);

    const GridSpec& spec() const { return spec_; }
    FieldTag tag() const { return tag_; }
    std::size_t size() const { return coeff_.size(); }
    std::span<const cplx> coeff() const { return coeff_; }
    std::span<cplx> coeff() { return coeff_; }

    /// Signed lattice frequency along `axis` for per-axis index i.
    double frequency(int axis, std::size_t i) const;
    /// |xi| at flat index.
    double freq_magnitude(std::size_t flat) const;
    /// Fills per-axis frequencies of a flat index into out[0..2].
    void frequencies(std::size_t flat, std::array<double, 3>& out) const;

    double l2_norm() const;
    /// max |c(-k) - conj(c(k))| over the lattice; ~0 for real-tagged fields.
    double conjugate_symmetry_residual() const;

  private:
    GridSpec spec_;
    std::vector<cplx> coeff_;
    FieldTag tag_ = FieldTag::Complex;
};

SpectralField transform(const GridFunction& f);
GridFunction inverse_transform(const SpectralField& F);

/// Fraction of spectral energy with |xi| above half the largest lattice
/// frequency. Operations on poorly resolved data should be treated with
/// suspicion when this exceeds ~1%.
double top_octave_energy_fraction(const GridFunction& f);

}  // namespace snlb
