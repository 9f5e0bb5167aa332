#pragma once

#include <vector>

#include "snlb/field_ops.hpp"
#include "snlb/grid.hpp"
#include "snlb/report.hpp"

namespace snlb {

/// Radial dyadic partition of unity on the frequency lattice. The profile
/// is psi(xi) = chi(|xi|) - chi(2|xi|) for a smooth cutoff chi that is 1 on
/// [0,1] and 0 on [2,inf), so the dyadic dilates telescope to 1 away from
/// the origin exactly. Band j covers the annulus 2^{j-1} < |xi| < 2^{j+1}.
class DyadicPartition {
  public:
    static DyadicPartition build(const GridSpec& spec);

    static double cutoff(double r);       // chi
    static double psi_radial(double r);   // chi(r) - chi(2r)

    const GridSpec& spec() const { return spec_; }
    int j_min() const { return j_min_; }
    int j_max() const { return j_max_; }
    bool in_band(int j) const { return j >= j_min_ && j <= j_max_; }

    /// psi(2^{-j} xi) tabulated per flat lattice index.
    std::span<const double> band_multiplier(int j) const;
    std::span<const double> freq_magnitude() const { return mag_; }

    /// max over nonzero lattice frequencies of |sum_j psi_j - 1|.
    double partition_residual() const;

  private:
    GridSpec spec_;
    int j_min_ = 0, j_max_ = 0;
    std::vector<double> mag_;
    std::vector<std::vector<double>> bands_;
};

/// pi_j f: multiply the spectrum by psi(2^{-j} .) and invert.
GridFunction project(const GridFunction& f, int j, const DyadicPartition& partition);

/// All band projections from a single forward transform.
std::vector<GridFunction> project_bands(const GridFunction& f, const DyadicPartition& partition);

/// l^p norms of the band projections, indexed j - j_min.
std::vector<double> band_lp_norms(const GridFunction& f, double p, const DyadicPartition& partition);

/// Multiplier |xi|^s on mean-zero data; the zero mode is annihilated.
/// Throws if |f-hat(0)| exceeds 1e-12 * ||f||_2.
GridFunction riesz_potential(const GridFunction& f, double s, const DyadicPartition& partition);

struct BandSeminormResult {
    double value = 0.0;
    double dropped_mass = 0.0;  // spectral energy fraction outside the band sum
};

/// || ( sum_j (2^{sj} |pi_j f|)^2 )^{1/2} ||_p over the representable band.
BandSeminormResult riesz_seminorm(const GridFunction& f, double s, double p,
                                  const DyadicPartition& partition);

/// l^q over the band of 2^{sj} || pi_j f ||_p.
double besov_lipschitz_seminorm(const GridFunction& f, double s, double p, double q,
                                const DyadicPartition& partition);

/// s = 0 square function, used against || f - mean ||_p.
BandSeminormResult lp_square_seminorm(const GridFunction& f, double p,
                                      const DyadicPartition& partition);

/// Ratio of the gradient seminorm to the s = 1 band seminorm.
EquivalenceReport sobolev_frequency_check(const GridFunction& f, double p,
                                          const DyadicPartition& partition, double c_low,
                                          double c_high, double slack = 0.0);

enum class BesovMode { Modulus, DifferenceIntegral };

struct BesovOptions {
    int radial_nodes = 256;
    double octaves = 20.0;  // radial range [R 2^-octaves, R]
    int angular = 0;        // 0 = dimension default
    double radius = 0.0;    // outer radius R; 0 = L/4 (torus cut)
    ModulusStrategy strategy = ModulusStrategy::LatticeSpectral;
};

struct BesovResult {
    double value = 0.0;
    double tail_small = 0.0;  // bound on the omitted inner radii
    double tail_large = 0.0;  // bound on the cut beyond L/4 (modulus mode)
};

/// Difference-quotient Besov seminorm over radii up to L/4, either through
/// the modulus of continuity or the polar h-integral.
BesovResult besov_seminorm(const GridFunction& f, double s, double p, double q, BesovMode mode,
                           const BesovOptions& opts = {});

}  // namespace snlb
