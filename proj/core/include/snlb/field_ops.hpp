#pragma once

#include <array>
#include <span>
#include <vector>

#include "snlb/grid.hpp"

namespace snlb {

/// tau_h f(x) = f(x - h). Lattice shifts are exact cyclic index moves;
/// off-lattice shifts go through the spectral modulation e^{-i<xi,h>},
/// exact for band-limited data.
GridFunction translate(const GridFunction& f, const std::array<double, 3>& h);

/// Delta_h f(x) = f(x + h) - f(x).
GridFunction difference(const GridFunction& f, const std::array<double, 3>& h);

/// ((L^n / prod N) sum |f|^p)^(1/p); max norm for p = infinity. p >= 1.
double lp_norm(const GridFunction& f, double p);

enum class ModulusStrategy {
    Lattice,          // lattice shifts |h| <= t only
    LatticeSpectral,  // plus off-lattice directions at each requested radius
};

struct ModulusProfile {
    std::vector<double> radius;  // increasing
    std::vector<double> value;   // omega_p; nondecreasing by construction
    double at(double t) const;   // value at the largest radius <= t
};

/// omega_p over an increasing radius grid. Candidates accumulate across
/// radii, so the profile is monotone by construction. Off-lattice candidates
/// use 2 directions (+-t) in 1-d, `angular` in 2-d/3-d (default 64).
ModulusProfile modulus_profile(const GridFunction& f, std::span<const double> radii, double p,
                               ModulusStrategy strategy = ModulusStrategy::LatticeSpectral,
                               int angular = 0);

double modulus_of_continuity(const GridFunction& f, double t, double p,
                             ModulusStrategy strategy = ModulusStrategy::LatticeSpectral,
                             int angular = 0);

/// Partial derivatives via the multiplier i*xi_a (Nyquist row dropped so
/// real fields stay real).
std::vector<GridFunction> spectral_gradient(const GridFunction& f);

/// [f]_{W^{1,p}} = sum_a || d_a f ||_{L^p}.
double w1p_seminorm(const GridFunction& f, double p);

}  // namespace snlb
