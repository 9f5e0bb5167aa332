#pragma once

#include <vector>

#include "snlb/littlewood_paley.hpp"

namespace snlb {

/// (s, p, q, sigma) with a constant screening radius sigma <= L/4.
struct ScreenedParams {
    double s = 0.5;
    double p = 2.0;
    double q = 2.0;
    double sigma = 1.0;

    void validate(const GridSpec& spec) const;
};

enum class ScreenedMode { Difference, Modulus };

struct ScreenedResult {
    double value = 0.0;
    double tail_small = 0.0;  // omitted inner radii, bounded via the gradient
};

/// Screened Besov seminorm: translations limited to |h| < sigma. The
/// difference mode integrates (|h|^{-s} ||Delta_h f||_p)^q |h|^{-n} dh in
/// polar form; the modulus mode integrates (t^{-s} omega_p(t,f))^q dt/t.
ScreenedResult screened_seminorm(const GridFunction& f, const ScreenedParams& params,
                                 ScreenedMode mode, const BesovOptions& opts = {});

/// Bracket [lo, hi] for (difference mode) / (modulus mode) implied by the
/// polar-coordinates comparison; depends on (n, s, q) only.
std::pair<double, double> screened_mode_bracket(int dim, double s, double q);

/// Averaging split against the cube Q(0, t/sqrt(n)): w is the running cube
/// average of f, v = f - w, and k_upper = ||v||_p + t [w]_{W^{1,p}} is an
/// upper envelope for K(t, f) on the (L^p, W^{1,p}) couple satisfying
///   omega_p(t,f)/2 <= K(t,f) <= k_upper <= (1 + n^{3/2}) omega_p(t,f).
struct CubeDecomposition {
    GridFunction v;
    GridFunction w;
    double t = 0.0;
    double k_upper = 0.0;
};

CubeDecomposition cube_k_decomposition(const GridFunction& f, double t, double p);

/// Unit-cube average split: Lo f = cube average, H f = f - Lo f.
/// Requires L >= 2 so the cube fits in the box.
std::pair<GridFunction, GridFunction> hl_decompose(const GridFunction& f);

/// High/low pass at frequency ~1: P+ = sum of bands j >= 0, P- = f - P+.
std::pair<GridFunction, GridFunction> highlow_decompose(const GridFunction& f,
                                                        const DyadicPartition& partition);

enum class FrequencyFamily { Btilde, Htilde };

struct FrequencySeminormResult {
    double value = 0.0;
    double low = 0.0;   // square-function part
    double high = 0.0;  // l^q part
    double dropped_mass = 0.0;
};

/// Mixed-form frequency seminorm: a square function over one half of the
/// bands and an l^q sum over the other. Btilde: square function on j < 0
/// with weight 2^{sj}, l^q on j >= 0 with weight 2^{rj}. Htilde mirrors.
FrequencySeminormResult generalized_frequency_seminorm(const GridFunction& f, double r, double s,
                                                       double p, double q,
                                                       const DyadicPartition& partition,
                                                       FrequencyFamily family);

/// ( sum_{xi != 0} min(|xi|^2, |xi|^{2s}) |f-hat(xi)|^2 )^{1/2}.
double strichartz_seminorm(const GridFunction& f, double s);

struct SuiteOptions {
    BesovOptions quadrature;
    double slack = 0.02;          // multiplicative slack on paper brackets
    double empirical_cap = 64.0;  // bracket for ratios the source leaves implicit
    double drift_budget = 0.20;   // refinement drift allowed on empirical ratios
    bool refine = true;           // re-run on the 2N grid for stability flags
};

/// Runs the equivalence battery on one function; the case id prefixes
/// every report.
std::vector<EquivalenceReport> equivalence_suite(const GridFunction& f, const std::string& case_id,
                                                 const ScreenedParams& params,
                                                 const DyadicPartition& partition,
                                                 const SuiteOptions& opts = {});

/// Exact spectral upsampling (zero padding) to a grid refined by `factor`.
GridFunction upsample(const GridFunction& f, int factor = 2);

}  // namespace snlb
