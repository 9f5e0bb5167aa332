#pragma once

#include <span>
#include <vector>

#include "snlb/interpolation.hpp"
#include "snlb/k_functional.hpp"

namespace snlb {

/// phi(t) = t^s / (1 + ln(t)^2), the admissible slack profile used to
/// schedule near-optimality of the scale witnesses.
double slack_profile(double t, double s);
/// inf of phi over [r^{k-1}, r^{k+1}] (exact; phi has two critical points).
double slack_profile_inf(double r, int k, double s);

/// Telescoped differences xi_k = y_k - y_{k-1} of near-optimal K witnesses
/// at scales r^k. xi(k) is defined for |k| <= depth; the witnesses extend
/// one step below. Partial sums converge to x in the sum seminorm.
struct FundamentalDecomposition {
    double r = 2.0;
    double eps = 0.0;
    double s = 0.5;
    int depth = 0;
    std::vector<std::vector<double>> xi;  // index m <-> k = m - depth
    double residual = 0.0;                // [x - sum xi]_Sigma
    bool witnesses_ok = true;             // every scale met its eps * c_k budget

    std::span<const double> at(int k) const { return xi[static_cast<std::size_t>(k + depth)]; }
};

FundamentalDecomposition fundamental_decomposition(const WeightedSpacePair& pair,
                                                   std::span<const double> x, double r, double eps,
                                                   int depth, double s = 0.5,
                                                   KMethod method = KMethod::Auto);

/// Largest over sampled t of J(t, u(t)) / [ (log r)^{-1} r (1+r) (K(t,x) +
/// eps*phi(t)) ], where u is the step function xi_k / log r on
/// [r^{k-1}, r^k). At most 1 when the decomposition satisfies its bound.
double fundamental_bound_ratio(const WeightedSpacePair& pair, std::span<const double> x,
                               const FundamentalDecomposition& dec, int samples_per_interval = 3);

/// || { r^{sk} J(r^{-k}, xi_k) }_k ||_{l^q} for a centered candidate
/// sequence xi (index m <-> k = m - offset). Entry k pairs with scale
/// r^{-k}; feed a fundamental decomposition reversed. Throws if the
/// sequence does not reconstruct x within residual_tol * [x]_Sigma.
double j_method_upper_bound(const WeightedSpacePair& pair, double s, double q,
                            std::span<const double> x,
                            const std::vector<std::vector<double>>& xi, int offset, double r,
                            double residual_tol = 1e-6);

/// Near-optimal splitting of the sum characterization at finite sigma:
/// eta lands in the second factor with [eta]_1 <= sigma^{-1} K(sigma,x) + eps/sigma,
/// and bound0 is the discrete J-method value certifying x - eta in the
/// untruncated interpolation space.
struct SumCharWitness {
    std::vector<double> eta;
    double bound0 = 0.0;       // || { 2^{sk} J(sigma 2^{-k}, xi_k) } ||_{l^q, k in N}
    double bound1 = 0.0;       // [eta]_1
    double residual = 0.0;     // [x - eta - sum xi]_Sigma
    int terms = 0;
    std::vector<std::vector<double>> xi;
};

SumCharWitness sum_characterization_witness(const WeightedSpacePair& pair,
                                            const InterpolationParams& params,
                                            std::span<const double> x, double eps,
                                            KMethod method = KMethod::Auto);

}  // namespace snlb
