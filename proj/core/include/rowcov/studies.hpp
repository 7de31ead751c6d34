#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "rowcov/design.hpp"
#include "rowcov/sampling.hpp"

namespace rowcov {

struct PowerCurveRow {
  Index n = 0;
  Index p = 0;
  double omega = 0.0;
  double alpha = 0.05;
  double power = 0.0;
  std::string method;  // "analytic" or "monte_carlo"; "warning" for skipped
  int S = 0;
  double mc_se = 0.0;
};

using PowerCurveTable = std::vector<PowerCurveRow>;

// CSV with columns exactly: n,p,omega,alpha,power,method,S,mc_se.
std::string power_curve_csv(const PowerCurveTable& table);

enum class PRule { Fixed, HalfN };

// Analytic UMPI power over a grid; trivial (n, p) cells are emitted as
// warning rows instead of being dropped silently.
PowerCurveTable umpi_power_curve(const std::vector<Index>& n_list, PRule rule,
                                 Index fixed_p,
                                 const std::vector<double>& omega_grid,
                                 double alpha);

// Monte Carlo estimate of the spiked-test power under Psi = I + omega c c^T
// in the mean-zero model with c = e_1; complements the analytic formula.
double mc_spiked_power(double omega, Index n, Index p, double alpha, int S,
                       std::uint64_t seed);

// Monte Carlo power of the maxEP test under Psi = I + omega c_pair c_pair^T
// in the mean-zero model, null-calibrated with S_null replicates.
PowerCurveTable maxep_power_curve(const std::vector<Index>& n_list, PRule rule,
                                  Index fixed_p,
                                  const std::vector<double>& omega_grid,
                                  double alpha, int S_null, int S_power,
                                  std::uint64_t seed, Index pair_i = 0,
                                  Index pair_j = 1);

// Empirical demonstration that the average power of the UMPI test over
// uniform orthogonal eigenvector matrices E equals the level, even though
// the aligned-E power exceeds it.
struct BiasReport {
  double avg_power = 0.0;
  double se = 0.0;  // from the spread of per-E power estimates
  double power_aligned = 0.0;
  double power_analytic_aligned = 0.0;
  std::vector<double> per_e_power;
};

BiasReport bias_demonstration(const Vector& lambda, Index n, Index p,
                              double alpha, int S_outer, int S_inner,
                              std::uint64_t seed);

// Two-sample Kolmogorov-Smirnov distance.
double ks_two_sample(std::vector<double> a, std::vector<double> b);

// One-sample KS distance against a cdf.
double ks_one_sample(std::vector<double> sample,
                     const std::function<double(double)>& cdf);

// Null samples of c^T G(R) c (c = e_1) under each elliptical family, and
// pairwise KS distances; all should be small because the null distribution
// of the invariant statistic is family-free.
struct EllipticalInvarianceReport {
  std::vector<std::string> family_names;
  std::vector<std::vector<double>> samples;
  Matrix ks;  // pairwise KS distances
};

EllipticalInvarianceReport elliptical_null_invariance(
    Index n, Index p, const DesignSpec& design,
    const std::vector<EllipticalFamily>& families, int S, std::uint64_t seed);

// -2 log-likelihood core p log|Psi| + n log|U^T Psi^{-1} U| along the path
// Psi = E diag(1,...,1, 10^-k, ..., 10^-k) E^T with E = [U U_perp] aligned
// to the data, k = 1..steps. Evaluated in log-eigenvalue space so the path
// can go far below -1e6 without overflow.
std::vector<double> unboundedness_path(const Matrix& y, int steps);

}  // namespace rowcov
