#pragma once

#include "rowcov/design.hpp"
#include "rowcov/linalg.hpp"

namespace rowcov {

// Result of the exact rank-1 spiked test. Under the null the statistic is
// beta(shape1, shape2) distributed with shape1 = p_eff/2 and
// shape2 = (n_eff - p_eff)/2.
struct SpikedTestResult {
  double t = 0.0;
  double critical_value = 0.0;
  double p_value = 1.0;
  double alpha = 0.05;
  double shape1 = 0.0;
  double shape2 = 0.0;
  Index n_eff = 0;
  Index p_eff = 0;
  bool reject = false;
};

// t_c = c^T G c, the quadratic form of the maximal invariant in the spike
// direction; lies in [0, 1].
double spiked_statistic(const GrassmannPoint& g, const Vector& c);

// Fast path: c^T G(M) c for a full-column-rank matrix M via a Cholesky
// solve of M^T M, falling back to the SVD when M is rank deficient.
double spiked_statistic_of(const Matrix& m, const Vector& c);

// UMPI level-alpha test of omega = 0 vs omega > 0 in Psi = I + omega c c^T.
SpikedTestResult spiked_test(const Matrix& y, const DesignSpec& design,
                             const Vector& c, double alpha);

// Analytic power Pr(b > b_{1-alpha} / (1 + omega (1 - b_{1-alpha}))) with
// b ~ beta(p/2, (n-p)/2).
double spiked_power(double omega, Index n, Index p, double alpha);

// Type II error probability of the same test; useful when the power is
// within rounding distance of 1.
double spiked_type2(double omega, Index n, Index p, double alpha);

// MLE of omega given t = c^T G c, clipped at the boundary omega = 0.
double spiked_mle_omega(double t, Index n, Index p);

// Profile LRT statistic (n-p) log(1-t) + p log(t); maximized at t = p/n and
// not monotone in t.
double spiked_lrt_stat(double t, Index n, Index p);

}  // namespace rowcov
