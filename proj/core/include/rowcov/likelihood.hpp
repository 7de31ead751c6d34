#pragma once

#include "rowcov/linalg.hpp"

namespace rowcov {

// -2 log-likelihood of the mean-zero matrix normal model profiled over
// Sigma at Sigma_hat = Y^T Psi^{-1} Y / n:
//   p log|Psi| + n log|Y^T Psi^{-1} Y / n| + n p
// (additive constants dropped; all comparisons are differences).
double profile_loglik_neg2(const Matrix& y, const Matrix& psi);

// -2 log-density of U on the Stiefel manifold:
//   p log|Psi| + n log|U^T Psi^{-1} U|.
double loglik_U_neg2(const Matrix& u, const Matrix& psi);

// -2 log-density of G = U U^T on the Grassmann manifold:
//   p log|Psi| + n log|I - (I - Psi^{-1}) G|.
// Equal to loglik_U_neg2 for any U with U U^T = G.
double loglik_G_neg2(const GrassmannPoint& g, const Matrix& psi);

}  // namespace rowcov
