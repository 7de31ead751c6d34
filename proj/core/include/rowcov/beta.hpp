#pragma once

namespace rowcov {

// Regularized incomplete beta function I_x(a, b).
double beta_cdf(double x, double a, double b);

// Beta density, for quadrature checks and derivative steps.
double beta_pdf(double x, double a, double b);

// Inverse of beta_cdf: bracketed bisection refined with Newton steps,
// terminating at 1e-12 interval width.
double beta_quantile(double u, double a, double b);

}  // namespace rowcov
