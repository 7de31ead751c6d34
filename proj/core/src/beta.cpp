#include "rowcov/beta.hpp"

#include <cmath>
#include <limits>

#include "rowcov/errors.hpp"

namespace rowcov {

namespace {

// Continued fraction for the incomplete beta function (modified Lentz).
double beta_cont_frac(double x, double a, double b) {
  constexpr int kMaxIter = 300;
  constexpr double kEps = std::numeric_limits<double>::epsilon();
  constexpr double kTiny = 1e-300;

  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < kEps) return h;
  }
  throw NumericalError("beta_cdf: continued fraction did not converge");
}

void check_shapes(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw InvalidInputError("beta: shape parameters must be positive");
  }
}

}  // namespace

double beta_cdf(double x, double a, double b) {
  check_shapes(a, b);
  if (!(x >= 0.0 && x <= 1.0)) {
    throw InvalidInputError("beta_cdf: x must lie in [0, 1]");
  }
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  const double log_front = std::lgamma(a + b) - std::lgamma(a) -
                           std::lgamma(b) + a * std::log(x) +
                           b * std::log1p(-x);
  // Symmetry switch keeps the continued fraction in its fast region.
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return std::exp(log_front) * beta_cont_frac(x, a, b) / a;
  }
  return 1.0 - std::exp(log_front) * beta_cont_frac(1.0 - x, b, a) / b;
}

double beta_pdf(double x, double a, double b) {
  check_shapes(a, b);
  if (x <= 0.0 || x >= 1.0) return 0.0;
  return std::exp(std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                  (a - 1.0) * std::log(x) + (b - 1.0) * std::log1p(-x));
}

double beta_quantile(double u, double a, double b) {
  check_shapes(a, b);
  if (!(u > 0.0 && u < 1.0)) {
    throw InvalidInputError("beta_quantile: u must lie in (0, 1)");
  }
  double lo = 0.0, hi = 1.0;
  double x = a / (a + b);
  while (hi - lo > 1e-12) {
    const double f = beta_cdf(x, a, b) - u;
    if (f > 0.0) {
      hi = x;
    } else {
      lo = x;
    }
    // Newton step from the current point, falling back to bisection when it
    // leaves the bracket or the density is too flat.
    const double dens = beta_pdf(x, a, b);
    double next = (dens > 1e-300) ? x - f / dens : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    x = next;
  }
  return x;
}

}  // namespace rowcov
