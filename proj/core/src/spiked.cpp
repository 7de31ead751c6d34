#include "rowcov/spiked.hpp"

#include <algorithm>
#include <cmath>

#include "rowcov/beta.hpp"
#include "rowcov/errors.hpp"

namespace rowcov {

namespace {

void require_unit(const Vector& c) {
  if (std::abs(c.norm() - 1.0) > 1e-8) {
    throw InvalidInputError("spiked statistic: c must be a unit vector");
  }
}

void require_dims(Index n, Index p) {
  if (!(p > 0 && p < n)) {
    throw InvalidInputError("spiked test: need 0 < p < n");
  }
}

}  // namespace

double spiked_statistic(const GrassmannPoint& g, const Vector& c) {
  require_unit(c);
  if (c.size() != g.G.rows()) {
    throw InvalidInputError("spiked statistic: dimension mismatch");
  }
  const double t = c.dot(g.G * c);
  return std::clamp(t, 0.0, 1.0);
}

double spiked_statistic_of(const Matrix& m, const Vector& c) {
  require_unit(c);
  const Vector mc = m.transpose() * c;
  Eigen::LLT<Matrix> llt(m.transpose() * m);
  if (llt.info() == Eigen::Success) {
    const double t = mc.dot(llt.solve(mc));
    if (std::isfinite(t)) return std::clamp(t, 0.0, 1.0);
  }
  return spiked_statistic(grassmann_projector(m), c);
}

SpikedTestResult spiked_test(const Matrix& y, const DesignSpec& design,
                             const Vector& c, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw InvalidInputError("spiked test: alpha must lie in (0, 1)");
  }
  if (is_trivial(y.rows(), y.cols(), design)) {
    throw TrivialRegimeError(
        "n_eff <= p_eff: every invariant statistic is constant and no "
        "invariant test has power above its level");
  }
  const Reduction red = residualize(y, design);
  const ReducedDirection dir = reduce_direction(c, red.HX);

  SpikedTestResult res;
  res.alpha = alpha;
  res.n_eff = red.n_eff;
  res.p_eff = red.p_eff;
  res.shape1 = static_cast<double>(red.p_eff) / 2.0;
  res.shape2 = static_cast<double>(red.n_eff - red.p_eff) / 2.0;
  // c~^T G(Ytilde) c~ equals c^T G(R) c.
  res.t = spiked_statistic_of(red.Ytilde, dir.ctilde);
  res.critical_value = beta_quantile(1.0 - alpha, res.shape1, res.shape2);
  res.p_value = 1.0 - beta_cdf(res.t, res.shape1, res.shape2);
  res.reject = res.t > res.critical_value;
  return res;
}

double spiked_power(double omega, Index n, Index p, double alpha) {
  const double type2 = spiked_type2(omega, n, p, alpha);
  // At omega = 0 the power is the level itself; return it without the
  // 1 - (1 - alpha) round trip, which is not exact in doubles.
  if (omega == 0.0) return alpha;
  return 1.0 - type2;
}

double spiked_type2(double omega, Index n, Index p, double alpha) {
  require_dims(n, p);
  if (omega < 0.0) {
    throw InvalidInputError("spiked_power: omega must be nonnegative");
  }
  // At omega = 0 the threshold is the critical value itself, so the type II
  // error is exactly 1 - alpha; returning it directly avoids the tiny
  // quantile/cdf round-trip error.
  if (omega == 0.0) return 1.0 - alpha;
  const double a = static_cast<double>(p) / 2.0;
  const double b = static_cast<double>(n - p) / 2.0;
  const double bq = beta_quantile(1.0 - alpha, a, b);
  const double threshold = bq / (1.0 + omega * (1.0 - bq));
  return beta_cdf(threshold, a, b);
}

double spiked_mle_omega(double t, Index n, Index p) {
  require_dims(n, p);
  if (!(t >= 0.0 && t < 1.0)) {
    if (t == 1.0) {
      throw NumericalError("spiked_mle_omega: MLE is infinite at t = 1");
    }
    throw InvalidInputError("spiked_mle_omega: t must lie in [0, 1)");
  }
  const double raw =
      (static_cast<double>(n) * t - static_cast<double>(p)) /
      (static_cast<double>(p) * (1.0 - t));
  return std::max(0.0, raw);
}

double spiked_lrt_stat(double t, Index n, Index p) {
  require_dims(n, p);
  if (!(t > 0.0 && t < 1.0)) {
    throw InvalidInputError("spiked_lrt_stat: t must lie in (0, 1)");
  }
  return static_cast<double>(n - p) * std::log1p(-t) +
         static_cast<double>(p) * std::log(t);
}

}  // namespace rowcov
