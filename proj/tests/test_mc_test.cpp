#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "rowcov/errors.hpp"
#include "rowcov/mc_test.hpp"
#include "rowcov/rng.hpp"
#include "rowcov/sampling.hpp"
#include "rowcov/spiked.hpp"
#include "rowcov/studies.hpp"

using namespace rowcov;

TEST_CASE("null simulation is reproducible and seed-sensitive") {
  const DesignSpec design = DesignSpec::column_means();
  const std::vector<double> a = simulate_null_statistics(
      StatisticKind::MaxEp, Vector(), 12, 4, design, 500, 1);
  const std::vector<double> b = simulate_null_statistics(
      StatisticKind::MaxEp, Vector(), 12, 4, design, 500, 1);
  const std::vector<double> c = simulate_null_statistics(
      StatisticKind::MaxEp, Vector(), 12, 4, design, 500, 2);
  CHECK(a == b);
  CHECK(a != c);
  // Different seeds still target the same distribution.
  CHECK(ks_two_sample(a, c) < 0.15);
}

TEST_CASE("null simulation enforces its preconditions") {
  CHECK_THROWS_AS(simulate_null_statistics(StatisticKind::MaxEp, Vector(), 12,
                                           4, DesignSpec::zero(), 50, 1),
                  InvalidInputError);
  CHECK_THROWS_AS(simulate_null_statistics(StatisticKind::MaxEp, Vector(), 4,
                                           6, DesignSpec::zero(), 500, 1),
                  TrivialRegimeError);
}

TEST_CASE("critical value is the ceil((1-alpha)S) order statistic") {
  std::vector<double> sample(100);
  for (int i = 0; i < 100; ++i) sample[i] = double(i + 1);
  // ceil(0.95 * 100) = 95 -> the 95th smallest value.
  CHECK(mc_critical_value(sample, 0.05) == doctest::Approx(95.0));
  CHECK(mc_critical_value(sample, 0.5) == doctest::Approx(50.0));
  std::reverse(sample.begin(), sample.end());
  CHECK(mc_critical_value(sample, 0.05) == doctest::Approx(95.0));
}

TEST_CASE("add-one p-value conventions") {
  RngStream rng(109, 0);
  const Index n = 14, p = 4;
  const DesignSpec design = DesignSpec::zero();
  // A matrix with an enormous planted pair dependence should get the
  // smallest attainable p-value, 1/(S+1).
  Vector c = Vector::Zero(n);
  c(0) = c(1) = 1.0 / std::sqrt(2.0);
  const Matrix spiked =
      sym_sqrt_spiked(1e6, c) * sample_std_normal(n, p, rng);
  const int S = 500;
  const TestReport hot =
      mc_null_test(StatisticKind::MaxEp, spiked, design, Vector(), S, 0.05, 7);
  CHECK(hot.p_value == doctest::Approx(1.0 / (S + 1)).epsilon(1e-12));
  CHECK(hot.reject);
  CHECK(hot.method == "maxep");
  CHECK(hot.null_kind == "monte_carlo");
  CHECK(hot.argmax_i == 0);
  CHECK(hot.argmax_j == 1);
}

TEST_CASE("monte carlo test holds its level under the null") {
  const Index n = 16, p = 5;
  const DesignSpec design = DesignSpec::column_means();
  RngStream data_rng(113, 0);
  const int trials = 200, S = 400;
  int rejections = 0;
  std::vector<double> pvals;
  for (int t = 0; t < trials; ++t) {
    const Matrix y = sample_std_normal(n, p, data_rng);
    const TestReport rep = mc_null_test(StatisticKind::MaxEp, y, design,
                                        Vector(), S, 0.05, 1000 + t);
    if (rep.reject) ++rejections;
    pvals.push_back(rep.p_value);
  }
  // Level 0.05 within 3 binomial standard errors.
  CHECK(std::abs(rejections / double(trials) - 0.05) <
        3 * std::sqrt(0.05 * 0.95 / trials));
  // p-values are approximately uniform on (0, 1); the add-one convention
  // makes them discrete on {1,...,S+1}/(S+1), which inflates the KS a bit.
  const double d =
      ks_one_sample(pvals, [](double x) { return std::min(1.0, x); });
  CHECK(d < 0.15);
}

TEST_CASE("spiked statistic can also be calibrated by simulation") {
  // The Monte Carlo route and the exact beta null should give similar
  // critical values for the spiked statistic.
  const Index n = 20, p = 8;
  const DesignSpec design = DesignSpec::column_means();
  const Vector c = Vector::Unit(n, 0);
  std::vector<double> null_stats = simulate_null_statistics(
      StatisticKind::Spiked, c, n, p, design, 20000, 3);
  const double mc_crit = mc_critical_value(null_stats, 0.05);
  RngStream rng(127, 0);
  const SpikedTestResult exact =
      spiked_test(sample_std_normal(n, p, rng), design, c, 0.05);
  CHECK(mc_crit == doctest::Approx(exact.critical_value).epsilon(0.02));
}
