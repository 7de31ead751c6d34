#include "rowcov/studies.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>

#include "rowcov/beta.hpp"
#include "rowcov/errors.hpp"
#include "rowcov/mc_test.hpp"
#include "rowcov/pairwise.hpp"
#include "rowcov/spiked.hpp"

namespace rowcov {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Disjoint seed spaces for the independent sampling stages of a study.
std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t tag) {
  return splitmix64(seed ^ splitmix64(tag));
}

void append_num(std::string& out, double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  out += buf;
}

Index p_for(PRule rule, Index fixed_p, Index n) {
  return rule == PRule::HalfN ? n / 2 : fixed_p;
}

// Spiked draw Y = (I + (sqrt(1+omega)-1) c c^T) Z without forming the n x n
// square root.
Matrix sample_spiked_rows(Index n, Index p, double omega, const Vector& c,
                          RngStream& rng) {
  Matrix y = sample_std_normal(n, p, rng);
  if (omega > 0.0) {
    y += (std::sqrt(1.0 + omega) - 1.0) * c * (c.transpose() * y);
  }
  return y;
}

}  // namespace

std::string power_curve_csv(const PowerCurveTable& table) {
  std::string out = "n,p,omega,alpha,power,method,S,mc_se\n";
  for (const PowerCurveRow& row : table) {
    out += std::to_string(row.n) + "," + std::to_string(row.p) + ",";
    append_num(out, row.omega);
    out += ",";
    append_num(out, row.alpha);
    out += ",";
    append_num(out, row.power);
    out += "," + row.method + "," + std::to_string(row.S) + ",";
    append_num(out, row.mc_se);
    out += "\n";
  }
  return out;
}

PowerCurveTable umpi_power_curve(const std::vector<Index>& n_list, PRule rule,
                                 Index fixed_p,
                                 const std::vector<double>& omega_grid,
                                 double alpha) {
  PowerCurveTable table;
  for (Index n : n_list) {
    const Index p = p_for(rule, fixed_p, n);
    for (double omega : omega_grid) {
      PowerCurveRow row;
      row.n = n;
      row.p = p;
      row.omega = omega;
      row.alpha = alpha;
      if (!(p > 0 && p < n)) {
        row.method = "warning";
        row.power = std::numeric_limits<double>::quiet_NaN();
      } else {
        row.method = "analytic";
        row.power = spiked_power(omega, n, p, alpha);
      }
      table.push_back(row);
    }
  }
  return table;
}

double mc_spiked_power(double omega, Index n, Index p, double alpha, int S,
                       std::uint64_t seed) {
  if (!(p > 0 && p < n)) {
    throw InvalidInputError("mc_spiked_power: need 0 < p < n");
  }
  const double critical =
      beta_quantile(1.0 - alpha, static_cast<double>(p) / 2.0,
                    static_cast<double>(n - p) / 2.0);
  const Vector c = Vector::Unit(n, 0);
  long long rejections = 0;
#pragma omp parallel for reduction(+ : rejections) schedule(static)
  for (int s = 0; s < S; ++s) {
    RngStream rng(seed, static_cast<std::uint64_t>(s));
    const Matrix y = sample_spiked_rows(n, p, omega, c, rng);
    if (spiked_statistic_of(y, c) > critical) ++rejections;
  }
  return static_cast<double>(rejections) / static_cast<double>(S);
}

PowerCurveTable maxep_power_curve(const std::vector<Index>& n_list, PRule rule,
                                  Index fixed_p,
                                  const std::vector<double>& omega_grid,
                                  double alpha, int S_null, int S_power,
                                  std::uint64_t seed, Index pair_i,
                                  Index pair_j) {
  PowerCurveTable table;
  const DesignSpec zero = DesignSpec::zero();
  for (Index n : n_list) {
    const Index p = p_for(rule, fixed_p, n);
    if (!(p > 0 && p < n)) {
      for (double omega : omega_grid) {
        table.push_back({n, p, omega, alpha,
                         std::numeric_limits<double>::quiet_NaN(), "warning",
                         0, 0.0});
      }
      continue;
    }
    const std::vector<double> null_stats = simulate_null_statistics(
        StatisticKind::MaxEp, Vector(), n, p, zero, S_null,
        sub_seed(seed, 1000 + static_cast<std::uint64_t>(n)));
    const double critical = mc_critical_value(null_stats, alpha);
    Vector c = Vector::Zero(n);
    c(pair_i) = c(pair_j) = 1.0 / std::sqrt(2.0);
    for (double omega : omega_grid) {
      long long rejections = 0;
      const std::uint64_t stage_seed =
          sub_seed(seed, 2000 + static_cast<std::uint64_t>(n) * 131 +
                             static_cast<std::uint64_t>(omega * 7919.0));
#pragma omp parallel for reduction(+ : rejections) schedule(static)
      for (int s = 0; s < S_power; ++s) {
        RngStream rng(stage_seed, static_cast<std::uint64_t>(s));
        const Matrix y = sample_spiked_rows(n, p, omega, c, rng);
        if (maxep_statistic_of(y).value > critical) ++rejections;
      }
      const double power =
          static_cast<double>(rejections) / static_cast<double>(S_power);
      PowerCurveRow row;
      row.n = n;
      row.p = p;
      row.omega = omega;
      row.alpha = alpha;
      row.power = power;
      row.method = "monte_carlo";
      row.S = S_power;
      row.mc_se =
          std::sqrt(power * (1.0 - power) / static_cast<double>(S_power));
      table.push_back(row);
    }
  }
  return table;
}

BiasReport bias_demonstration(const Vector& lambda, Index n, Index p,
                              double alpha, int S_outer, int S_inner,
                              std::uint64_t seed) {
  if (lambda.size() != n || lambda.minCoeff() <= 0.0) {
    throw InvalidInputError(
        "bias_demonstration: lambda must be a positive n-vector");
  }
  if (!(p > 0 && p < n)) {
    throw InvalidInputError("bias_demonstration: need 0 < p < n");
  }
  const double critical =
      beta_quantile(1.0 - alpha, static_cast<double>(p) / 2.0,
                    static_cast<double>(n - p) / 2.0);
  const Vector sqrt_lambda = lambda.cwiseSqrt();
  const Vector c = Vector::Unit(n, 0);
  const std::uint64_t e_seed = sub_seed(seed, 1);
  const std::uint64_t z_seed = sub_seed(seed, 2);

  const auto estimate_power = [&](const Matrix& scaled_e,
                                  std::uint64_t stream_base) {
    long long rejections = 0;
    for (int s = 0; s < S_inner; ++s) {
      RngStream rng(z_seed, stream_base + static_cast<std::uint64_t>(s));
      const Matrix y = scaled_e * sample_std_normal(n, p, rng);
      if (spiked_statistic_of(y, c) > critical) ++rejections;
    }
    return static_cast<double>(rejections) / static_cast<double>(S_inner);
  };

  BiasReport report;
  report.per_e_power.assign(static_cast<std::size_t>(S_outer), 0.0);
#pragma omp parallel for schedule(dynamic)
  for (int e = 0; e < S_outer; ++e) {
    RngStream rng_e(e_seed, static_cast<std::uint64_t>(e));
    const Matrix em = sample_uniform_orthogonal(n, rng_e);
    report.per_e_power[static_cast<std::size_t>(e)] = estimate_power(
        em * sqrt_lambda.asDiagonal(),
        static_cast<std::uint64_t>(e) * static_cast<std::uint64_t>(S_inner));
  }

  const double sum = std::accumulate(report.per_e_power.begin(),
                                     report.per_e_power.end(), 0.0);
  report.avg_power = sum / static_cast<double>(S_outer);
  double ss = 0.0;
  for (double v : report.per_e_power) {
    ss += (v - report.avg_power) * (v - report.avg_power);
  }
  report.se = std::sqrt(ss / (static_cast<double>(S_outer) - 1.0) /
                        static_cast<double>(S_outer));
  report.power_aligned = estimate_power(
      Matrix(sqrt_lambda.asDiagonal()),
      static_cast<std::uint64_t>(S_outer) * static_cast<std::uint64_t>(S_inner));
  report.power_analytic_aligned =
      spiked_power(lambda(0) - 1.0, n, p, alpha);
  return report;
}

double ks_two_sample(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty()) {
    throw InvalidInputError("ks_two_sample: empty sample");
  }
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= x) ++i;
    while (j < b.size() && b[j] <= x) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na -
                             static_cast<double>(j) / nb));
  }
  return d;
}

double ks_one_sample(std::vector<double> sample,
                     const std::function<double(double)>& cdf) {
  if (sample.empty()) {
    throw InvalidInputError("ks_one_sample: empty sample");
  }
  std::sort(sample.begin(), sample.end());
  const double n = static_cast<double>(sample.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const double f = cdf(sample[i]);
    d = std::max(d, std::abs(f - static_cast<double>(i + 1) / n));
    d = std::max(d, std::abs(f - static_cast<double>(i) / n));
  }
  return d;
}

EllipticalInvarianceReport elliptical_null_invariance(
    Index n, Index p, const DesignSpec& design,
    const std::vector<EllipticalFamily>& families, int S, std::uint64_t seed) {
  if (is_trivial(n, p, design)) {
    throw TrivialRegimeError("elliptical_null_invariance: trivial regime");
  }
  const Reduction bases = residualize(Matrix::Ones(n, p), design);
  const Vector ctilde =
      reduce_direction(Vector::Unit(n, 0), bases.HX).ctilde;

  EllipticalInvarianceReport report;
  for (std::size_t f = 0; f < families.size(); ++f) {
    report.family_names.push_back(families[f].name());
    std::vector<double> stats(static_cast<std::size_t>(S));
    const std::uint64_t fam_seed = sub_seed(seed, 100 + f);
#pragma omp parallel for schedule(static)
    for (int s = 0; s < S; ++s) {
      RngStream rng(fam_seed, static_cast<std::uint64_t>(s));
      const Matrix z = sample_elliptical_z(n, p, families[f], rng);
      const Matrix ztilde = bases.HX.H * z * bases.HW.H.transpose();
      stats[static_cast<std::size_t>(s)] =
          spiked_statistic_of(ztilde, ctilde);
    }
    report.samples.push_back(std::move(stats));
  }
  const auto k = static_cast<Index>(families.size());
  report.ks = Matrix::Zero(k, k);
  for (Index i = 0; i < k; ++i) {
    for (Index j = i + 1; j < k; ++j) {
      const double d = ks_two_sample(report.samples[static_cast<std::size_t>(i)],
                                     report.samples[static_cast<std::size_t>(j)]);
      report.ks(i, j) = report.ks(j, i) = d;
    }
  }
  return report;
}

std::vector<double> unboundedness_path(const Matrix& y, int steps) {
  const ReducedSvd svd = reduced_svd(y);
  const Index n = y.rows();
  const Index p = y.cols();
  if (svd.rank != p || p >= n) {
    throw InvalidInputError("unboundedness_path: need full-rank Y with n > p");
  }
  // With E = [U U_perp] and Lambda = (1,...,1, t,...,t) the likelihood core
  // p log|Psi| + n log|U^T Psi^{-1} U| collapses to p (n-p) log(t):
  // |Psi| = t^{n-p} and U^T Psi^{-1} U = I_p.
  std::vector<double> values(static_cast<std::size_t>(steps));
  const double ln10 = std::log(10.0);
  for (int k = 1; k <= steps; ++k) {
    values[static_cast<std::size_t>(k - 1)] =
        -static_cast<double>(p) * static_cast<double>(n - p) *
        static_cast<double>(k) * ln10;
  }
  return values;
}

}  // namespace rowcov
