// Acceptance suite: one criterion per invocation (argv[1] in 1..9), each
// printing a single PASS/FAIL line. Exit code 0 on pass, 1 on fail.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "rowcov/beta.hpp"
#include "rowcov/design.hpp"
#include "rowcov/io.hpp"
#include "rowcov/likelihood.hpp"
#include "rowcov/mc_test.hpp"
#include "rowcov/pairwise.hpp"
#include "rowcov/rng.hpp"
#include "rowcov/sampling.hpp"
#include "rowcov/spiked.hpp"
#include "rowcov/studies.hpp"

using namespace rowcov;

namespace {

struct Check {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
  void note(const std::string& what) {
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

Matrix random_matrix(Index n, Index p, std::uint64_t seed,
                     std::uint64_t stream) {
  RngStream rng(seed, stream);
  return sample_std_normal(n, p, rng);
}

Matrix random_nonsingular(Index p, std::uint64_t seed, std::uint64_t stream) {
  for (;;) {
    Matrix a = random_matrix(p, p, seed, stream);
    if (std::abs(a.determinant()) > 1e-6) return a;
    ++stream;
  }
}

// ---------------------------------------------------------------------------
// 1. Exact null calibration of the spiked test.
Check criterion_1() {
  Check c;
  const Index n = 20, p = 8;
  const double alpha = 0.05;
  const int S = 100000;
  const std::vector<double> stats =
      simulate_null_statistics(StatisticKind::Spiked, Vector::Unit(n, 0), n, p,
                               DesignSpec::column_means(), S, 20260826);
  const double shape1 = 4.0, shape2 = 5.5;
  const double critical = beta_quantile(1.0 - alpha, shape1, shape2);
  int rejections = 0;
  for (double t : stats) {
    if (t > critical) ++rejections;
  }
  const double rate = double(rejections) / S;
  const double ks = ks_one_sample(
      stats, [&](double x) { return beta_cdf(x, shape1, shape2); });
  c.require(rate >= 0.045 && rate <= 0.055,
            "rejection rate " + fmt(rate) + " outside [0.045, 0.055]");
  c.require(ks <= 0.01, "KS distance " + fmt(ks) + " > 0.01");
  c.note("rate=" + fmt(rate) + " ks=" + fmt(ks));
  return c;
}

// ---------------------------------------------------------------------------
// 2. Analytic power formula vs Monte Carlo.
Check criterion_2() {
  Check c;
  const double alpha = 0.05;
  const int S = 100000;
  std::uint64_t tag = 0;
  double worst = 0.0;
  for (Index n : {Index(20), Index(40)}) {
    const Index p = n / 2;
    for (double omega : {1.0, 5.0, 10.0}) {
      const double analytic = spiked_power(omega, n, p, alpha);
      const double mc = mc_spiked_power(omega, n, p, alpha, S, 31000 + tag++);
      const double diff = std::abs(analytic - mc);
      worst = std::max(worst, diff);
      c.require(diff <= 0.02, "n=" + std::to_string(n) +
                                  " omega=" + fmt(omega) + " |analytic-mc|=" +
                                  fmt(diff) + " > 0.02");
    }
  }
  c.note("max |analytic - mc| = " + fmt(worst));
  return c;
}

// ---------------------------------------------------------------------------
// 3. Power-curve shape properties.
Check criterion_3() {
  Check c;
  const double alpha = 0.05;
  c.require(spiked_power(0.0, 40, 8, alpha) == alpha,
            "power at omega=0 differs from alpha");
  double prev = 0.0;
  bool monotone = true;
  for (double omega = 0.0; omega <= 20.0; omega += 0.25) {
    const double pw = spiked_power(omega, 40, 8, alpha);
    if (pw < prev - 1e-12) monotone = false;
    prev = pw;
  }
  c.require(monotone, "power not monotone nondecreasing in omega");
  const double p160 = spiked_power(2.0, 160, 8, alpha);
  const double p320 = spiked_power(2.0, 320, 8, alpha);
  c.require(std::abs(p320 - p160) <= 0.02,
            "|power(320) - power(160)| = " + fmt(std::abs(p320 - p160)));
  c.require(p160 < 0.99 && p320 < 0.99, "fixed-p power reached 0.99");
  c.note("power(160)=" + fmt(p160) + " power(320)=" + fmt(p320));
  return c;
}

// ---------------------------------------------------------------------------
// 4. Average power over random eigenvector bases collapses to the level.
Check criterion_4() {
  Check c;
  const Index n = 20, p = 10;
  Vector lambda = Vector::Ones(n);
  lambda(0) = 6.0;
  const BiasReport rep =
      bias_demonstration(lambda, n, p, 0.05, 500, 2000, 444);
  c.require(std::abs(rep.avg_power - 0.05) <= 3 * rep.se,
            "average power " + fmt(rep.avg_power) + " not within 3 SE (" +
                fmt(rep.se) + ") of 0.05");
  c.require(rep.power_aligned > 0.2,
            "aligned power " + fmt(rep.power_aligned) + " <= 0.2");
  c.note("avg=" + fmt(rep.avg_power) + " se=" + fmt(rep.se) +
         " aligned=" + fmt(rep.power_aligned));
  return c;
}

// ---------------------------------------------------------------------------
// 5. Maximal invariance across all four mean models, plus the trivial
// regime returning the residual projector.
Check criterion_5() {
  Check c;
  const Index n = 12, p = 5;
  const Matrix xfix = random_matrix(n, 2, 555, 0);
  const Matrix wfix = random_matrix(p, 2, 555, 1);
  const std::vector<DesignSpec> designs = {
      DesignSpec::zero(), DesignSpec::column_means(),
      DesignSpec::row_regression(xfix),
      DesignSpec::row_column_regression(xfix, wfix)};

  double worst = 0.0;
  std::uint64_t stream = 10;
  for (std::size_t d = 0; d < designs.size(); ++d) {
    const DesignSpec& design = designs[d];
    const Matrix x = design.row_design(n);
    for (int trial = 0; trial < 50; ++trial) {
      const Matrix y = random_matrix(n, p, 555, stream++);
      Matrix gy = y;
      if (design.kind == DesignKind::RowColumnRegression) {
        // The model's column-covariance group fixes the column design: it
        // acts by A = H_W^T Atilde H_W + W N together with row/column mean
        // shifts X C^T + D W^T.
        const ComplementBasis hw = complement_basis(wfix);
        const Index p_eff = p - wfix.cols();
        const Matrix atilde = random_nonsingular(p_eff, 555, stream++);
        const Matrix nmat = random_matrix(wfix.cols(), p, 555, stream++);
        const Matrix a = hw.H.transpose() * atilde * hw.H + wfix * nmat;
        const Matrix dmat = random_matrix(n, wfix.cols(), 555, stream++);
        gy = y * a.transpose() + dmat * wfix.transpose();
        if (x.cols() > 0) {
          const Matrix cmat = random_matrix(p, x.cols(), 555, stream++);
          gy += x * cmat.transpose();
        }
      } else {
        const Matrix a = random_nonsingular(p, 555, stream++);
        gy = y * a.transpose();
        if (x.cols() > 0) {
          const Matrix cmat = random_matrix(p, x.cols(), 555, stream++);
          gy += x * cmat.transpose();
        }
      }
      const Matrix g1 = grassmann_projector(residualize(y, design).R).G;
      const Matrix g2 = grassmann_projector(residualize(gy, design).R).G;
      worst = std::max(worst, (g1 - g2).cwiseAbs().maxCoeff());
    }
  }
  c.require(worst <= 1e-8,
            "invariance violated: max entrywise deviation " + fmt(worst));

  // Trivial regime: n_eff <= p_eff forces G(R) = P almost surely.
  double worst_trivial = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const Matrix y = random_matrix(6, 8, 556, std::uint64_t(trial));
    const DesignSpec design = DesignSpec::column_means();
    const Reduction red = residualize(y, design);
    const Matrix g = grassmann_projector(red.R).G;
    worst_trivial =
        std::max(worst_trivial, (g - red.HX.P).cwiseAbs().maxCoeff());
  }
  c.require(worst_trivial <= 1e-8,
            "trivial regime G != P: deviation " + fmt(worst_trivial));
  c.note("max invariance dev=" + fmt(worst) +
         " trivial dev=" + fmt(worst_trivial));
  return c;
}

// ---------------------------------------------------------------------------
// 6. Pairwise statistic identity and maxEP type-I calibration.
Check criterion_6() {
  Check c;
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const Index n = 10;
    const GrassmannPoint g =
        grassmann_projector(random_matrix(n, 4, 666, std::uint64_t(trial)));
    const PairwiseStatMatrix t = pairwise_stat_matrix(g);
    for (Index i = 0; i < n; ++i) {
      for (Index j = 0; j < n; ++j) {
        if (i == j) continue;
        Vector dir = Vector::Zero(n);
        dir(i) = dir(j) = 1.0 / std::sqrt(2.0);
        worst = std::max(worst,
                         std::abs(t.T(i, j) - spiked_statistic(g, dir)));
      }
    }
  }
  c.require(worst <= 1e-12,
            "pairwise identity deviation " + fmt(worst) + " > 1e-12");

  const Index n = 20, p = 8;
  const DesignSpec design = DesignSpec::column_means();
  const int outer = 2000, inner = 2000;
  int rejections = 0;
  RngStream data_rng(66601, 0);
  for (int trial = 0; trial < outer; ++trial) {
    const Matrix y = sample_std_normal(n, p, data_rng);
    const TestReport rep =
        mc_null_test(StatisticKind::MaxEp, y, design, Vector(), inner, 0.05,
                     70000 + std::uint64_t(trial));
    if (rep.reject) ++rejections;
  }
  const double rate = double(rejections) / outer;
  c.require(rate >= 0.04 && rate <= 0.06,
            "maxEP type-I rate " + fmt(rate) + " outside [0.04, 0.06]");
  c.note("pair identity dev=" + fmt(worst) + " type-I rate=" + fmt(rate));
  return c;
}

// ---------------------------------------------------------------------------
// 7. Elliptical null invariance.
Check criterion_7() {
  Check c;
  const EllipticalInvarianceReport rep = elliptical_null_invariance(
      20, 5, DesignSpec::column_means(),
      {EllipticalFamily::gaussian(), EllipticalFamily::matrix_t(3.0)}, 10000,
      777);
  const double ks = rep.ks(0, 1);
  c.require(ks <= 0.02, "gaussian vs matrix-t KS " + fmt(ks) + " > 0.02");
  c.note("ks=" + fmt(ks));
  return c;
}

// ---------------------------------------------------------------------------
// 8. Likelihood pathologies.
Check criterion_8() {
  Check c;
  const Matrix y = random_matrix(20, 10, 888, 0);
  const std::vector<double> path = unboundedness_path(y, 5000);
  c.require(path.back() < -1e6,
            "likelihood path bottom " + fmt(path.back()) + " >= -1e6");

  double worst = 0.0;
  RngStream rng(888, 1);
  for (int trial = 0; trial < 100; ++trial) {
    const Index n = 9, p = 3;
    const Matrix u = sample_stiefel_uniform(n, p, rng);
    const Matrix a = sample_std_normal(n, n, rng);
    const Matrix psi = a * a.transpose() + double(n) * Matrix::Identity(n, n);
    GrassmannPoint g;
    g.G = u * u.transpose();
    g.rank = p;
    worst = std::max(worst,
                     std::abs(loglik_U_neg2(u, psi) - loglik_G_neg2(g, psi)));
  }
  c.require(worst <= 1e-8,
            "subspace-density equivalence deviation " + fmt(worst));

  const Index n = 20, p = 8;
  const double step = 0.001;
  double best_t = step, best_v = spiked_lrt_stat(step, n, p);
  for (double t = step; t < 1.0 - step / 2; t += step) {
    const double v = spiked_lrt_stat(t, n, p);
    if (v > best_v) {
      best_v = v;
      best_t = t;
    }
  }
  c.require(std::abs(best_t - double(p) / n) <= step + 1e-12,
            "LRT argmax " + fmt(best_t) + " not at p/n");
  c.require(spiked_lrt_stat(0.9, n, p) < best_v,
            "LRT statistic not non-monotone as expected");
  c.note("path bottom=" + fmt(path.back()) + " equiv dev=" + fmt(worst) +
         " lrt argmax=" + fmt(best_t));
  return c;
}

// ---------------------------------------------------------------------------
// 9. Dataset reproduction (optional; requires user-supplied data under
// $ROWCOV_FLURY_DIR: turtles.csv + turtles_sex.csv, wines.csv +
// wines_country.csv; raw measurements, log-transformed here).
Check criterion_9() {
  Check c;
  const char* dir = std::getenv("ROWCOV_FLURY_DIR");
  if (dir == nullptr || std::string(dir).empty()) {
    c.note("skipped: set ROWCOV_FLURY_DIR to run the dataset checks");
    return c;
  }
  const std::string base = dir;
  const int S = 50000;

  const Matrix turtles = read_csv_matrix(base + "/turtles.csv")
                             .array()
                             .log()
                             .matrix();
  const TestReport t1 = mc_null_test(StatisticKind::MaxEp, turtles,
                                     DesignSpec::column_means(), Vector(), S,
                                     0.05, 99901);
  c.require(std::abs(t1.statistic - 0.344) <= 0.005,
            "turtles statistic " + fmt(t1.statistic));
  c.require(std::abs(t1.p_value - 0.16) <= 0.02,
            "turtles p-value " + fmt(t1.p_value));

  const Matrix wines =
      read_csv_matrix(base + "/wines.csv").array().log().matrix();
  const TestReport w1 = mc_null_test(StatisticKind::MaxEp, wines,
                                     DesignSpec::column_means(), Vector(), S,
                                     0.05, 99902);
  c.require(std::abs(w1.statistic - 0.893) <= 0.02,
            "wines statistic " + fmt(w1.statistic));
  c.require(std::abs(w1.p_value - 0.007) <= 0.02,
            "wines p-value " + fmt(w1.p_value));
  const Matrix country = read_design_matrix(base + "/wines_country.csv");
  const TestReport w2 =
      mc_null_test(StatisticKind::MaxEp, wines,
                   DesignSpec::row_regression(country), Vector(), S, 0.05,
                   99903);
  c.require(std::abs(w2.statistic - 0.843) <= 0.02,
            "wines country-model statistic " + fmt(w2.statistic));
  c.require(std::abs(w2.p_value - 0.23) <= 0.02,
            "wines country-model p-value " + fmt(w2.p_value));
  c.note("turtles t=" + fmt(t1.statistic) + " p=" + fmt(t1.p_value) +
         "; wines t=" + fmt(w1.statistic) + " p=" + fmt(w1.p_value) +
         "; wines|country t=" + fmt(w2.statistic) + " p=" + fmt(w2.p_value));
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::fprintf(stderr, "usage: %s <criterion 1..9>\n", argv[0]);
    return 2;
  }
  const int k = std::atoi(argv[1]);
  Check c;
  switch (k) {
    case 1: c = criterion_1(); break;
    case 2: c = criterion_2(); break;
    case 3: c = criterion_3(); break;
    case 4: c = criterion_4(); break;
    case 5: c = criterion_5(); break;
    case 6: c = criterion_6(); break;
    case 7: c = criterion_7(); break;
    case 8: c = criterion_8(); break;
    case 9: c = criterion_9(); break;
    default:
      std::fprintf(stderr, "unknown criterion %d\n", k);
      return 2;
  }
  std::printf("criterion %d: %s%s%s\n", k, c.ok ? "PASS" : "FAIL",
              c.detail.empty() ? "" : " - ", c.detail.c_str());
  return c.ok ? 0 : 1;
}
