// rowcov: invariant tests for row covariance in matrix regression models.
//
// Subcommands:
//   test           run the spiked (exact beta null) or maxEP (Monte Carlo
//                  null) test on a CSV data matrix
//   power-curve    emit a power table as CSV (analytic for spiked, Monte
//                  Carlo for maxEP)
//   simulate-null  emit the raw simulated null sample for audit

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rowcov/beta.hpp"
#include "rowcov/design.hpp"
#include "rowcov/errors.hpp"
#include "rowcov/io.hpp"
#include "rowcov/mc_test.hpp"
#include "rowcov/spiked.hpp"
#include "rowcov/studies.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace rowcov;

struct CommonOptions {
  std::string data_path;
  std::string design = "colmeans";
  std::string stat = "maxep";
  std::string c_file;
  std::string pair;
  double alpha = 0.05;
  int reps = 5000;
  std::uint64_t seed = 0;
  int cols_first = 0;
  std::string out_path;
  std::string format = "json";
};

DesignSpec parse_design(const std::string& spec) {
  if (spec == "zero") return DesignSpec::zero();
  if (spec == "colmeans") return DesignSpec::column_means();
  if (spec.rfind("reg:", 0) == 0) {
    return DesignSpec::row_regression(read_design_matrix(spec.substr(4)));
  }
  if (spec.rfind("rowcol:", 0) == 0) {
    const std::string paths = spec.substr(7);
    const auto comma = paths.find(',');
    if (comma == std::string::npos) {
      throw InvalidDesignError("rowcol design needs two paths: X.csv,W.csv");
    }
    return DesignSpec::row_column_regression(
        read_design_matrix(paths.substr(0, comma)),
        read_design_matrix(paths.substr(comma + 1)));
  }
  throw InvalidDesignError("unknown design: " + spec);
}

// Spike direction from --c-file or --pair i,j (1-based row indices).
Vector parse_direction(const CommonOptions& opt, Index n,
                       std::vector<std::string>& warnings) {
  if (!opt.c_file.empty()) {
    Matrix m = read_csv_matrix(opt.c_file);
    if (m.cols() != 1 || m.rows() != n) {
      throw InvalidInputError("--c-file must hold a single column of length " +
                              std::to_string(n));
    }
    Vector c = m.col(0);
    const double norm = c.norm();
    if (norm <= 0.0) {
      throw InvalidInputError("--c-file vector is zero");
    }
    if (std::abs(norm - 1.0) > 1e-8) {
      warnings.push_back("c vector renormalized to unit length");
      c /= norm;
    }
    return c;
  }
  if (!opt.pair.empty()) {
    const auto comma = opt.pair.find(',');
    if (comma == std::string::npos) {
      throw InvalidInputError("--pair expects i,j");
    }
    const long i = std::stol(opt.pair.substr(0, comma));
    const long j = std::stol(opt.pair.substr(comma + 1));
    if (i < 1 || j < 1 || i > n || j > n || i == j) {
      throw InvalidInputError("--pair indices must be distinct and in 1.." +
                              std::to_string(n));
    }
    Vector c = Vector::Zero(n);
    c(i - 1) = c(j - 1) = 1.0 / std::sqrt(2.0);
    return c;
  }
  throw InvalidInputError("spiked statistic needs --c-file or --pair");
}

Matrix load_data(const CommonOptions& opt) {
  if (opt.data_path.empty()) {
    throw InvalidInputError("--data is required");
  }
  Matrix y = read_csv_matrix(opt.data_path);
  if (opt.cols_first > 0) {
    if (opt.cols_first > y.cols()) {
      throw InvalidInputError("--cols-first exceeds the column count");
    }
    y = y.leftCols(opt.cols_first).eval();
  }
  return y;
}

std::string full_precision(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void emit(const std::string& text, const std::string& out_path) {
  std::cout << text;
  if (!out_path.empty()) write_text_file(out_path, text);
}

json report_to_json(const TestReport& r) {
  json j;
  j["method"] = r.method;
  j["n"] = r.n;
  j["p"] = r.p;
  j["q1"] = r.q1;
  j["q2"] = r.q2;
  j["n_eff"] = r.n_eff;
  j["p_eff"] = r.p_eff;
  j["statistic"] = r.statistic;
  j["critical_value"] = r.critical_value;
  j["p_value"] = r.p_value;
  j["alpha"] = r.alpha;
  j["reject"] = r.reject;
  j["null_kind"] = r.null_kind;
  if (r.null_kind == "exact_beta") {
    j["shape1"] = r.shape1;
    j["shape2"] = r.shape2;
  }
  j["S"] = r.S;
  j["seed"] = r.seed;
  if (r.method == "maxep") {
    j["argmax_pair"] = {r.argmax_i + 1, r.argmax_j + 1};  // 1-based
  }
  j["warnings"] = r.warnings;
  return j;
}

int cmd_test(const CommonOptions& opt) {
  const Matrix y = load_data(opt);
  const DesignSpec design = parse_design(opt.design);
  TestReport report;
  std::vector<std::string> warnings;

  if (opt.stat == "spiked") {
    const Vector c = parse_direction(opt, y.rows(), warnings);
    const SpikedTestResult res = spiked_test(y, design, c, opt.alpha);
    report.method = "spiked";
    report.null_kind = "exact_beta";
    report.n = y.rows();
    report.p = y.cols();
    report.q2 = design.q2(y.rows());
    report.q1 = design.q1(y.cols());
    report.n_eff = res.n_eff;
    report.p_eff = res.p_eff;
    report.statistic = res.t;
    report.critical_value = res.critical_value;
    report.p_value = res.p_value;
    report.alpha = res.alpha;
    report.shape1 = res.shape1;
    report.shape2 = res.shape2;
    report.seed = opt.seed;
    report.reject = res.reject;
  } else if (opt.stat == "maxep") {
    report = mc_null_test(StatisticKind::MaxEp, y, design, Vector(), opt.reps,
                          opt.alpha, opt.seed);
  } else {
    throw InvalidInputError("unknown statistic: " + opt.stat);
  }
  report.warnings.insert(report.warnings.end(), warnings.begin(),
                         warnings.end());
  emit(report_to_json(report).dump(2) + "\n", opt.out_path);
  return 0;
}

struct GridOptions {
  std::vector<Index> n_list{20, 40, 80, 160, 320};
  Index fixed_p = 0;  // 0 means p = n/2
  std::vector<double> omega_grid{0, 1, 2, 5, 10, 20};
  int null_reps = 5000;
  std::string plot_out;
};

int cmd_power_curve(const CommonOptions& opt, const GridOptions& grid) {
  const PRule rule = grid.fixed_p > 0 ? PRule::Fixed : PRule::HalfN;
  PowerCurveTable table;
  if (opt.stat == "spiked") {
    table = umpi_power_curve(grid.n_list, rule, grid.fixed_p, grid.omega_grid,
                             opt.alpha);
  } else if (opt.stat == "maxep") {
    Index pi = 0, pj = 1;
    if (!opt.pair.empty()) {
      const auto comma = opt.pair.find(',');
      pi = std::stol(opt.pair.substr(0, comma)) - 1;
      pj = std::stol(opt.pair.substr(comma + 1)) - 1;
    }
    table = maxep_power_curve(grid.n_list, rule, grid.fixed_p, grid.omega_grid,
                              opt.alpha, grid.null_reps, opt.reps, opt.seed,
                              pi, pj);
  } else {
    throw InvalidInputError("unknown statistic: " + opt.stat);
  }
  emit(power_curve_csv(table), opt.out_path);

  if (!grid.plot_out.empty()) {
    // Plain-text plot data: x = omega, one power column per (n, p) series.
    std::string plot = "omega";
    for (Index n : grid.n_list) {
      const Index p = rule == PRule::HalfN ? n / 2 : grid.fixed_p;
      plot += " n" + std::to_string(n) + "_p" + std::to_string(p);
    }
    plot += "\n";
    for (std::size_t k = 0; k < grid.omega_grid.size(); ++k) {
      plot += full_precision(grid.omega_grid[k]);
      for (std::size_t s = 0; s < grid.n_list.size(); ++s) {
        plot += " " + full_precision(
                          table[s * grid.omega_grid.size() + k].power);
      }
      plot += "\n";
    }
    write_text_file(grid.plot_out, plot);
  }
  return 0;
}

int cmd_simulate_null(const CommonOptions& opt, Index n_flag, Index p_flag) {
  Index n = n_flag, p = p_flag;
  if (!opt.data_path.empty()) {
    const Matrix y = load_data(opt);
    n = y.rows();
    p = y.cols();
  }
  if (n <= 0 || p <= 0) {
    throw InvalidInputError("simulate-null needs --data or --n and --p");
  }
  const DesignSpec design = parse_design(opt.design);
  Vector c;
  std::vector<std::string> warnings;
  StatisticKind kind = StatisticKind::MaxEp;
  if (opt.stat == "spiked") {
    kind = StatisticKind::Spiked;
    c = parse_direction(opt, n, warnings);
  } else if (opt.stat != "maxep") {
    throw InvalidInputError("unknown statistic: " + opt.stat);
  }
  const std::vector<double> stats =
      simulate_null_statistics(kind, c, n, p, design, opt.reps, opt.seed);
  std::string csv = "t\n";
  for (double t : stats) csv += full_precision(t) + "\n";
  emit(csv, opt.out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariant tests for row covariance in matrix regression"};
  app.require_subcommand(1);

  CommonOptions opt;
  GridOptions grid;
  Index n_flag = 0, p_flag = 0;

  const auto add_common = [&](CLI::App* cmd, bool with_data) {
    if (with_data) cmd->add_option("--data", opt.data_path, "data CSV");
    cmd->add_option("--design", opt.design,
                    "zero|colmeans|reg:X.csv|rowcol:X.csv,W.csv");
    cmd->add_option("--stat", opt.stat, "spiked|maxep");
    cmd->add_option("--c-file", opt.c_file, "spike direction CSV (one column)");
    cmd->add_option("--pair", opt.pair, "row pair i,j (1-based)");
    cmd->add_option("--alpha", opt.alpha, "test level")->default_val(0.05);
    cmd->add_option("--reps", opt.reps, "Monte Carlo replicates")
        ->default_val(5000);
    cmd->add_option("--seed", opt.seed, "RNG seed")->default_val(0);
    cmd->add_option("--cols-first", opt.cols_first,
                    "use only the first K data columns");
    cmd->add_option("--out", opt.out_path, "also write output to this path");
    cmd->add_option("--format", opt.format, "json|csv");
  };

  CLI::App* test = app.add_subcommand("test", "run a row-covariance test");
  add_common(test, true);

  CLI::App* curve =
      app.add_subcommand("power-curve", "emit a power table as CSV");
  add_common(curve, false);
  curve->add_option("--n-list", grid.n_list, "row counts")->delimiter(',');
  curve->add_option("--p", grid.fixed_p, "fixed column count (default n/2)");
  curve->add_option("--omega-grid", grid.omega_grid, "spike sizes")
      ->delimiter(',');
  curve->add_option("--null-reps", grid.null_reps,
                    "null-calibration replicates (maxep)");
  curve->add_option("--plot-out", grid.plot_out,
                    "write plain-text plot data here");

  CLI::App* simnull =
      app.add_subcommand("simulate-null", "emit the simulated null sample");
  add_common(simnull, true);
  simnull->add_option("--n", n_flag, "rows (alternative to --data)");
  simnull->add_option("--p", p_flag, "columns (alternative to --data)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (!(opt.alpha > 0.0 && opt.alpha < 1.0)) {
      throw InvalidInputError("--alpha must lie in (0, 1)");
    }
    if (opt.reps < 100) {
      throw InvalidInputError("--reps must be at least 100");
    }
    if (test->parsed()) return cmd_test(opt);
    if (curve->parsed()) return cmd_power_curve(opt, grid);
    if (simnull->parsed()) return cmd_simulate_null(opt, n_flag, p_flag);
  } catch (const NumericalError& e) {
    json err{{"error", {{"kind", e.kind()}, {"message", e.what()}}}};
    std::cout << err.dump(2) << "\n";
    return 3;
  } catch (const Error& e) {
    json err{{"error", {{"kind", e.kind()}, {"message", e.what()}}}};
    std::cout << err.dump(2) << "\n";
    return 2;
  } catch (const std::exception& e) {
    json err{{"error", {{"kind", "internal"}, {"message", e.what()}}}};
    std::cout << err.dump(2) << "\n";
    return 3;
  }
  return 0;
}
