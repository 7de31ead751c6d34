#include "rowcov/likelihood.hpp"

#include <cmath>

#include "rowcov/errors.hpp"

namespace rowcov {

namespace {

struct PsiFactor {
  Eigen::LLT<Matrix> llt;
  double logdet;
};

PsiFactor factor_psi(const Matrix& psi) {
  PsiFactor f{Eigen::LLT<Matrix>(psi), 0.0};
  if (f.llt.info() != Eigen::Success) {
    throw InvalidCovarianceError("likelihood: Psi is not positive definite");
  }
  f.logdet = 2.0 * f.llt.matrixL().toDenseMatrix().diagonal().array().log().sum();
  return f;
}

double logdet_pd(const Matrix& a, const char* what) {
  Eigen::LLT<Matrix> llt(a);
  if (llt.info() != Eigen::Success) {
    throw NumericalError(std::string(what) + ": inner matrix is singular");
  }
  return 2.0 * llt.matrixL().toDenseMatrix().diagonal().array().log().sum();
}

}  // namespace

double profile_loglik_neg2(const Matrix& y, const Matrix& psi) {
  const Index n = y.rows();
  const Index p = y.cols();
  if (n < p) {
    throw InvalidInputError("profile_loglik_neg2: need n >= p");
  }
  const PsiFactor f = factor_psi(psi);
  const Matrix inner = y.transpose() * f.llt.solve(y) / static_cast<double>(n);
  return static_cast<double>(p) * f.logdet +
         static_cast<double>(n) * logdet_pd(inner, "profile_loglik_neg2") +
         static_cast<double>(n * p);
}

double loglik_U_neg2(const Matrix& u, const Matrix& psi) {
  const Index n = u.rows();
  const Index p = u.cols();
  const PsiFactor f = factor_psi(psi);
  const Matrix inner = u.transpose() * f.llt.solve(u);
  return static_cast<double>(p) * f.logdet +
         static_cast<double>(n) * logdet_pd(inner, "loglik_U_neg2");
}

double loglik_G_neg2(const GrassmannPoint& g, const Matrix& psi) {
  const Index n = g.G.rows();
  const Index p = g.rank;
  const PsiFactor f = factor_psi(psi);
  const Matrix psi_inv = f.llt.solve(Matrix::Identity(n, n));
  const Matrix m =
      Matrix::Identity(n, n) - (Matrix::Identity(n, n) - psi_inv) * g.G;
  Eigen::PartialPivLU<Matrix> lu(m);
  const double det = lu.determinant();
  if (!(det > 0.0) || !std::isfinite(det)) {
    throw NumericalError("loglik_G_neg2: inner determinant not positive");
  }
  return static_cast<double>(p) * f.logdet +
         static_cast<double>(n) * std::log(det);
}

}  // namespace rowcov
