#include "rowcov/sampling.hpp"

#include <cmath>

#include "rowcov/errors.hpp"

namespace rowcov {

namespace {

void require_pd(const Matrix& a, const char* what) {
  if (a.rows() != a.cols()) {
    throw InvalidCovarianceError(std::string(what) + ": not square");
  }
  Eigen::LLT<Matrix> llt(a);
  if (llt.info() != Eigen::Success) {
    throw InvalidCovarianceError(std::string(what) +
                                 ": not positive definite");
  }
}

}  // namespace

SeparableCovariance SeparableCovariance::identity(Index n, Index p) {
  SeparableCovariance cov;
  cov.Sigma = Matrix::Identity(p, p);
  cov.Psi = Matrix::Identity(n, n);
  return cov;
}

SeparableCovariance SeparableCovariance::dense(Matrix sigma, Matrix psi) {
  require_pd(sigma, "Sigma");
  require_pd(psi, "Psi");
  SeparableCovariance cov;
  cov.Sigma = std::move(sigma);
  cov.Psi = std::move(psi);
  return cov;
}

SeparableCovariance SeparableCovariance::spiked(Matrix sigma, double omega,
                                                Vector c) {
  require_pd(sigma, "Sigma");
  if (omega < 0.0) {
    throw InvalidCovarianceError("spiked Psi: omega must be nonnegative");
  }
  if (std::abs(c.norm() - 1.0) > 1e-8) {
    throw InvalidCovarianceError("spiked Psi: c must be a unit vector");
  }
  SeparableCovariance cov;
  cov.Sigma = std::move(sigma);
  cov.psi_spiked = true;
  cov.omega = omega;
  cov.c = std::move(c);
  return cov;
}

Matrix SeparableCovariance::psi_dense() const {
  if (!psi_spiked) return Psi;
  const Index n = c.size();
  return Matrix::Identity(n, n) + omega * (c * c.transpose());
}

Matrix SeparableCovariance::psi_sqrt() const {
  if (psi_spiked) return sym_sqrt_spiked(omega, c);
  return sym_sqrt(Psi);
}

Matrix SeparableCovariance::sigma_sqrt() const { return sym_sqrt(Sigma); }

EllipticalFamily EllipticalFamily::gaussian() { return {}; }

EllipticalFamily EllipticalFamily::matrix_t(double dof) {
  if (!(dof > 0.0)) {
    throw InvalidInputError("matrix_t: dof must be positive");
  }
  EllipticalFamily f;
  f.kind = Kind::MatrixT;
  f.dof = dof;
  return f;
}

EllipticalFamily EllipticalFamily::scale_contaminated(double eps,
                                                      double kappa) {
  if (!(eps >= 0.0 && eps <= 1.0)) {
    throw InvalidInputError("scale_contaminated: eps must lie in [0, 1]");
  }
  if (!(kappa > 0.0)) {
    throw InvalidInputError("scale_contaminated: kappa must be positive");
  }
  EllipticalFamily f;
  f.kind = Kind::ScaleContaminated;
  f.eps = eps;
  f.kappa = kappa;
  return f;
}

const char* EllipticalFamily::name() const {
  switch (kind) {
    case Kind::Gaussian:
      return "gaussian";
    case Kind::MatrixT:
      return "matrix_t";
    case Kind::ScaleContaminated:
      return "scale_contaminated";
  }
  return "unknown";
}

Matrix sample_std_normal(Index n, Index p, RngStream& rng) {
  Matrix z(n, p);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < p; ++j) z(i, j) = rng.normal();
  }
  return z;
}

Matrix sample_matrix_normal_sqrt(const Matrix& mean, const Matrix& psi_sqrt,
                                 const Matrix& sigma_sqrt, RngStream& rng) {
  const Index n = psi_sqrt.rows();
  const Index p = sigma_sqrt.rows();
  Matrix y = psi_sqrt * sample_std_normal(n, p, rng) * sigma_sqrt;
  if (mean.size() > 0) {
    if (mean.rows() != n || mean.cols() != p) {
      throw InvalidInputError("sample_matrix_normal: mean dimension mismatch");
    }
    y += mean;
  }
  return y;
}

Matrix sample_matrix_normal(const Matrix& mean, const SeparableCovariance& cov,
                            RngStream& rng) {
  return sample_matrix_normal_sqrt(mean, cov.psi_sqrt(), cov.sigma_sqrt(),
                                   rng);
}

Matrix sample_stiefel_uniform(Index n, Index p, RngStream& rng) {
  if (p > n) {
    throw InvalidInputError("sample_stiefel_uniform: need p <= n");
  }
  const Matrix z = sample_std_normal(n, p, rng);
  // Z (Z^T Z)^{-1/2} = U V^T from the thin SVD of Z.
  Eigen::JacobiSVD<Matrix> svd(z, Eigen::ComputeThinU | Eigen::ComputeThinV);
  return svd.matrixU() * svd.matrixV().transpose();
}

Matrix sample_uniform_orthogonal(Index n, RngStream& rng) {
  const Matrix z = sample_std_normal(n, n, rng);
  Eigen::HouseholderQR<Matrix> qr(z);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index j = 0; j < n; ++j) {
    if (r(j, j) < 0.0) q.col(j) = -q.col(j);
  }
  return q;
}

Matrix sample_elliptical_z(Index n, Index p, const EllipticalFamily& family,
                           RngStream& rng) {
  switch (family.kind) {
    case EllipticalFamily::Kind::Gaussian:
      return sample_std_normal(n, p, rng);
    case EllipticalFamily::Kind::MatrixT: {
      // One mixing scalar for the whole matrix keeps vec(Z) spherical.
      const double s = std::sqrt(family.dof / rng.chi_squared(family.dof));
      return s * sample_std_normal(n, p, rng);
    }
    case EllipticalFamily::Kind::ScaleContaminated: {
      const double s =
          (rng.uniform_co() < family.eps) ? std::sqrt(family.kappa) : 1.0;
      return s * sample_std_normal(n, p, rng);
    }
  }
  throw InvalidInputError("sample_elliptical_z: unknown family");
}

}  // namespace rowcov
