#pragma once

#include "rowcov/linalg.hpp"
#include "rowcov/rng.hpp"

namespace rowcov {

// Separable covariance Sigma (x) Psi. Psi may be held in spiked form
// I + omega c c^T, which has a closed-form square root and avoids an
// O(n^3) eigendecomposition in simulation loops.
struct SeparableCovariance {
  Matrix Sigma;  // p x p
  Matrix Psi;    // n x n, empty when spiked
  bool psi_spiked = false;
  double omega = 0.0;
  Vector c;

  static SeparableCovariance identity(Index n, Index p);
  static SeparableCovariance dense(Matrix sigma, Matrix psi);
  static SeparableCovariance spiked(Matrix sigma, double omega, Vector c);

  Matrix psi_dense() const;  // expands the spiked form if needed
  Matrix psi_sqrt() const;
  Matrix sigma_sqrt() const;
};

struct EllipticalFamily {
  enum class Kind { Gaussian, MatrixT, ScaleContaminated };
  Kind kind = Kind::Gaussian;
  double dof = 0.0;    // MatrixT
  double eps = 0.0;    // ScaleContaminated: contamination probability
  double kappa = 1.0;  // ScaleContaminated: variance inflation

  static EllipticalFamily gaussian();
  static EllipticalFamily matrix_t(double dof);
  static EllipticalFamily scale_contaminated(double eps, double kappa);
  const char* name() const;
};

Matrix sample_std_normal(Index n, Index p, RngStream& rng);

// Y = mean + Psi^{1/2} Z Sigma^{1/2}. Pass an empty mean for the
// mean-zero model.
Matrix sample_matrix_normal(const Matrix& mean, const SeparableCovariance& cov,
                            RngStream& rng);

// Precomputed square-root factors for hot loops.
Matrix sample_matrix_normal_sqrt(const Matrix& mean, const Matrix& psi_sqrt,
                                 const Matrix& sigma_sqrt, RngStream& rng);

// W = Z (Z^T Z)^{-1/2} for Z with i.i.d. standard normal entries; uniform
// on the Stiefel manifold V_{p,n}.
Matrix sample_stiefel_uniform(Index n, Index p, RngStream& rng);

// Haar-uniform orthogonal matrix: QR of a square standard normal matrix
// with the sign convention fixed by a positive diagonal of R.
Matrix sample_uniform_orthogonal(Index n, RngStream& rng);

// Z with vec(Z) spherically symmetric: Gaussian, matrix-t (one chi-squared
// mixing scalar per matrix), or scale-contaminated normal.
Matrix sample_elliptical_z(Index n, Index p, const EllipticalFamily& family,
                           RngStream& rng);

}  // namespace rowcov
