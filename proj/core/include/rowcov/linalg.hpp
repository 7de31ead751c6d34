#pragma once

#include <Eigen/Dense>

namespace rowcov {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

// Reduced SVD: only singular triples above the numerical-rank threshold
// eps * max(n,p) * sigma_1 are kept, so D is strictly positive.
struct ReducedSvd {
  Matrix U;  // n x r, orthonormal columns
  Vector D;  // r, descending, strictly positive
  Matrix V;  // p x r, orthonormal columns
  Index rank = 0;
};

// Rank-r point on the Grassmann manifold of r-planes in R^n, stored as the
// symmetric idempotent projector onto the plane.
struct GrassmannPoint {
  Matrix G;  // n x n, symmetric, G*G = G
  Index rank = 0;
};

// Orthonormal basis H for the orthogonal complement of a design's column
// space, with the associated residual projector P = H^T H.
struct ComplementBasis {
  Matrix H;  // (n-q) x n, H H^T = I
  Matrix P;  // n x n, symmetric idempotent, P X = 0
  Index q = 0;
};

ReducedSvd reduced_svd(const Matrix& m);

// G(R) = R (R^T R)^- R^T = U U^T, the maximal invariant of the residual
// matrix under nonsingular right multiplication.
GrassmannPoint grassmann_projector(const Matrix& r);

// Deterministic complement basis: the null space of X^T orthogonalized with
// a fixed sign convention (first sizable entry of each row positive).
ComplementBasis complement_basis(const Matrix& x);

// Basis for the degenerate q = 0 case (no design): H = P = I_n.
ComplementBasis identity_basis(Index n);

Matrix pseudoinverse(const Matrix& m);

// Closed-form symmetric square root of I + omega * c c^T for unit c:
// S = I + (sqrt(1 + omega) - 1) c c^T.
Matrix sym_sqrt_spiked(double omega, const Vector& c);

// Symmetric (eigendecomposition) square root of a positive definite matrix.
Matrix sym_sqrt(const Matrix& a);

}  // namespace rowcov
