#include "rowcov/linalg.hpp"

#include <cmath>
#include <limits>

#include "rowcov/errors.hpp"

namespace rowcov {

namespace {

void require_finite(const Matrix& m, const char* what) {
  if (!m.allFinite()) {
    throw InvalidInputError(std::string(what) + ": non-finite entries");
  }
}

// First entry with magnitude above a relative floor made positive; applied
// row-wise so the basis choice is reproducible run to run.
void fix_row_signs(Matrix& h) {
  const double floor = 1e-12;
  for (Index i = 0; i < h.rows(); ++i) {
    for (Index j = 0; j < h.cols(); ++j) {
      if (std::abs(h(i, j)) > floor) {
        if (h(i, j) < 0.0) h.row(i) = -h.row(i);
        break;
      }
    }
  }
}

}  // namespace

ReducedSvd reduced_svd(const Matrix& m) {
  require_finite(m, "reduced_svd");
  if (m.size() == 0 || m.cwiseAbs().maxCoeff() == 0.0) {
    throw InvalidInputError("reduced_svd: all-zero input");
  }
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Vector& sv = svd.singularValues();
  const double threshold = std::numeric_limits<double>::epsilon() *
                           static_cast<double>(std::max(m.rows(), m.cols())) *
                           sv(0);
  Index r = 0;
  while (r < sv.size() && sv(r) > threshold) ++r;
  ReducedSvd out;
  out.rank = r;
  out.U = svd.matrixU().leftCols(r);
  out.D = sv.head(r);
  out.V = svd.matrixV().leftCols(r);
  return out;
}

GrassmannPoint grassmann_projector(const Matrix& r) {
  const ReducedSvd svd = reduced_svd(r);
  GrassmannPoint g;
  g.rank = svd.rank;
  g.G = svd.U * svd.U.transpose();
  g.G = 0.5 * (g.G + g.G.transpose().eval());
  return g;
}

ComplementBasis complement_basis(const Matrix& x) {
  require_finite(x, "complement_basis");
  const Index n = x.rows();
  const Index q = x.cols();
  if (q == 0 || q >= n) {
    throw InvalidDesignError("complement_basis: need 0 < q < n");
  }
  Eigen::JacobiSVD<Matrix> svd(x, Eigen::ComputeFullU);
  const Vector& sv = svd.singularValues();
  const double threshold = std::numeric_limits<double>::epsilon() *
                           static_cast<double>(n) * sv(0);
  if (sv(q - 1) <= threshold) {
    throw InvalidDesignError("complement_basis: design is rank deficient");
  }
  ComplementBasis out;
  out.q = q;
  out.H = svd.matrixU().rightCols(n - q).transpose();
  fix_row_signs(out.H);
  const Matrix xtx = x.transpose() * x;
  out.P = Matrix::Identity(n, n) - x * xtx.llt().solve(x.transpose());
  out.P = 0.5 * (out.P + out.P.transpose().eval());
  return out;
}

ComplementBasis identity_basis(Index n) {
  ComplementBasis out;
  out.q = 0;
  out.H = Matrix::Identity(n, n);
  out.P = Matrix::Identity(n, n);
  return out;
}

Matrix pseudoinverse(const Matrix& m) {
  const ReducedSvd svd = reduced_svd(m);
  return svd.V * svd.D.cwiseInverse().asDiagonal() * svd.U.transpose();
}

Matrix sym_sqrt_spiked(double omega, const Vector& c) {
  if (omega < 0.0) {
    throw InvalidInputError("sym_sqrt_spiked: omega must be nonnegative");
  }
  if (std::abs(c.norm() - 1.0) > 1e-8) {
    throw InvalidInputError("sym_sqrt_spiked: c must be a unit vector");
  }
  const Index n = c.size();
  Matrix s = Matrix::Identity(n, n);
  s += (std::sqrt(1.0 + omega) - 1.0) * (c * c.transpose());
  return s;
}

Matrix sym_sqrt(const Matrix& a) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(a);
  if (es.info() != Eigen::Success || es.eigenvalues().minCoeff() <= 0.0) {
    throw InvalidCovarianceError("sym_sqrt: matrix is not positive definite");
  }
  return es.eigenvectors() *
         es.eigenvalues().cwiseSqrt().asDiagonal() *
         es.eigenvectors().transpose();
}

}  // namespace rowcov
