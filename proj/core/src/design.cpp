#include "rowcov/design.hpp"

#include <cmath>

#include "rowcov/errors.hpp"

namespace rowcov {

DesignSpec DesignSpec::zero() { return {DesignKind::Zero, {}, {}}; }

DesignSpec DesignSpec::column_means() {
  return {DesignKind::ColumnMeans, {}, {}};
}

DesignSpec DesignSpec::row_regression(Matrix x) {
  DesignSpec d;
  d.kind = DesignKind::RowRegression;
  d.X = std::move(x);
  return d;
}

DesignSpec DesignSpec::row_column_regression(Matrix x, Matrix w) {
  DesignSpec d;
  d.kind = DesignKind::RowColumnRegression;
  d.X = std::move(x);
  d.W = std::move(w);
  return d;
}

Matrix DesignSpec::row_design(Index n) const {
  switch (kind) {
    case DesignKind::Zero:
      return Matrix(n, 0);
    case DesignKind::ColumnMeans:
      return Matrix::Ones(n, 1);
    case DesignKind::RowRegression:
    case DesignKind::RowColumnRegression:
      if (X.rows() != n) {
        throw InvalidDesignError("row design has wrong number of rows");
      }
      return X;
  }
  throw InvalidDesignError("unknown design kind");
}

Index DesignSpec::q2(Index n) const { return row_design(n).cols(); }

Index DesignSpec::q1(Index p) const {
  if (kind != DesignKind::RowColumnRegression) return 0;
  if (W.rows() != p) {
    throw InvalidDesignError("column design has wrong number of rows");
  }
  return W.cols();
}

Reduction residualize(const Matrix& y, const DesignSpec& design) {
  if (!y.allFinite() || y.size() == 0) {
    throw InvalidInputError("residualize: data must be finite and nonempty");
  }
  const Index n = y.rows();
  const Index p = y.cols();

  Reduction out;
  const Matrix x = design.row_design(n);
  out.HX = (x.cols() > 0) ? complement_basis(x) : identity_basis(n);
  if (design.kind == DesignKind::RowColumnRegression && design.W.cols() > 0) {
    if (design.W.rows() != p) {
      throw InvalidDesignError("column design has wrong number of rows");
    }
    out.HW = complement_basis(design.W);
  } else {
    out.HW = identity_basis(p);
  }
  out.n_eff = n - out.HX.q;
  out.p_eff = p - out.HW.q;
  out.Ytilde = out.HX.H * y * out.HW.H.transpose();
  out.R = out.HX.H.transpose() * out.Ytilde * out.HW.H;
  return out;
}

ReducedDirection reduce_direction(const Vector& c, const ComplementBasis& hx) {
  if (std::abs(c.norm() - 1.0) > 1e-8) {
    throw InvalidInputError("reduce_direction: c must be a unit vector");
  }
  if (c.size() != hx.H.cols()) {
    throw InvalidInputError("reduce_direction: dimension mismatch");
  }
  const Vector hc = hx.H * c;
  const double scale = hc.squaredNorm();
  if (scale < 1e-10) {
    throw ConfoundedDirectionError(
        "direction lies in the design column space and is not detectable "
        "by an invariant test");
  }
  return {hc / std::sqrt(scale), scale};
}

bool is_trivial(Index n, Index p, const DesignSpec& design) {
  const Index n_eff = n - design.q2(n);
  const Index p_eff = p - design.q1(p);
  return n_eff <= p_eff;
}

}  // namespace rowcov
