#pragma once

#include "rowcov/linalg.hpp"

namespace rowcov {

enum class DesignKind { Zero, ColumnMeans, RowRegression, RowColumnRegression };

// Mean model for the n x p data matrix. ColumnMeans is handled as
// RowRegression with X = 1_n, so there is a single residualization path.
struct DesignSpec {
  DesignKind kind = DesignKind::Zero;
  Matrix X;  // n x q2 row design (RowRegression / RowColumnRegression)
  Matrix W;  // p x q1 column design (RowColumnRegression only)

  static DesignSpec zero();
  static DesignSpec column_means();
  static DesignSpec row_regression(Matrix x);
  static DesignSpec row_column_regression(Matrix x, Matrix w);

  // Materialized row design for an n-row data matrix; empty for Zero.
  Matrix row_design(Index n) const;
  Index q2(Index n) const;
  Index q1(Index p) const;
};

// Residual decomposition R = H_X^T Ytilde H_W with effective dimensions
// n_eff = n - q2 and p_eff = p - q1.
struct Reduction {
  Matrix R;       // n x p residuals
  Matrix Ytilde;  // n_eff x p_eff reduced matrix
  ComplementBasis HX;
  ComplementBasis HW;
  Index n_eff = 0;
  Index p_eff = 0;
};

Reduction residualize(const Matrix& y, const DesignSpec& design);

struct ReducedDirection {
  Vector ctilde;  // unit vector in R^{n_eff}
  double scale;   // |H c|^2 in [0, 1]; the spike size shrinks by this factor
};

// Maps a spike direction into the reduced mean-zero model. Throws
// ConfoundedDirectionError when c lies in the design column space, where
// the alternative is undetectable by any invariant test.
ReducedDirection reduce_direction(const Vector& c, const ComplementBasis& hx);

// Trivial regime: n_eff <= p_eff, where the maximal invariant is almost
// surely constant (equal to the residual projector P).
bool is_trivial(Index n, Index p, const DesignSpec& design);

}  // namespace rowcov
