#pragma once

#include "rowcov/linalg.hpp"

namespace rowcov {

// T = G + (g 1^T + 1 g^T)/2 with g = diag(G). Off-diagonal entry (i, i')
// equals c^T G c for c = (e_i + e_{i'})/sqrt(2); the diagonal is not a pair
// and is stored as NaN.
struct PairwiseStatMatrix {
  Matrix T;
};

PairwiseStatMatrix pairwise_stat_matrix(const GrassmannPoint& g);

// Maximum off-diagonal entry of T and the (row-major first) argmax pair,
// 0-based.
struct MaxEpStatistic {
  double value = 0.0;
  Index i = 0;
  Index j = 1;
};

MaxEpStatistic maxep_statistic(const PairwiseStatMatrix& t);

// Convenience: t_max straight from a residual matrix, without materializing
// the full n x n projector storage twice.
MaxEpStatistic maxep_statistic_of(const Matrix& r);

}  // namespace rowcov
