#include "rowcov/pairwise.hpp"

#include <limits>

#include "rowcov/errors.hpp"

namespace rowcov {

PairwiseStatMatrix pairwise_stat_matrix(const GrassmannPoint& g) {
  const Index n = g.G.rows();
  if (n < 2) {
    throw InvalidInputError("pairwise_stat_matrix: need n >= 2");
  }
  const Vector diag = g.G.diagonal();
  PairwiseStatMatrix out;
  out.T = g.G;
  out.T += 0.5 * (diag * Vector::Ones(n).transpose() +
                  Vector::Ones(n) * diag.transpose());
  out.T.diagonal().setConstant(std::numeric_limits<double>::quiet_NaN());
  return out;
}

MaxEpStatistic maxep_statistic(const PairwiseStatMatrix& t) {
  const Index n = t.T.rows();
  MaxEpStatistic best;
  best.value = -std::numeric_limits<double>::infinity();
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      if (t.T(i, j) > best.value) {
        best.value = t.T(i, j);
        best.i = i;
        best.j = j;
      }
    }
  }
  return best;
}

MaxEpStatistic maxep_statistic_of(const Matrix& r) {
  return maxep_statistic(pairwise_stat_matrix(grassmann_projector(r)));
}

}  // namespace rowcov
