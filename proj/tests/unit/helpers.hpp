#pragma once

#include <random>

#include "entconvex/criterion.hpp"
#include "entconvex/spectra.hpp"

namespace testutil {

using entconvex::Matrix;

inline Matrix random_density(Eigen::Index d, std::mt19937_64& rng, Eigen::Index rank = -1) {
  std::normal_distribution<double> g;
  if (rank < 0) rank = d;
  Matrix a(d, rank);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < rank; ++j) a(i, j) = {g(rng), g(rng)};
  Matrix rho = a * a.adjoint();
  return rho / rho.trace().real();
}

inline Matrix diag(std::initializer_list<double> v) {
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(v.size()), static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) m(i, i) = x, ++i;
  return m;
}

inline double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace testutil
