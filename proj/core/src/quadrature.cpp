#include "entconvex/quadrature.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Dense>

#include "entconvex/errors.hpp"

namespace entconvex {

void hermite_functions(double x, int count, double* out) {
  if (count <= 0) return;
  out[0] = std::exp(-0.5 * x * x) / std::sqrt(std::sqrt(std::numbers::pi));
  if (count == 1) return;
  out[1] = std::sqrt(2.0) * x * out[0];
  for (int n = 1; n + 1 < count; ++n)
    out[n + 1] = std::sqrt(2.0 / (n + 1)) * x * out[n] - std::sqrt(double(n) / (n + 1)) * out[n - 1];
}

std::vector<double> hermite_functions(double x, int count) {
  std::vector<double> v(static_cast<std::size_t>(std::max(count, 0)));
  hermite_functions(x, count, v.data());
  return v;
}

double hermite_mode(int n, double omega, double x) {
  if (n < 0 || !(omega > 0)) throw DomainError("hermite_mode: need n >= 0 and omega > 0");
  const double s = std::sqrt(omega / 2.0);
  std::vector<double> v(static_cast<std::size_t>(n) + 1);
  hermite_functions(s * x, n + 1, v.data());
  return std::sqrt(s) * v.back();
}

QuadratureRule gauss_hermite(int order) {
  if (order < 1) throw DomainError("gauss_hermite: order must be positive");
  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(order, order);
  for (int k = 1; k < order; ++k) j(k, k - 1) = j(k - 1, k) = std::sqrt(k / 2.0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(j);
  if (es.info() != Eigen::Success) throw NumericalError("gauss_hermite: eigensolver failed");

  QuadratureRule q;
  std::vector<double> phi(static_cast<std::size_t>(order) + 1);
  for (int i = 0; i < order; ++i) {
    double x = es.eigenvalues()(i);
    for (int it = 0; it < 3; ++it) {
      hermite_functions(x, order + 1, phi.data());
      const double f = phi[order];
      const double df = std::sqrt(2.0 * order) * phi[order - 1] - x * phi[order];
      if (df == 0.0) break;
      x -= f / df;
    }
    hermite_functions(x, order, phi.data());
    double sum = 0.0;
    for (int k = 0; k < order; ++k) sum += phi[k] * phi[k];
    q.nodes.push_back(x);
    q.plain_weights.push_back(1.0 / sum);
    q.weights.push_back(std::exp(-x * x) / sum);
  }
  return q;
}

QuadratureRule gauss_legendre(int order) {
  if (order < 1) throw DomainError("gauss_legendre: order must be positive");
  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(order, order);
  for (int k = 1; k < order; ++k) j(k, k - 1) = j(k - 1, k) = k / std::sqrt(4.0 * k * k - 1.0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(j);
  if (es.info() != Eigen::Success) throw NumericalError("gauss_legendre: eigensolver failed");
  QuadratureRule q;
  for (int i = 0; i < order; ++i) {
    double x = es.eigenvalues()(i);
    // Newton on P_n via the three-term recurrence
    double dp = 1.0;
    for (int it = 0; it < 4; ++it) {
      double p0 = 1.0, p1 = x;
      for (int n = 1; n < order; ++n) {
        const double p2 = ((2.0 * n + 1) * x * p1 - n * p0) / (n + 1);
        p0 = p1;
        p1 = p2;
      }
      if (order == 1) p0 = 1.0;
      dp = order * (x * p1 - p0) / (x * x - 1.0);
      x -= p1 / dp;
    }
    q.nodes.push_back(x);
    q.weights.push_back(2.0 / ((1.0 - x * x) * dp * dp));
  }
  q.plain_weights = q.weights;
  return q;
}

}  // namespace entconvex
