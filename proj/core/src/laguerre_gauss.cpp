#include "entconvex/laguerre_gauss.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <vector>

#include "entconvex/errors.hpp"
#include "entconvex/quadrature.hpp"

namespace entconvex {

void LGMode::validate() const {
  if (l < 0) throw DomainError("LG mode: radial index must be >= 0");
  if (!(s0 > 0) || !(k > 0)) throw DomainError("LG mode: waist and wavenumber must be positive");
}

namespace {

std::complex<double> laguerre(int n, int a, std::complex<double> x) {
  std::complex<double> p0 = 1.0;
  if (n == 0) return p0;
  std::complex<double> p1 = 1.0 + double(a) - x;
  for (int k = 1; k < n; ++k) {
    const std::complex<double> p2 = ((2.0 * k + 1 + a - x) * p1 - double(k + a) * p0) / double(k + 1);
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

}  // namespace

std::complex<double> lg_evaluate(const LGMode& mode, double x, double y) {
  const int am = std::abs(mode.m);
  const std::complex<double> s2 = mode.s2();
  const double r2 = x * x + y * y;
  const std::complex<double> w = r2 / s2;
  // r^|m| e^{i m phi} = (x + i sgn(m) y)^|m|
  const std::complex<double> xy(x, mode.m >= 0 ? y : -y);
  std::complex<double> angular = 1.0;
  for (int i = 0; i < am; ++i) angular *= xy;
  const double sign = ((mode.l + am) % 2) ? -1.0 : 1.0;
  const std::complex<double> pref =
      4.0 * std::numbers::pi * sign * std::tgamma(mode.l + 1.0) / std::pow(s2, mode.l + am + 1);
  return pref * angular * laguerre(mode.l, am, w) * std::exp(-w);
}

CoefficientTensor lg_state_tensor(const LGMode& mode, const LGBasis& basis) {
  mode.validate();
  if (basis.size < 2 || basis.quadrature_order < basis.size)
    throw DomainError("LG basis: need size >= 2 and quadrature order >= size");
  const auto rule = gauss_hermite(basis.quadrature_order);
  const int q = basis.quadrature_order, n = basis.size;

  Eigen::MatrixXd phi(n, q);  // f_a(x_k) w~_k
  std::vector<double> buf(static_cast<std::size_t>(n));
  for (int k = 0; k < q; ++k) {
    hermite_functions(rule.nodes[k], n, buf.data());
    for (int a = 0; a < n; ++a) phi(a, k) = buf[a] * rule.plain_weights[k];
  }
  Matrix u(q, q);
  double plane = 0.0;
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) {
      u(i, j) = lg_evaluate(mode, rule.nodes[i], rule.nodes[j]);
      plane += rule.plain_weights[i] * rule.plain_weights[j] * std::norm(u(i, j));
    }
  Matrix c = phi.cast<cplx>() * u * phi.transpose().cast<cplx>();
  c /= std::sqrt(plane);
  const double captured = c.squaredNorm();
  if (1.0 - captured > 1e-6)
    throw NumericalError("LG basis too small: captured norm " + std::to_string(captured));
  return CoefficientTensor(std::move(c));
}

CoefficientTensor lg_pair_tensor(const LGMode& m0, const LGMode& m1, double alpha,
                                 const LGBasis& basis) {
  return superpose(lg_state_tensor(m0, basis).normalized(), lg_state_tensor(m1, basis).normalized(),
                   alpha)
      .normalized();
}

HermitianMatrix lg_reduced_density(const LGMode& m0, const LGMode& m1, double alpha,
                                   const LGBasis& basis) {
  return reduce_pure_state(lg_pair_tensor(m0, m1, alpha, basis), "hermite-x");
}

Matrix lg_x_parity(int size) {
  Matrix p = Matrix::Zero(size, size);
  for (int a = 0; a < size; ++a) p(a, a) = (a % 2) ? -1.0 : 1.0;
  return p;
}

}  // namespace entconvex
