#include "entconvex/oscillator.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <memory>

#include "entconvex/errors.hpp"
#include "entconvex/quadrature.hpp"
#include "entconvex/tensor_cache.hpp"

namespace entconvex {

namespace {

double factorial_d(int n) { return std::tgamma(n + 1.0); }

double binom(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  return std::round(std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0)));
}

cplx ipow(int e) {
  switch (((e % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

// |a>_u |c>_v -> particle Fock states |i1>|i2>, with u = (x1+x2)/sqrt2 and
// v = (x1-x2)/sqrt2: (b1+ + b2+)^a (b1+ - b2+)^c / sqrt(2^{a+c} a! c!) |0>.
Eigen::MatrixXd beam_splitter(int a, int c, int n) {
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(n, n);
  const double norm = std::sqrt(std::ldexp(factorial_d(a) * factorial_d(c), a + c));
  for (int r = 0; r <= a; ++r)
    for (int s = 0; s <= c; ++s) {
      const int i1 = r + s, i2 = a + c - r - s;
      if (i1 >= n || i2 >= n) continue;
      const double sign = ((c - s) % 2) ? -1.0 : 1.0;
      t(i1, i2) += sign * binom(a, r) * binom(c, s) * std::sqrt(factorial_d(i1) * factorial_d(i2));
    }
  return t / norm;
}

// Same overlap by Gauss-Hermite quadrature in (x1, x2); the relative mode has
// frequency omega. Coordinates are dimensionless (ground state exp(-x^2/2)).
class QuadratureOverlaps {
 public:
  QuadratureOverlaps(int n, int order, double omega, int amax, int cmax)
      : n_(n), omega_(omega), rule_(gauss_hermite(order)) {
    const int q = order;
    phi_ = Eigen::MatrixXd(n, q);
    std::vector<double> buf(static_cast<std::size_t>(std::max({n, amax + 1, cmax + 1})));
    for (int k = 0; k < q; ++k) {
      hermite_functions(rule_.nodes[k], n, buf.data());
      for (int i = 0; i < n; ++i) phi_(i, k) = buf[i] * rule_.plain_weights[k];
    }
    u_.assign(static_cast<std::size_t>(q * q), {});
    v_.assign(static_cast<std::size_t>(q * q), {});
    const double s2 = std::sqrt(2.0), so = std::sqrt(omega), qo = std::sqrt(so);
    for (int k1 = 0; k1 < q; ++k1)
      for (int k2 = 0; k2 < q; ++k2) {
        const double x1 = rule_.nodes[k1], x2 = rule_.nodes[k2];
        auto& u = u_[k1 * q + k2];
        auto& v = v_[k1 * q + k2];
        u.resize(static_cast<std::size_t>(amax) + 1);
        v.resize(static_cast<std::size_t>(cmax) + 1);
        hermite_functions((x1 + x2) / s2, amax + 1, u.data());
        hermite_functions(so * (x1 - x2) / s2, cmax + 1, v.data());
        for (auto& x : v) x *= qo;
      }
  }

  Eigen::MatrixXd overlap(int a, int c) const {
    const int q = static_cast<int>(rule_.nodes.size());
    Eigen::MatrixXd f(q, q);
    for (int k1 = 0; k1 < q; ++k1)
      for (int k2 = 0; k2 < q; ++k2) f(k1, k2) = u_[k1 * q + k2][a] * v_[k1 * q + k2][c];
    return phi_ * f * phi_.transpose();
  }

 private:
  int n_;
  double omega_;
  QuadratureRule rule_;
  Eigen::MatrixXd phi_;  // phi_i(x_k) * w~_k
  std::vector<std::vector<double>> u_, v_;
};

void require_basis(const OscState& s, const OscBasisSpec& basis) {
  if (basis.n_per_coordinate < 2 || basis.quadrature_order < 2)
    throw DomainError("oscillator basis: sizes must be at least 2");
  if (basis.n_per_coordinate < s.quanta() + 2)
    throw DomainError("oscillator basis: N = " + std::to_string(basis.n_per_coordinate) +
                      " too small for state " + s.label());
}

}  // namespace

double OscState::omega_r() const { return std::sqrt(4.0 * lambda + 1.0); }

double OscState::energy() const {
  return (2 * n + std::abs(m) + 1) + (2 * l + std::abs(p) + 1) * omega_r();
}

int OscState::quanta() const { return 2 * n + std::abs(m) + 2 * l + std::abs(p); }

void OscState::validate() const {
  if (n < 0 || l < 0) throw DomainError("oscillator: radial quantum numbers must be >= 0");
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) throw DomainError("oscillator: lambda must be >= 0");
}

std::string OscState::label() const {
  return std::to_string(n) + std::to_string(m) + std::to_string(l) + std::to_string(p);
}

std::vector<KappaTerm> kappa_coefficients(int n, int m) {
  if (n < 0) throw DomainError("kappa_coefficients: n must be >= 0");
  const int am = std::abs(m);
  const int sg = m >= 0 ? 1 : -1;
  const double pref =
      1.0 / std::sqrt(factorial_d(n) * factorial_d(n + am) * std::ldexp(1.0, 2 * n + am));
  std::vector<KappaTerm> out;
  for (int j = 0; j <= n; ++j)
    for (int k = 0; k <= n + am; ++k) {
      const int nx = 2 * n + am - j - k, ny = j + k;
      const double mag =
          pref * binom(n, j) * binom(n + am, k) * std::sqrt(factorial_d(nx) * factorial_d(ny));
      out.push_back({j, k, mag * ipow(sg * (k - j)), nx, ny});
    }
  return out;
}

std::map<std::pair<int, int>, cplx> cartesian_expansion(int n, int m) {
  std::map<std::pair<int, int>, cplx> out;
  for (const auto& t : kappa_coefficients(n, m)) out[{t.nx, t.ny}] += t.value;
  for (auto it = out.begin(); it != out.end();)
    it = std::abs(it->second) < 1e-15 ? out.erase(it) : std::next(it);
  return out;
}

std::string tensor_cache_key(const OscState& s, const OscBasisSpec& basis, TensorMethod method) {
  char lam[64];
  std::snprintf(lam, sizeof lam, "%a", s.lambda);
  const bool analytic = method == TensorMethod::analytic ||
                        (method == TensorMethod::automatic && s.lambda == 0.0);
  std::string key = "osc_n" + std::to_string(s.n) + "_m" + std::to_string(s.m) + "_l" +
                    std::to_string(s.l) + "_p" + std::to_string(s.p) + "_lam" + lam + "_N" +
                    std::to_string(basis.n_per_coordinate);
  key += analytic ? std::string("_exact") : "_Q" + std::to_string(basis.quadrature_order);
  return key;
}

CoefficientTensor oscillator_state_tensor(const OscState& s, const OscBasisSpec& basis,
                                          TensorMethod method, TensorCache* cache) {
  s.validate();
  require_basis(s, basis);
  if (method == TensorMethod::automatic)
    method = s.lambda == 0.0 ? TensorMethod::analytic : TensorMethod::quadrature;
  if (method == TensorMethod::analytic && s.lambda != 0.0)
    throw DomainError("oscillator: the analytic tensor exists only at lambda = 0");

  const std::string key = tensor_cache_key(s, basis, method);
  if (cache)
    if (auto hit = cache->get(key)) return *hit;

  const int n = basis.n_per_coordinate;
  const auto centered = cartesian_expansion(s.n, s.m);
  const auto relative = cartesian_expansion(s.l, s.p);

  int amax = 0, cmax = 0;
  for (const auto& [k, v] : centered) amax = std::max({amax, k.first, k.second});
  for (const auto& [k, v] : relative) cmax = std::max({cmax, k.first, k.second});

  std::map<std::pair<int, int>, Eigen::MatrixXd> parts;
  std::unique_ptr<QuadratureOverlaps> quad;
  if (method == TensorMethod::quadrature)
    quad = std::make_unique<QuadratureOverlaps>(n, basis.quadrature_order, s.omega_r(), amax, cmax);
  auto part = [&](int a, int c) -> const Eigen::MatrixXd& {
    auto it = parts.find({a, c});
    if (it == parts.end())
      it = parts.emplace(std::make_pair(a, c), quad ? quad->overlap(a, c) : beam_splitter(a, c, n)).first;
    return it->second;
  };

  Matrix out = Matrix::Zero(n * n, n * n);
  for (const auto& [uc, ku] : centered)
    for (const auto& [vc, kv] : relative) {
      const cplx coef = ku * kv;
      const Eigen::MatrixXd& x = part(uc.first, vc.first);
      const Eigen::MatrixXd& y = part(uc.second, vc.second);
      for (int i1 = 0; i1 < n; ++i1)
        for (int i2 = 0; i2 < n; ++i2) {
          const double xv = x(i1, i2);
          if (xv == 0.0) continue;
          for (int j1 = 0; j1 < n; ++j1)
            for (int j2 = 0; j2 < n; ++j2) {
              const double yv = y(j1, j2);
              if (yv != 0.0) out(i1 * n + j1, i2 * n + j2) += coef * (xv * yv);
            }
        }
    }
  CoefficientTensor t(std::move(out));
  if (cache) cache->put(key, t);
  return t;
}

CoefficientTensor oscillator_pair_tensor(const OscState& s0, const OscState& s1, double alpha,
                                         const OscBasisSpec& basis, TensorCache* cache) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw DomainError("alpha outside [0, 1]");
  const auto t0 = oscillator_state_tensor(s0, basis, TensorMethod::automatic, cache);
  const auto t1 = oscillator_state_tensor(s1, basis, TensorMethod::automatic, cache);
  for (const auto* t : {&t0, &t1})
    if (1.0 - t->norm() * t->norm() > 1e-6)
      throw NumericalError("oscillator basis too small: captured norm " +
                           std::to_string(t->norm() * t->norm()));
  return superpose(t0.normalized(), t1.normalized(), alpha).normalized();
}

HermitianMatrix oscillator_reduced_density(const OscState& s0, const OscState& s1, double alpha,
                                           const OscBasisSpec& basis, TensorCache* cache) {
  if (std::abs(s0.energy() - s1.energy()) > 1e-9)
    std::fprintf(stderr, "warning: states %s and %s are not degenerate\n", s0.label().c_str(),
                 s1.label().c_str());
  auto rho = reduce_pure_state(oscillator_pair_tensor(s0, s1, alpha, basis, cache), "hermite-xy");
  if (std::abs(rho.trace() - 1.0) > 1e-6) throw NumericalError("reduced density trace differs from 1");
  return rho;
}

namespace {

Eigen::MatrixXd lowering(int n) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (int k = 1; k < n; ++k) a(k - 1, k) = std::sqrt(double(k));
  return a;
}

Eigen::MatrixXd position_squared(int n) {
  Eigen::MatrixXd x2 = Eigen::MatrixXd::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    x2(k, k) = k + 0.5;
    if (k + 2 < n) x2(k, k + 2) = x2(k + 2, k) = 0.5 * std::sqrt((k + 1.0) * (k + 2.0));
  }
  return x2;
}

Eigen::MatrixXd kron(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  Eigen::MatrixXd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

double side_expectation(const Matrix& c, const Matrix& op1, const Matrix& op2) {
  return (c.conjugate().cwiseProduct(op1 * c * op2.transpose())).sum().real();
}

}  // namespace

double oscillator_energy_expectation(const CoefficientTensor& c, double lambda, int n) {
  if (c.dim_a() != n * n || c.dim_b() != n * n) throw DomainError("energy: tensor size mismatch");
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd num = Eigen::MatrixXd::Zero(n, n);
  for (int k = 0; k < n; ++k) num(k, k) = k + 0.5;
  const Eigen::MatrixXd a = lowering(n);
  const Eigen::MatrixXd x = (a + a.transpose()) / std::sqrt(2.0);

  const Matrix h1 = (kron(num, id) + kron(id, num) +
                     lambda * (kron(position_squared(n), id) + kron(id, position_squared(n))))
                        .cast<cplx>();
  const Matrix id2 = Matrix::Identity(n * n, n * n);
  const Matrix x1 = kron(x, id).cast<cplx>();
  const Matrix y1 = kron(id, x).cast<cplx>();

  const Matrix& m = c.amplitudes();
  const double norm2 = m.squaredNorm();
  double e = side_expectation(m, h1, id2) + side_expectation(m, id2, h1);
  e -= 2.0 * lambda * (side_expectation(m, x1, x1) + side_expectation(m, y1, y1));
  return e / norm2;
}

Matrix oscillator_lz_one_particle(int n) {
  const Eigen::MatrixXd a = lowering(n);
  const Eigen::MatrixXd ad = a.transpose();
  // L_z = -i (a_x^+ a_y - a_y^+ a_x), x index major
  return cplx(0.0, -1.0) * (kron(ad, a) - kron(a, ad)).cast<cplx>();
}

double oscillator_lz_residual(const CoefficientTensor& c, int expected, int n) {
  const Matrix lz = oscillator_lz_one_particle(n);
  const Matrix& m = c.amplitudes();
  const Matrix r = lz * m + m * lz.transpose() - double(expected) * m;
  // L_z keeps each particle's shell i + j fixed, so entries whose shells are
  // complete in the basis (i + j < n) are exact; the rest see the cutoff.
  double num = 0, den = 0;
  for (Eigen::Index a = 0; a < m.rows(); ++a) {
    if (a / n + a % n >= n) continue;
    for (Eigen::Index b = 0; b < m.cols(); ++b) {
      if (b / n + b % n >= n) continue;
      num += std::norm(r(a, b));
      den += std::norm(m(a, b));
    }
  }
  return std::sqrt(num / den);
}

}  // namespace entconvex
