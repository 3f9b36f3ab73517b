#include "entconvex/spherium.hpp"

#include <cmath>
#include <cstdlib>
#include <map>
#include <numbers>

#include "entconvex/errors.hpp"

namespace entconvex {

void SpheriumState::validate() const {
  if (std::abs(M) > L) throw DomainError("spherium: |M| must not exceed 2");
}

double SpheriumState::radius() { return std::sqrt(double(R2)); }

namespace {

mpz_class binomial(int n, int k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace

mpq_class PerkinsExpansion::radial_sum(int l) const {
  mpq_class s = 0;
  for (const auto& t : terms)
    if (t.l == l) s += t.coefficient;
  return s;
}

double PerkinsExpansion::evaluate(double cos_gamma, double radius) const {
  double acc = 0.0;
  for (int l = 0; l <= lmax; ++l)
    acc += (2 * l + 1) * std::legendre(static_cast<unsigned>(l), cos_gamma) * radial_sum(l).get_d();
  return acc * std::pow(radius, k);
}

PerkinsExpansion perkins_coefficients(int k, int lmax) {
  if (k < -1) throw DomainError("perkins_coefficients: k must be >= -1");
  PerkinsExpansion e;
  e.k = k;
  const bool even = k % 2 == 0;
  e.lmax = even ? k / 2 : lmax;
  for (int l = 0; l <= e.lmax; ++l) {
    const int tmax = even ? k / 2 - l : (k + 1) / 2;
    for (int t = 0; t <= tmax; ++t) {
      mpq_class c(binomial(k + 2, 2 * t + 1), k + 2);
      c.canonicalize();
      if (l > 0) {
        const int amax = std::min(l - 1, (k + 1) / 2);
        for (int a = 0; a <= amax; ++a) {
          mpq_class f(2 * t - k + 2 * a, 2 * t + 1 + 2 * l - 2 * a);
          f.canonicalize();
          c *= f;
        }
      }
      e.terms.push_back({l, t, c});
    }
  }
  return e;
}

ExactCoefficient gaunt_scaled(int l3, int m3, int l2, int m2, int l1, int m1) {
  if (m3 != m1 + m2 || (l1 + l2 + l3) % 2 || l3 < std::abs(l1 - l2) || l3 > l1 + l2) return {};
  if (std::abs(m1) > l1 || std::abs(m2) > l2 || std::abs(m3) > l3) return {};
  const auto a = clebsch_gordan(l1, m1, l2, m2, l3, m3);
  const auto b = clebsch_gordan(l1, 0, l2, 0, l3, 0);
  if (a.is_zero() || b.is_zero()) return {};
  mpq_class f((2 * l1 + 1) * (2 * l2 + 1), 2 * l3 + 1);
  f.canonicalize();
  return {a.sign * b.sign, f * a.square * b.square};
}

double gaunt_integral(int l3, int m3, int l2, int m2, int l1, int m1) {
  return gaunt_scaled(l3, m3, l2, m2, l1, m1).value() / std::sqrt(4.0 * std::numbers::pi);
}

std::complex<double> spherical_harmonic(int l, int m, double theta, double phi) {
  if (l < 0 || std::abs(m) > l) return 0.0;
  const int am = std::abs(m);
  // std::sph_legendre carries the Condon-Shortley phase.
  const double y = std::sph_legendre(static_cast<unsigned>(l), static_cast<unsigned>(am), theta);
  std::complex<double> v = y * std::polar(1.0, am * phi);
  if (m < 0) v = ((am % 2) ? -1.0 : 1.0) * std::conj(v);
  return v;
}

std::complex<double> spherium_angular_part(int M, double t1, double p1, double t2, double p2) {
  SpheriumState{M}.validate();
  std::complex<double> acc = 0.0;
  for (int m1 = -1; m1 <= 1; ++m1) {
    const int m2 = M - m1;
    if (std::abs(m2) > 2) continue;
    const double c = clebsch_gordan(1, m1, 2, m2, 2, M).value();
    acc += c * (spherical_harmonic(1, m1, t1, p1) * spherical_harmonic(2, m2, t2, p2) -
                spherical_harmonic(1, m1, t2, p2) * spherical_harmonic(2, m2, t1, p1));
  }
  return acc;
}

std::complex<double> spherium_wavefunction(int M, double t1, double p1, double t2, double p2) {
  const double cg = std::cos(t1) * std::cos(t2) + std::sin(t1) * std::sin(t2) * std::cos(p1 - p2);
  const double r12 = SpheriumState::radius() * std::sqrt(std::max(0.0, 2.0 - 2.0 * cg));
  return spherium_angular_part(M, t1, p1, t2, p2) * (1.0 + r12 / SpheriumState::alpha_radial);
}

namespace {

struct PhiValues {
  double f, d1, d2;
};

PhiValues phi(double r) { return {1.0 + r / SpheriumState::alpha_radial, 1.0 / SpheriumState::alpha_radial, 0.0}; }

double reduced_operator_without_e(double r) {
  const double r2 = SpheriumState::R2;
  const auto p = phi(r);
  return p.d2 + (4.0 / r - 3.0 * r / (2.0 * r2)) * p.d1 - p.f / r;
}

}  // namespace

double spherium_energy() {
  // Solve the reduced equation for E at a reference point; the residual
  // check elsewhere confirms the same E works on the whole domain.
  const double r = 1.0;
  return -reduced_operator_without_e(r) / phi(r).f;
}

double spherium_radial_residual(double r, double energy) {
  return reduced_operator_without_e(r) + energy * phi(r).f;
}

std::array<double, 2> spherium_coupled_residual(double r, double energy) {
  const double r2 = SpheriumState::R2;
  const auto p = phi(r);
  // Phi12 = Phi21 = Phi, so both equations share the same form.
  const double x1 = p.d2 + (4.0 * r2 - r * r) / (r2 * r) * p.d1;
  const double x2 = p.d2 + (6.0 * r2 - 2.0 * r * r) / (r2 * r) * p.d1;
  const double eq = -0.5 * x1 - 0.5 * x2 + (1.0 / r - energy) * p.f + p.d1 / r;
  return {eq, eq};
}

namespace {

struct Amp {
  int la, ma, lb, mb;
  double value;
};

// Antisymmetrized Y^{2,M}_{1,2} as amplitudes over Y_a(1) Y_b(2).
std::vector<Amp> coupled_amplitudes(int M) {
  std::vector<Amp> out;
  for (int m1 = -1; m1 <= 1; ++m1) {
    const int m2 = M - m1;
    if (std::abs(m2) > 2) continue;
    const double c = clebsch_gordan(1, m1, 2, m2, 2, M).value();
    if (c == 0.0) continue;
    out.push_back({1, m1, 2, m2, c});
    out.push_back({2, m2, 1, m1, -c});
  }
  return out;
}

// Y_{l1 m1} Y_{l2 m2} = sum_L g Y_{L, m1+m2}, g = gaunt_scaled / sqrt(4 pi).
// The 1/(4 pi) from two such factors is absorbed by the 4 pi of Perkins.
std::vector<std::pair<int, double>> product_scaled(int l1, int m1, int l2, int m2) {
  std::vector<std::pair<int, double>> out;
  for (int L = std::abs(l1 - l2); L <= l1 + l2; ++L) {
    const auto g = gaunt_scaled(L, m1 + m2, l2, m2, l1, m1);
    if (!g.is_zero()) out.emplace_back(L, g.value());
  }
  return out;
}

double exact_norm2(const std::vector<Amp>& amps) {
  // |Phi|^2 = 1 + r/2 + r^2/16 with r^k = 4 pi sum_lm Y*_lm(1) Y_lm(2) R^k s_kl
  const double radius = SpheriumState::radius();
  const std::array<double, 3> weight{1.0, 0.5, 1.0 / 16.0};
  double total = 0.0;
  for (int k = 0; k <= 2; ++k) {
    const auto pk = perkins_coefficients(k, 4);
    for (int l = 0; l <= pk.lmax; ++l) {
      const double s = pk.radial_sum(l).get_d() * std::pow(radius, k) * weight[k];
      if (s == 0.0) continue;
      for (int m = -l; m <= l; ++m)
        for (const auto& x : amps)
          for (const auto& y : amps) {
            // int Y*_a Y_a' Y*_lm dOmega1 * int Y*_b Y_b' Y_lm dOmega2, times 4 pi
            const double g1 = gaunt_scaled(y.la, y.ma, x.la, x.ma, l, m).value();
            const double g2 = gaunt_scaled(x.lb, x.mb, y.lb, y.mb, l, m).value();
            total += x.value * y.value * s * g1 * g2;
          }
    }
  }
  return total;
}

}  // namespace

SpheriumTensor spherium_state_tensor(int M, int lmax) {
  SpheriumState{M}.validate();
  if (lmax < 2) throw DomainError("spherium: lmax must be at least 2");
  const double radius = SpheriumState::radius();
  const auto perkins = perkins_coefficients(1, lmax);
  const int dim = spherium_dim(lmax);

  // Phi = sum_l h_l sum_m Y*_lm(1) Y_lm(2), h_l / (4 pi) = delta_l0 + (R/4) s_1l
  std::vector<double> h(static_cast<std::size_t>(lmax) + 1);
  for (int l = 0; l <= lmax; ++l)
    h[l] = (l == 0 ? 1.0 : 0.0) + radius / SpheriumState::alpha_radial * perkins.radial_sum(l).get_d();

  const auto amps = coupled_amplitudes(M);
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(dim, dim);
  for (const auto& a : amps)
    for (int l = 0; l <= lmax; ++l)
      for (int m = -l; m <= l; ++m) {
        const double sign = (m % 2) ? -1.0 : 1.0;  // Y*_lm = (-1)^m Y_{l,-m}
        const double w = a.value * h[l] * sign;
        const auto left = product_scaled(a.la, a.ma, l, -m);
        const auto right = product_scaled(a.lb, a.mb, l, m);
        for (const auto& [l1, g1] : left)
          for (const auto& [l2, g2] : right)
            c(sph_index(l1, a.ma - m), sph_index(l2, a.mb + m)) += w * g1 * g2;
      }

  SpheriumTensor out;
  out.lmax = lmax;
  out.tensor = CoefficientTensor(c.cast<cplx>());
  out.truncated_norm2 = c.squaredNorm();
  out.exact_norm2 = exact_norm2(amps);
  return out;
}

CoefficientTensor spherium_pair_tensor(int M, int Mprime, double alpha, int lmax) {
  const auto t0 = spherium_state_tensor(M, lmax);
  const auto t1 = spherium_state_tensor(Mprime, lmax);
  for (const auto* t : {&t0, &t1})
    if (std::abs(t->trace_deficit()) > 1e-6)
      throw NumericalError("spherium: lmax " + std::to_string(lmax) + " leaves trace deficit " +
                           std::to_string(t->trace_deficit()));
  return superpose(t0.tensor.normalized(), t1.tensor.normalized(), alpha).normalized();
}

HermitianMatrix spherium_reduced_density(int M, int Mprime, double alpha, int lmax) {
  return reduce_pure_state(spherium_pair_tensor(M, Mprime, alpha, lmax), "Ylm");
}

Matrix spherium_lz_one_particle(int lmax) {
  const int dim = spherium_dim(lmax);
  Matrix z = Matrix::Zero(dim, dim);
  for (int l = 0; l <= lmax + 2; ++l)
    for (int m = -l; m <= l; ++m) z(sph_index(l, m), sph_index(l, m)) = m;
  return z;
}

}  // namespace entconvex
