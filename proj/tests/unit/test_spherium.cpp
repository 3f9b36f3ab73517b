#include <cmath>
#include <random>

#include "doctest.h"
#include "entconvex/errors.hpp"
#include "entconvex/quadrature.hpp"
#include "entconvex/spherium.hpp"
#include "helpers.hpp"

using namespace entconvex;

namespace {

struct AnglePair {
  double t1, p1, t2, p2;
  double cos_gamma() const {
    return std::cos(t1) * std::cos(t2) + std::sin(t1) * std::sin(t2) * std::cos(p1 - p2);
  }
};

std::vector<AnglePair> random_pairs(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0), ph(0.0, 2 * M_PI);
  std::vector<AnglePair> out;
  for (int i = 0; i < n; ++i) out.push_back({std::acos(u(rng)), ph(rng), std::acos(u(rng)), ph(rng)});
  return out;
}

// int Y*_{l3 m3} Y_{l2 m2} Y_{l1 m1} over the sphere by product quadrature
double gaunt_by_quadrature(int l3, int m3, int l2, int m2, int l1, int m1) {
  const auto gl = gauss_legendre(40);
  const int nphi = 64;
  std::complex<double> acc = 0;
  for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
    const double theta = std::acos(gl.nodes[i]);
    for (int j = 0; j < nphi; ++j) {
      const double phi = 2 * M_PI * j / nphi;
      acc += gl.weights[i] * (2 * M_PI / nphi) * std::conj(spherical_harmonic(l3, m3, theta, phi)) *
             spherical_harmonic(l2, m2, theta, phi) * spherical_harmonic(l1, m1, theta, phi);
    }
  }
  return acc.real();
}

double entropy(int M, double alpha, int lmax) {
  return von_neumann_entropy(eigendecompose(spherium_reduced_density(M, -M, alpha, lmax)));
}

}  // namespace

TEST_CASE("Perkins k = 0 and k = 2 are finite") {
  const auto p0 = perkins_coefficients(0, 40);
  REQUIRE(p0.terms.size() == 1);
  CHECK(p0.terms[0].coefficient == 1);
  CHECK(p0.lmax == 0);

  const auto p2 = perkins_coefficients(2, 40);
  CHECK(p2.lmax == 1);
  const double R = SpheriumState::radius();
  for (const auto& a : random_pairs(100, 1)) {
    const double exact = 2 * R * R * (1 - a.cos_gamma());
    CHECK(std::abs(p2.evaluate(a.cos_gamma(), R) - exact) < 1e-12);
  }
}

TEST_CASE("Perkins k = 1 coefficients") {
  // on the sphere: sum_t C_1lt = -4 / ((2l-1)(2l+1)(2l+3))
  const auto p1 = perkins_coefficients(1, 60);
  for (int l = 0; l <= 60; ++l)
    CHECK(p1.radial_sum(l) == mpq_class(-4) / ((2 * l - 1) * (2 * l + 1) * (2 * l + 3)));
  CHECK_THROWS_AS(perkins_coefficients(-2, 10), DomainError);
}

TEST_CASE("Perkins k = 1 converges to the chord length") {
  // All terms share a sign and |P_l| <= 1, so the largest error sits at
  // coincident points, where the tail telescopes to 1/(2L+1) + 1/(2L+3).
  const double R = SpheriumState::radius();
  for (int lmax : {40, 160}) {
    const auto p1 = perkins_coefficients(1, lmax);
    const double tail = R * (1.0 / (2 * lmax + 1) + 1.0 / (2 * lmax + 3));
    CHECK(std::abs(p1.evaluate(1.0, R) - tail) < 1e-12);
    for (const auto& a : random_pairs(100, 2)) {
      const double exact = R * std::sqrt(2 - 2 * a.cos_gamma());
      CHECK(std::abs(p1.evaluate(a.cos_gamma(), R) - exact) <= tail + 1e-12);
    }
  }
  // away from the cusp the series is much closer
  const auto p = perkins_coefficients(1, 160);
  for (const auto& a : random_pairs(100, 3)) {
    if (a.cos_gamma() > 0.9) continue;
    CHECK(std::abs(p.evaluate(a.cos_gamma(), R) - R * std::sqrt(2 - 2 * a.cos_gamma())) < 1e-4);
  }
}

TEST_CASE("Gaunt integrals") {
  CHECK(gaunt_integral(0, 0, 0, 0, 0, 0) == doctest::Approx(1 / std::sqrt(4 * M_PI)).epsilon(1e-15));
  CHECK(gaunt_integral(1, 0, 1, 0, 1, 0) == 0.0);  // odd l sum
  CHECK(gaunt_integral(2, 1, 1, 0, 1, 0) == 0.0);  // m mismatch
  CHECK(gaunt_integral(4, 0, 1, 0, 1, 0) == 0.0);  // triangle
  CHECK(std::abs(gaunt_integral(2, 0, 1, 0, 1, 0) - gaunt_by_quadrature(2, 0, 1, 0, 1, 0)) < 1e-12);
  for (int l1 = 0; l1 <= 3; ++l1)
    for (int l2 = 0; l2 <= 3; ++l2)
      for (int l3 = std::abs(l1 - l2); l3 <= l1 + l2; ++l3)
        for (int m1 = -l1; m1 <= l1; ++m1)
          for (int m2 = -l2; m2 <= l2; ++m2) {
            const int m3 = m1 + m2;
            if (std::abs(m3) > l3) continue;
            CAPTURE(l1);
            CAPTURE(l2);
            CAPTURE(l3);
            const double g = gaunt_integral(l3, m3, l2, m2, l1, m1);
            CHECK(std::abs(g - gaunt_by_quadrature(l3, m3, l2, m2, l1, m1)) < 1e-12);
            CHECK(std::abs(g - gaunt_integral(l3, m3, l1, m1, l2, m2)) < 1e-15);
          }
}

TEST_CASE("radial equation") {
  const double e = spherium_energy();
  CHECK(e == doctest::Approx(0.25).epsilon(1e-14));
  const double top = 2 * SpheriumState::radius();
  for (int i = 1; i < 200; ++i) {
    const double r = top * i / 200.0;
    CHECK(std::abs(spherium_radial_residual(r, e)) <= 1e-10);
    const auto c = spherium_coupled_residual(r, e);
    CHECK(std::abs(c[0]) <= 1e-10);
    CHECK(std::abs(c[1]) <= 1e-10);
  }
  // the wrong energy leaves a residual
  CHECK(std::abs(spherium_radial_residual(1.0, 0.3)) > 1e-3);
}

TEST_CASE("angular part is antisymmetric") {
  for (int M = -2; M <= 2; ++M)
    for (const auto& a : random_pairs(20, 10 + M)) {
      const auto f = spherium_angular_part(M, a.t1, a.p1, a.t2, a.p2);
      const auto g = spherium_angular_part(M, a.t2, a.p2, a.t1, a.p1);
      CHECK(std::abs(f + g) < 1e-13);
      CHECK(std::abs(spherium_wavefunction(M, a.t1, a.p1, a.t2, a.p2) +
                     spherium_wavefunction(M, a.t2, a.p2, a.t1, a.p1)) < 1e-13);
    }
}

TEST_CASE("tensor norm and trace deficit") {
  const auto t = spherium_state_tensor(1, 20);
  CHECK(t.exact_norm2 > 0);
  CHECK(std::abs(t.trace_deficit()) <= 1e-6);
  CHECK(std::abs(spherium_state_tensor(1, 24).trace_deficit()) < std::abs(t.trace_deficit()));
  CHECK(t.tensor.dim_a() == spherium_dim(20));
  // the tensor is antisymmetric under particle exchange
  CHECK(testutil::max_abs(t.tensor.amplitudes() + t.tensor.amplitudes().transpose()) < 1e-12);
}

TEST_CASE("reduced density is Hermitian with unit trace") {
  const auto r = spherium_reduced_density(1, -1, 0.3, 20);
  CHECK(r.trace() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(testutil::max_abs(r.entries() - r.entries().adjoint()) == 0.0);
  CHECK_NOTHROW(r.require_density());
}

TEST_CASE("endpoints are mirror images") {
  for (int M : {1, 2}) {
    const auto a = eigendecompose(spherium_reduced_density(M, -M, 1.0, 20));
    const auto b = eigendecompose(spherium_reduced_density(M, -M, 0.0, 20));
    CHECK((a.eigenvalues - b.eigenvalues).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("lmax convergence") {
  for (int M : {1, 2})
    for (double alpha : {1.0, 0.5}) {
      CAPTURE(M);
      CAPTURE(alpha);
      CHECK(std::abs(entropy(M, alpha, 20) - entropy(M, alpha, 24)) <= 1e-4);
    }
}

TEST_CASE("L_z commutes with the endpoint densities") {
  const Matrix lz = spherium_lz_one_particle(20);
  const auto r = spherium_reduced_density(2, -2, 1.0, 20);
  CHECK(testutil::max_abs(lz * r.entries() - r.entries() * lz) < 1e-12);
}

TEST_CASE("state validation") {
  const SpheriumState bad{3};
  CHECK_THROWS_AS(bad.validate(), DomainError);
  CHECK(sph_index(0, 0) == 0);
  CHECK(sph_index(1, 1) == 1);
  CHECK(sph_index(1, -1) == 3);
  CHECK(sph_index(2, 2) == 4);
}
