#pragma once

#include <array>
#include <complex>
#include <vector>

#include <gmpxx.h>

#include "entconvex/angular.hpp"
#include "entconvex/spectra.hpp"

namespace entconvex {

// Two electrons on a sphere, L = 2 quasi-exact state at R^2 = 6 with
// Phi(r12) = 1 + r12 / 4.
struct SpheriumState {
  static constexpr int L = 2;
  static constexpr int R2 = 6;
  static constexpr int alpha_radial = 4;
  int M = 0;

  void validate() const;
  static double radius();
};

struct PerkinsTerm {
  int l = 0, t = 0;
  mpq_class coefficient;
};

// r12^k = 4 pi sum_l (sum_m Y*_lm(1) Y_lm(2)) sum_t C_klt r<^{l+2t} r>^{k-l-2t}
struct PerkinsExpansion {
  int k = 0;
  int lmax = 0;  // l range actually stored
  std::vector<PerkinsTerm> terms;

  // sum_t C_klt for the given l (exact).
  mpq_class radial_sum(int l) const;
  // r12^k on a sphere of radius R at angle gamma between the two points.
  double evaluate(double cos_gamma, double radius) const;
};

// For even k the l sum stops at k/2; for odd k it is truncated at lmax.
PerkinsExpansion perkins_coefficients(int k, int lmax);

// int Y*_{l3 m3} Y_{l2 m2} Y_{l1 m1} dOmega, times sqrt(4 pi), exactly.
ExactCoefficient gaunt_scaled(int l3, int m3, int l2, int m2, int l1, int m1);
double gaunt_integral(int l3, int m3, int l2, int m2, int l1, int m1);

std::complex<double> spherical_harmonic(int l, int m, double theta, double phi);

// Y^{2,M}_{1,2}(1,2) - Y^{2,M}_{1,2}(2,1)
std::complex<double> spherium_angular_part(int M, double theta1, double phi1, double theta2,
                                           double phi2);
std::complex<double> spherium_wavefunction(int M, double theta1, double phi1, double theta2,
                                           double phi2);

// E implied by the reduced radial equation for Phi = 1 + r/4 at R^2 = 6.
double spherium_energy();
// Reduced equation Phi'' + (4/r - 3r/(2R^2)) Phi' - Phi/r + E Phi at r.
double spherium_radial_residual(double r, double energy);
// Both coupled equations with Phi12 = Phi21 = Phi.
std::array<double, 2> spherium_coupled_residual(double r, double energy);

struct SpheriumTensor {
  CoefficientTensor tensor;   // unnormalized, over (l, m) x (l, m), l <= lmax + 2
  int lmax = 0;
  double truncated_norm2 = 0;  // sum |c|^2
  double exact_norm2 = 0;      // int |Psi|^2 from |Phi|^2 = 1 + r/2 + r^2/16
  // Perkins terms above lmax still feed the kept shells, so the truncated
  // norm can land on either side of the exact one.
  double trace_deficit() const { return 1.0 - truncated_norm2 / exact_norm2; }
};

SpheriumTensor spherium_state_tensor(int M, int lmax);

// Basis index of Y_lm: l^2 + (l - m).
inline int sph_index(int l, int m) { return l * l + (l - m); }
inline int spherium_dim(int lmax) { return (lmax + 3) * (lmax + 3); }

HermitianMatrix spherium_reduced_density(int M, int Mprime, double alpha, int lmax = 20);
CoefficientTensor spherium_pair_tensor(int M, int Mprime, double alpha, int lmax = 20);

// One-particle L_z in the Y_lm basis.
Matrix spherium_lz_one_particle(int lmax);

}  // namespace entconvex
