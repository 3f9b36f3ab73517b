#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "entconvex/spectra.hpp"

namespace entconvex {

// value = sign * sqrt(square)
struct ExactCoefficient {
  int sign = 0;
  mpq_class square = 0;

  double value() const;
  bool is_zero() const { return sign == 0; }
  std::string str() const;
};

inline constexpr int kMaxAngular = 12;    // angular-model states
inline constexpr int kMaxCgArgument = 64;  // CG engine (spherium Gaunt products go higher)

// Condon-Shortley convention, Racah closed form in exact arithmetic.
// Returns zero when m1 + m2 != M or |m| exceeds its l. Throws DomainError on a
// triangle violation. Memoized; safe for concurrent callers.
ExactCoefficient clebsch_gordan(int l1, int m1, int l2, int m2, int L, int M);

struct AngularConfig {
  int l1 = 0, l2 = 0, L = 0, M = 0;
  void validate() const;
};

using RationalMatrix = std::vector<std::vector<mpq_class>>;

// Reduced density of particle 1 for Y^{L,M}_{l,l} (alpha = 1) or Y^{L,M'}
// (alpha = 0), exactly. Basis ordering m = l, l-1, ..., -l.
RationalMatrix coupled_reduced_density_exact(int l, int L, int M, int Mprime, bool alpha_is_one);

// Reduced density for sqrt(alpha) Y^{L,M} + sqrt(1 - alpha) Y^{L,M'}.
HermitianMatrix coupled_reduced_density(int l, int L, int M, int Mprime, double alpha);

// The same state as a coefficient tensor over (m1, m2).
CoefficientTensor coupled_state_tensor(int l, int L, int M, int Mprime, double alpha);

// Eigenvalue of L^2 - L_z^2 on Y^{L,M}: L(L+1) - M^2.
int coupled_energy_check(int l, int L, int M);

// One-particle L_z in the m = l..-l basis.
Matrix angular_lz(int l);

}  // namespace entconvex
