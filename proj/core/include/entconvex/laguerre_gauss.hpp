#pragma once

#include <complex>

#include "entconvex/spectra.hpp"

namespace entconvex {

struct LGMode {
  int l = 0;  // radial index
  int m = 0;  // orbital angular momentum
  double s0 = 1.0;
  double z = 0.0;
  double k = 1.0;

  std::complex<double> s2() const { return {s0 * s0, 2.0 * z / k}; }
  void validate() const;
};

struct LGBasis {
  int size = 40;               // Hermite functions per coordinate
  int quadrature_order = 64;   // Gauss-Hermite points per coordinate
};

// u_lm at (x, y) for the mode's fixed z, without the exp(ikz - i w t) phase.
std::complex<double> lg_evaluate(const LGMode& mode, double x, double y);

// Amplitudes c(a, b) = int f_a(x) f_b(y) u(x, y), normalized by the plane
// norm of u. Throws NumericalError if the basis captures less than 1 - 1e-6.
CoefficientTensor lg_state_tensor(const LGMode& mode, const LGBasis& basis);

CoefficientTensor lg_pair_tensor(const LGMode& m0, const LGMode& m1, double alpha,
                                 const LGBasis& basis);

// Trace over y; basis f_a(x).
HermitianMatrix lg_reduced_density(const LGMode& m0, const LGMode& m1, double alpha,
                                   const LGBasis& basis);

// x -> -x on the f_a basis.
Matrix lg_x_parity(int size);

}  // namespace entconvex
