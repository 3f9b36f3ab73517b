#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "entconvex/spectra.hpp"

namespace entconvex {

class TensorCache;

// |n, m>_R |l, p>_r of two 2D oscillators with coupling lambda (x1 - x2)^2.
struct OscState {
  int n = 0, m = 0, l = 0, p = 0;
  double lambda = 0.0;

  double omega_r() const;
  double energy() const;  // (2n+|m|+1) + (2l+|p|+1) omega_r
  int lz() const { return m + p; }
  int quanta() const;     // 2n+|m|+2l+|p|
  void validate() const;
  std::string label() const;  // e.g. "003-1"
};

struct OscBasisSpec {
  int n_per_coordinate = 16;
  int quadrature_order = 48;
};

enum class TensorMethod { automatic, analytic, quadrature };

struct KappaTerm {
  int j = 0, k = 0;
  cplx value;
  int nx = 0, ny = 0;  // Cartesian target |nx, ny>
};

// Cylindrical |n, m> in Cartesian Fock states |2n+|m|-j-k, j+k>.
std::vector<KappaTerm> kappa_coefficients(int n, int m);
// Terms grouped by Cartesian target.
std::map<std::pair<int, int>, cplx> cartesian_expansion(int n, int m);

// Amplitudes over ((i1, j1), (i2, j2)) with row index i1 * N + j1 (particle 1
// x and y Hermite indices) and column i2 * N + j2. Not normalized: the norm is
// what the truncated basis captures.
CoefficientTensor oscillator_state_tensor(const OscState& s, const OscBasisSpec& basis,
                                          TensorMethod method = TensorMethod::automatic,
                                          TensorCache* cache = nullptr);

// Normalized superposition sqrt(alpha) psi0 + sqrt(1-alpha) psi1. Throws
// NumericalError if either state loses more than 1e-6 of its norm.
CoefficientTensor oscillator_pair_tensor(const OscState& s0, const OscState& s1, double alpha,
                                         const OscBasisSpec& basis, TensorCache* cache = nullptr);

HermitianMatrix oscillator_reduced_density(const OscState& s0, const OscState& s1, double alpha,
                                           const OscBasisSpec& basis, TensorCache* cache = nullptr);

// <H> of a (normalized) tensor in the truncated Fock basis.
double oscillator_energy_expectation(const CoefficientTensor& c, double lambda, int n_per_coordinate);

// Relative || L_z c - expected c || for total L_z, over entries whose
// one-particle shells i + j lie entirely inside the basis.
double oscillator_lz_residual(const CoefficientTensor& c, int expected, int n_per_coordinate);

// One-particle L_z on the (i, j) Hermite product basis of size N^2.
Matrix oscillator_lz_one_particle(int n_per_coordinate);

std::string tensor_cache_key(const OscState& s, const OscBasisSpec& basis, TensorMethod method);

}  // namespace entconvex
