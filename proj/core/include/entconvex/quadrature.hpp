#pragma once

#include <vector>

namespace entconvex {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;  // for the rule's native weight function
  // Gauss-Hermite only: weights * exp(x^2), so that sum w~ f(x) ~ int f dx
  // for f decaying like a Gaussian.
  std::vector<double> plain_weights;
};

// Nodes of H_n, weight exp(-x^2). Golub-Welsch followed by Newton polishing.
QuadratureRule gauss_hermite(int order);

// Nodes on [-1, 1], weight 1.
QuadratureRule gauss_legendre(int order);

// Orthonormal Hermite functions phi_0..phi_{count-1} at x (weight-free,
// int phi_j phi_k dx = delta_jk, ground state pi^{-1/4} exp(-x^2/2)).
void hermite_functions(double x, int count, double* out);
std::vector<double> hermite_functions(double x, int count);

// f_n^w(x) = (w/2)^{1/4} phi_n(sqrt(w/2) x): the oscillator eigenfunction
// with Gaussian factor exp(-w x^2 / 4).
double hermite_mode(int n, double omega, double x);

}  // namespace entconvex
