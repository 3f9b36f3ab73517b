#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace entconvex {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr double kDegeneracyTol = 1e-8;
inline constexpr double kSupportFloor = 1e-12;
inline constexpr double kHermiticityTol = 1e-12;

class HermitianMatrix {
 public:
  // Throws DomainError if entries are not Hermitian within tol. The stored
  // matrix is the exact Hermitian part of the input.
  explicit HermitianMatrix(Matrix entries, std::string basis_label = {},
                           double tol = kHermiticityTol);

  Eigen::Index dim() const { return entries_.rows(); }
  const Matrix& entries() const { return entries_; }
  const std::string& basis_label() const { return basis_label_; }
  double trace() const { return entries_.trace().real(); }

  // Throws NumericalError unless trace ~ 1 and the spectrum is >= -1e-10.
  void require_density(double trace_tol = 1e-8) const;

 private:
  Matrix entries_;
  std::string basis_label_;
};

struct Block {
  std::size_t begin = 0;
  std::size_t size = 0;
  double value = 0.0;  // mean eigenvalue of the block
};

struct Spectrum {
  Eigen::VectorXd eigenvalues;  // descending
  Matrix eigenvectors;          // columns aligned with eigenvalues
  std::vector<Block> blocks;
  std::vector<std::size_t> support;
  double degeneracy_tol = kDegeneracyTol;
  double support_floor = kSupportFloor;

  Eigen::Index dim() const { return eigenvalues.size(); }
  Matrix block_vectors(const Block& b) const {
    return eigenvectors.middleCols(static_cast<Eigen::Index>(b.begin),
                                   static_cast<Eigen::Index>(b.size));
  }
  Matrix reconstruct() const;
};

// Decouples the matrix into connected components of its nonzero pattern
// before diagonalizing; exact-model matrices are usually block diagonal.
Spectrum eigendecompose(const HermitianMatrix& m, double degeneracy_tol = kDegeneracyTol,
                        double support_floor = kSupportFloor);

double von_neumann_entropy(const Spectrum& s, double log_base = 2.0);

// Descending eigenvalues without eigenvectors; cheaper when only the entropy is needed.
Eigen::VectorXd eigenvalues_only(const HermitianMatrix& m);
double von_neumann_entropy(const HermitianMatrix& m, double log_base = 2.0,
                           double support_floor = kSupportFloor);

// +infinity when supp(rho) meets ker(sigma).
double relative_entropy(const Spectrum& rho, const Spectrum& sigma, double log_base = 2.0);

class CoefficientTensor {
 public:
  CoefficientTensor() = default;
  explicit CoefficientTensor(Matrix amplitudes) : amplitudes_(std::move(amplitudes)) {}
  CoefficientTensor(Eigen::Index d_a, Eigen::Index d_b) : amplitudes_(Matrix::Zero(d_a, d_b)) {}

  Eigen::Index dim_a() const { return amplitudes_.rows(); }
  Eigen::Index dim_b() const { return amplitudes_.cols(); }
  const Matrix& amplitudes() const { return amplitudes_; }
  Matrix& amplitudes() { return amplitudes_; }
  double norm() const { return amplitudes_.norm(); }
  CoefficientTensor normalized() const;

 private:
  Matrix amplitudes_;
};

// rho_A(a, a') = sum_b c(a, b) conj(c(a', b)). Requires |c| = 1 within 1e-6.
HermitianMatrix reduce_pure_state(const CoefficientTensor& c, std::string basis_label = {});
// Same, tracing out side A instead.
HermitianMatrix reduce_pure_state_b(const CoefficientTensor& c, std::string basis_label = {});

// sqrt(alpha) c0 + sqrt(1 - alpha) c1
CoefficientTensor superpose(const CoefficientTensor& c0, const CoefficientTensor& c1, double alpha);

}  // namespace entconvex
