#include "entconvex/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <functional>
#include <numeric>

#include <Eigen/Sparse>

#include "entconvex/errors.hpp"

namespace entconvex {

HermitianMatrix::HermitianMatrix(Matrix entries, std::string basis_label, double tol)
    : basis_label_(std::move(basis_label)) {
  if (entries.rows() != entries.cols() || entries.rows() == 0)
    throw DomainError("HermitianMatrix: matrix must be square and non-empty");
  const double dev = (entries - entries.adjoint()).cwiseAbs().maxCoeff();
  if (dev > tol)
    throw DomainError("HermitianMatrix: not Hermitian (deviation " + std::to_string(dev) + ")");
  entries_ = (entries + entries.adjoint()) * 0.5;
}

void HermitianMatrix::require_density(double trace_tol) const {
  if (std::abs(trace() - 1.0) > trace_tol)
    throw NumericalError("density matrix trace " + std::to_string(trace()) + " differs from 1");
  Eigen::SelfAdjointEigenSolver<Matrix> es(entries_, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw NumericalError("eigensolver did not converge");
  if (es.eigenvalues().minCoeff() < -1e-10)
    throw NumericalError("density matrix has a negative eigenvalue");
}

Matrix Spectrum::reconstruct() const {
  return eigenvectors * eigenvalues.cast<cplx>().asDiagonal() * eigenvectors.adjoint();
}

namespace {

// Union-find over the nonzero pattern.
std::vector<std::vector<Eigen::Index>> components(const Matrix& m) {
  const Eigen::Index n = m.rows();
  std::vector<Eigen::Index> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Eigen::Index i) {
    while (parent[i] != i) {
      parent[i] = parent[parent[i]];
      i = parent[i];
    }
    return i;
  };
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < j; ++i)
      if (m(i, j) != cplx(0.0, 0.0)) {
        auto a = find(i), b = find(j);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
  std::vector<std::vector<Eigen::Index>> groups;
  std::vector<Eigen::Index> slot(static_cast<std::size_t>(n), -1);
  for (Eigen::Index i = 0; i < n; ++i) {
    auto r = find(i);
    if (slot[r] < 0) {
      slot[r] = static_cast<Eigen::Index>(groups.size());
      groups.emplace_back();
    }
    groups[slot[r]].push_back(i);
  }
  return groups;
}

}  // namespace

Spectrum eigendecompose(const HermitianMatrix& m, double degeneracy_tol, double support_floor) {
  const Matrix& a = m.entries();
  const Eigen::Index n = a.rows();

  std::vector<double> values;
  Matrix vectors = Matrix::Zero(n, n);
  values.reserve(static_cast<std::size_t>(n));

  Eigen::Index col = 0;
  for (const auto& group : components(a)) {
    const auto k = static_cast<Eigen::Index>(group.size());
    Matrix sub(k, k);
    for (Eigen::Index i = 0; i < k; ++i)
      for (Eigen::Index j = 0; j < k; ++j) sub(i, j) = a(group[i], group[j]);
    Eigen::SelfAdjointEigenSolver<Matrix> es(sub);
    if (es.info() != Eigen::Success) throw NumericalError("eigensolver did not converge");
    for (Eigen::Index c = 0; c < k; ++c) {
      values.push_back(es.eigenvalues()(c));
      for (Eigen::Index i = 0; i < k; ++i) vectors(group[i], col) = es.eigenvectors()(i, c);
      ++col;
    }
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index x, Eigen::Index y) { return values[x] > values[y]; });

  Spectrum s;
  s.degeneracy_tol = degeneracy_tol;
  s.support_floor = support_floor;
  s.eigenvalues.resize(n);
  s.eigenvectors.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    s.eigenvalues(i) = values[order[i]];
    s.eigenvectors.col(i) = vectors.col(order[i]);
  }

  double scale = std::max(std::abs(s.eigenvalues(0)), std::abs(s.eigenvalues(n - 1)));
  if (scale == 0.0) scale = 1.0;
  const double gap = degeneracy_tol * scale;

  std::size_t begin = 0;
  for (Eigen::Index i = 1; i <= n; ++i) {
    if (i == n || s.eigenvalues(i - 1) - s.eigenvalues(i) > gap) {
      Block b{begin, static_cast<std::size_t>(i) - begin, 0.0};
      b.value = s.eigenvalues.segment(static_cast<Eigen::Index>(begin),
                                      static_cast<Eigen::Index>(b.size)).mean();
      s.blocks.push_back(b);
      begin = static_cast<std::size_t>(i);
    }
  }
  for (Eigen::Index i = 0; i < n; ++i)
    if (s.eigenvalues(i) > support_floor) s.support.push_back(static_cast<std::size_t>(i));
  return s;
}

Eigen::VectorXd eigenvalues_only(const HermitianMatrix& m) {
  const Matrix& a = m.entries();
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(a.rows()));
  for (const auto& group : components(a)) {
    const auto k = static_cast<Eigen::Index>(group.size());
    Matrix sub(k, k);
    for (Eigen::Index i = 0; i < k; ++i)
      for (Eigen::Index j = 0; j < k; ++j) sub(i, j) = a(group[i], group[j]);
    Eigen::SelfAdjointEigenSolver<Matrix> es(sub, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw NumericalError("eigensolver did not converge");
    for (Eigen::Index c = 0; c < k; ++c) values.push_back(es.eigenvalues()(c));
  }
  std::sort(values.begin(), values.end(), std::greater<>());
  return Eigen::Map<Eigen::VectorXd>(values.data(), static_cast<Eigen::Index>(values.size()));
}

double von_neumann_entropy(const HermitianMatrix& m, double log_base, double support_floor) {
  Spectrum s;
  s.eigenvalues = eigenvalues_only(m);
  s.support_floor = support_floor;
  return von_neumann_entropy(s, log_base);
}

double von_neumann_entropy(const Spectrum& s, double log_base) {
  double acc = 0.0;
  for (Eigen::Index i = 0; i < s.dim(); ++i) {
    const double p = s.eigenvalues(i);
    if (p < -1e-10) throw NumericalError("von_neumann_entropy: negative eigenvalue");
    if (p > s.support_floor) acc -= p * std::log(p);
  }
  return std::max(acc / std::log(log_base), 0.0);
}

double relative_entropy(const Spectrum& rho, const Spectrum& sigma, double log_base) {
  if (rho.dim() != sigma.dim()) throw DomainError("relative_entropy: dimension mismatch");
  const Eigen::MatrixXd overlap = (rho.eigenvectors.adjoint() * sigma.eigenvectors).cwiseAbs2();
  double acc = 0.0;
  for (Eigen::Index i = 0; i < rho.dim(); ++i) {
    const double p = rho.eigenvalues(i);
    if (p <= rho.support_floor) continue;
    double cross = 0.0, weight_in_kernel = 0.0;
    for (Eigen::Index j = 0; j < sigma.dim(); ++j) {
      const double q = sigma.eigenvalues(j);
      if (q <= sigma.support_floor)
        weight_in_kernel += overlap(i, j);
      else
        cross += std::log(q) * overlap(i, j);
    }
    if (weight_in_kernel > 1e-10) return std::numeric_limits<double>::infinity();
    acc += p * (std::log(p) - cross);
  }
  return acc / std::log(log_base);
}

CoefficientTensor CoefficientTensor::normalized() const {
  const double n = norm();
  if (n == 0.0) throw NumericalError("cannot normalize a zero tensor");
  return CoefficientTensor(amplitudes_ / n);
}

namespace {
void require_normalized(const CoefficientTensor& c) {
  if (std::abs(c.norm() - 1.0) > 1e-6)
    throw DomainError("reduce_pure_state: tensor is not normalized (norm " +
                      std::to_string(c.norm()) + ")");
}
}  // namespace

// C C^+, through a sparse product when most amplitudes vanish (selection
// rules make the exact-model tensors very sparse).
Matrix gram(const Matrix& c) {
  const Eigen::Index nnz = (c.array() != cplx(0.0, 0.0)).count();
  if (nnz * 10 > c.size()) return c * c.adjoint();
  Eigen::SparseMatrix<cplx> s = c.sparseView();
  Eigen::SparseMatrix<cplx> r = s * Eigen::SparseMatrix<cplx>(s.adjoint());
  return Matrix(r);
}

HermitianMatrix reduce_pure_state(const CoefficientTensor& c, std::string basis_label) {
  require_normalized(c);
  Matrix rho = gram(c.amplitudes());
  return HermitianMatrix((rho + rho.adjoint()) * 0.5, std::move(basis_label));
}

HermitianMatrix reduce_pure_state_b(const CoefficientTensor& c, std::string basis_label) {
  require_normalized(c);
  Matrix rho = gram(c.amplitudes().transpose());
  return HermitianMatrix((rho + rho.adjoint()) * 0.5, std::move(basis_label));
}

CoefficientTensor superpose(const CoefficientTensor& c0, const CoefficientTensor& c1, double alpha) {
  if (c0.dim_a() != c1.dim_a() || c0.dim_b() != c1.dim_b())
    throw DomainError("superpose: tensor dimensions differ");
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw DomainError("superpose: alpha outside [0, 1]");
  return CoefficientTensor(std::sqrt(alpha) * c0.amplitudes() +
                           std::sqrt(1.0 - alpha) * c1.amplitudes());
}

}  // namespace entconvex
