#include "entconvex/criterion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "entconvex/errors.hpp"
#include "entconvex/parallel.hpp"

namespace entconvex {

ProjectorFamily::ProjectorFamily(Matrix vectors, double tol) : vectors_(std::move(vectors)) {
  if (vectors_.rows() != vectors_.cols() || vectors_.rows() == 0)
    throw DomainError("ProjectorFamily: need a complete set of vectors");
  const Eigen::Index d = vectors_.rows();
  const double dev = (vectors_.adjoint() * vectors_ - Matrix::Identity(d, d)).cwiseAbs().maxCoeff();
  if (dev > tol) throw DomainError("ProjectorFamily: vectors are not orthonormal");
}

ProjectorFamily eigenprojector_family(const Spectrum& s) { return ProjectorFamily(s.eigenvectors); }

ProjectorFamily symmetry_adapted_family(const Spectrum& s, const Matrix& generator) {
  if (generator.rows() != s.dim() || generator.cols() != s.dim())
    throw DomainError("symmetry_adapted_family: generator dimension mismatch");
  Matrix v = s.eigenvectors;
  for (const auto& b : s.blocks) {
    if (b.size < 2) continue;
    const Matrix vb = s.block_vectors(b);
    Matrix g = vb.adjoint() * generator * vb;
    g = (g + g.adjoint()) * 0.5;
    Eigen::SelfAdjointEigenSolver<Matrix> es(g);
    if (es.info() != Eigen::Success) throw NumericalError("eigensolver did not converge");
    v.middleCols(static_cast<Eigen::Index>(b.begin), static_cast<Eigen::Index>(b.size)) =
        vb * es.eigenvectors();
  }
  return ProjectorFamily(std::move(v));
}

std::vector<double> expectations_under_projectors(const HermitianMatrix& rho,
                                                  const ProjectorFamily& fam) {
  if (rho.dim() != fam.dim()) throw DomainError("expectations_under_projectors: dimension mismatch");
  const Matrix rv = rho.entries() * fam.vectors();
  std::vector<double> out(static_cast<std::size_t>(fam.dim()));
  for (Eigen::Index a = 0; a < fam.dim(); ++a)
    out[static_cast<std::size_t>(a)] = fam.vectors().col(a).dot(rv.col(a)).real();
  return out;
}

double not_shareable_entropy(const Spectrum& spec0, const HermitianMatrix& rho1,
                             const ProjectorFamily& fam, double log_base) {
  if (spec0.dim() != rho1.dim() || fam.dim() != rho1.dim())
    throw DomainError("not_shareable_entropy: dimension mismatch");
  const Matrix rho0 = spec0.reconstruct();
  const Matrix r0v = rho0 * fam.vectors();
  const auto p1 = expectations_under_projectors(rho1, fam);
  double acc = 0.0;
  for (Eigen::Index a = 0; a < fam.dim(); ++a) {
    const double mu = fam.vectors().col(a).dot(r0v.col(a)).real();
    if ((r0v.col(a) - mu * fam.vectors().col(a)).norm() > 1e-7)
      throw DomainError("not_shareable_entropy: family is not an eigenprojector family of rho0");
    if (mu > spec0.support_floor) acc += ramp(mu - p1[static_cast<std::size_t>(a)]) * -std::log(mu);
  }
  return acc / std::log(log_base);
}

double not_shared_entropy(const Spectrum& spec0, const HermitianMatrix& rho1, double log_base) {
  if (spec0.dim() != rho1.dim()) throw DomainError("not_shared_entropy: dimension mismatch");
  double acc = 0.0;
  for (const auto& b : spec0.blocks) {
    if (b.value <= spec0.support_floor) continue;
    const Matrix vb = spec0.block_vectors(b);
    const double t = (vb.adjoint() * rho1.entries() * vb).trace().real();
    acc += ramp(static_cast<double>(b.size) * b.value - t) * -std::log(b.value);
  }
  return acc / std::log(log_base);
}

namespace {

// (1 - i e H / 2)^{-1} (1 + i e H / 2): exactly unitary for Hermitian H.
Matrix cayley(const Matrix& h, double eps) {
  const Eigen::Index d = h.rows();
  const Matrix id = Matrix::Identity(d, d);
  const cplx half(0.0, 0.5 * eps);
  return (id - half * h).partialPivLu().solve(id + half * h);
}

template <class Rng>
Matrix random_hermitian(Eigen::Index d, Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Matrix z(d, d);
  for (Eigen::Index j = 0; j < d; ++j)
    for (Eigen::Index i = 0; i < d; ++i) z(i, j) = cplx(g(rng), g(rng));
  return (z + z.adjoint()) * 0.5;
}

double block_objective(const Matrix& m, const Matrix& u, double lambda) {
  const Matrix a = u.adjoint() * m * u;
  double acc = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i) acc += ramp(lambda - a(i, i).real());
  return acc;
}

}  // namespace

double not_shared_entropy_numeric(const Spectrum& spec0, const HermitianMatrix& rho1,
                                  double log_base, int restarts, std::uint64_t seed) {
  if (spec0.dim() != rho1.dim()) throw DomainError("not_shared_entropy_numeric: dimension mismatch");
  std::mt19937_64 rng(seed);
  double acc = 0.0;
  for (const auto& b : spec0.blocks) {
    if (b.value <= spec0.support_floor) continue;
    const Matrix vb = spec0.block_vectors(b);
    const Matrix m = vb.adjoint() * rho1.entries() * vb;
    const auto d = static_cast<Eigen::Index>(b.size);
    const double lambda = b.value;

    double best = block_objective(m, Matrix::Identity(d, d), lambda);
    if (d > 1) {
      for (int r = 0; r < restarts && best > 0.0; ++r) {
        Matrix u = haar_unitary(d, rng);
        double f = block_objective(m, u, lambda);
        for (double eps = 1.0; eps > 1e-9; eps *= 0.5) {
          for (int tries = 0; tries < 12; ++tries) {
            const Matrix cand = u * cayley(random_hermitian(d, rng), eps);
            const double fc = block_objective(m, cand, lambda);
            if (fc < f) {
              u = cand;
              f = fc;
            }
          }
        }
        best = std::min(best, f);
      }
    }
    acc += best * -std::log(lambda);
  }
  return acc / std::log(log_base);
}

double remaining_entropy(double s0, double s_ns) {
  if (s_ns < -1e-10 || s_ns > s0 + 1e-10 * std::max(1.0, s0))
    throw DomainError("remaining_entropy: need 0 <= S_NS <= S");
  return s0 - s_ns;
}

double simple_remaining_entropy(const Spectrum& spec0, const Spectrum& spec1, double log_base) {
  if (spec0.dim() != spec1.dim()) throw DomainError("simple_remaining_entropy: dimension mismatch");
  const Matrix overlap = spec1.eigenvectors.adjoint() * spec0.eigenvectors;
  double acc = 0.0;
  for (std::size_t i : spec0.support) {
    const auto col = static_cast<Eigen::Index>(i);
    double l1 = -1.0;
    for (const auto& b : spec1.blocks) {
      const double w = overlap.middleRows(static_cast<Eigen::Index>(b.begin),
                                          static_cast<Eigen::Index>(b.size))
                           .col(col)
                           .squaredNorm();
      if (w >= 1.0 - 1e-8) {
        l1 = b.value;
        break;
      }
    }
    if (l1 < 0.0) throw DomainError("simple_remaining_entropy: eigenvector sets do not match");
    const double l0 = spec0.eigenvalues(col);
    if (l1 > spec1.support_floor) acc -= std::min(l0, l1) * std::log(l0);
  }
  return acc / std::log(log_base);
}

int criterion_qc(double s_ns, double s_r, double qc_tol) {
  const double d = s_r - s_ns;
  if (std::abs(d) <= qc_tol) return 0;
  return d > 0 ? 1 : -1;
}

CriterionReport evaluate_criterion(const HermitianMatrix& rho0, const HermitianMatrix& rho1,
                                   const CriterionOptions& opt) {
  const HermitianMatrix& ref = opt.swap_reference ? rho1 : rho0;
  const HermitianMatrix& other = opt.swap_reference ? rho0 : rho1;
  if (ref.dim() != other.dim()) throw DomainError("evaluate_criterion: dimension mismatch");

  const Spectrum spec0 = eigendecompose(ref, opt.degeneracy_tol, opt.support_floor);
  const Spectrum spec1 = eigendecompose(other, opt.degeneracy_tol, opt.support_floor);

  CriterionReport r;
  r.log_base = opt.log_base;
  r.s0 = von_neumann_entropy(spec0, opt.log_base);
  r.s1 = von_neumann_entropy(spec1, opt.log_base);
  r.s_ns = std::min(not_shared_entropy(spec0, other, opt.log_base), r.s0);
  r.s_r = remaining_entropy(r.s0, r.s_ns);
  r.qc = criterion_qc(r.s_ns, r.s_r, opt.qc_tol);
  if (opt.generator) {
    const auto fam = symmetry_adapted_family(spec0, *opt.generator);
    const double a = std::min(not_shareable_entropy(spec0, other, fam, opt.log_base), r.s0);
    r.s_ns_adapted = a;
    r.qc_adapted = criterion_qc(a, r.s0 - a, opt.qc_tol);
  }
  return r;
}

namespace {

double probe_value(const HermitianMatrix& rho0, const HermitianMatrix& rho1, const Matrix& u,
                   double s, double floor, double log_base) {
  const Matrix a0 = rho0.entries() * u;
  const Matrix a1 = rho1.entries() * u;
  double st = 0.0;
  for (Eigen::Index k = 0; k < u.cols(); ++k) {
    const double p0 = u.col(k).dot(a0.col(k)).real();
    const double p1 = u.col(k).dot(a1.col(k)).real();
    if (p0 > floor) st -= ramp(p0 - p1) * std::log(p0);
  }
  return s - 2.0 * st / std::log(log_base);
}

std::vector<std::size_t> default_checkpoints(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t decade = 1; decade <= n; decade *= 10) {
    for (std::size_t f : {1u, 2u, 5u})
      if (decade * f <= n) out.push_back(decade * f);
    if (decade > n / 10) break;
  }
  if (out.empty() || out.back() != n) out.push_back(n);
  return out;
}

}  // namespace

ProbeRecord random_projector_probe(const HermitianMatrix& rho0, const HermitianMatrix& rho1,
                                   const ProbeOptions& opt) {
  if (opt.samples == 0) throw DomainError("random_projector_probe: samples must be >= 1");
  if (rho0.dim() != rho1.dim()) throw DomainError("random_projector_probe: dimension mismatch");

  const Spectrum spec0 = eigendecompose(rho0);
  ProbeRecord rec;
  rec.entropy = von_neumann_entropy(spec0, opt.log_base);
  rec.bound = rec.entropy - 2.0 * not_shared_entropy(spec0, rho1, opt.log_base);

  const Eigen::Index d = rho0.dim();
  std::vector<double> values(opt.samples);
  parallel_for(
      opt.samples,
      [&](std::size_t i) {
        std::mt19937_64 rng(mix_seed(opt.seed, i));
        Matrix u;
        if (opt.sampling == ProbeSampling::haar) {
          u = haar_unitary(d, rng);
        } else {
          u = spec0.eigenvectors;
          for (const auto& b : spec0.blocks) {
            if (b.size < 2) continue;
            const auto cols = u.middleCols(static_cast<Eigen::Index>(b.begin),
                                           static_cast<Eigen::Index>(b.size));
            u.middleCols(static_cast<Eigen::Index>(b.begin), static_cast<Eigen::Index>(b.size)) =
                cols * haar_unitary(static_cast<Eigen::Index>(b.size), rng);
          }
          std::uniform_real_distribution<double> eps(0.0, opt.bias_scale);
          u = u * cayley(random_hermitian(d, rng), eps(rng));
        }
        values[i] = probe_value(rho0, rho1, u, rec.entropy, spec0.support_floor, opt.log_base);
      },
      opt.threads);

  auto checkpoints = opt.checkpoints.empty() ? default_checkpoints(opt.samples) : opt.checkpoints;
  std::sort(checkpoints.begin(), checkpoints.end());
  double running = std::numeric_limits<double>::infinity();
  std::size_t next = 0;
  for (std::size_t i = 0; i < opt.samples; ++i) {
    running = std::min(running, values[i]);
    while (next < checkpoints.size() && checkpoints[next] == i + 1)
      rec.running_min.emplace_back(checkpoints[next++], running);
  }
  rec.min_value = running;
  return rec;
}

}  // namespace entconvex
