#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "entconvex/spectra.hpp"

namespace entconvex {

// Complete orthonormal family of rank-1 projectors, stored as columns.
class ProjectorFamily {
 public:
  explicit ProjectorFamily(Matrix vectors, double tol = 1e-9);

  Eigen::Index dim() const { return vectors_.rows(); }
  const Matrix& vectors() const { return vectors_; }

 private:
  Matrix vectors_;
};

ProjectorFamily eigenprojector_family(const Spectrum& s);

// Eigenprojectors of rho0 with each degenerate block re-diagonalized against
// a generator that commutes with rho0 (e.g. a one-particle L_z). Fixes the
// intra-block freedom the same way a symmetry-labelled basis would.
ProjectorFamily symmetry_adapted_family(const Spectrum& s, const Matrix& generator);

std::vector<double> expectations_under_projectors(const HermitianMatrix& rho,
                                                  const ProjectorFamily& fam);

// Theta[x] = x for x > 0, else 0.
inline double ramp(double x) { return x > 0.0 ? x : 0.0; }

double not_shareable_entropy(const Spectrum& spec0, const HermitianMatrix& rho1,
                             const ProjectorFamily& fam, double log_base = 2.0);

// Per degenerate block of rho0: Theta[d*lambda - Tr(P rho1 P)] * log(1/lambda).
double not_shared_entropy(const Spectrum& spec0, const HermitianMatrix& rho1,
                          double log_base = 2.0);

// Random intra-block search for the same minimum; used as a cross-check.
double not_shared_entropy_numeric(const Spectrum& spec0, const HermitianMatrix& rho1,
                                  double log_base = 2.0, int restarts = 64,
                                  std::uint64_t seed = 7);

double remaining_entropy(double s0, double s_ns);

// Commuting, non-degenerate case: -sum min(l0, l1) log l0 over shared eigenvectors.
double simple_remaining_entropy(const Spectrum& spec0, const Spectrum& spec1,
                                double log_base = 2.0);

int criterion_qc(double s_ns, double s_r, double qc_tol = 1e-9);

struct CriterionOptions {
  double log_base = 2.0;
  double qc_tol = 1e-9;
  double degeneracy_tol = kDegeneracyTol;
  double support_floor = kSupportFloor;
  bool swap_reference = false;             // use rho1 as the reference state
  std::optional<Matrix> generator;         // enables the symmetry-adapted variant
};

struct CriterionReport {
  double s0 = 0, s1 = 0;
  double s_ns = 0, s_r = 0;
  int qc = 0;
  double log_base = 2.0;
  std::optional<double> s_ns_adapted;  // symmetry-adapted not-shareable entropy
  std::optional<int> qc_adapted;
};

CriterionReport evaluate_criterion(const HermitianMatrix& rho0, const HermitianMatrix& rho1,
                                   const CriterionOptions& opt = {});

enum class ProbeSampling { haar, biased };

struct ProbeOptions {
  std::size_t samples = 10000;
  std::uint64_t seed = 1;
  double log_base = 2.0;
  ProbeSampling sampling = ProbeSampling::haar;
  double bias_scale = 0.3;  // perturbation size in biased mode
  unsigned threads = 0;     // 0: hardware concurrency
  std::vector<std::size_t> checkpoints;  // sample counts at which to record the running min
};

struct ProbeRecord {
  double min_value = 0;
  double bound = 0;  // S - 2 S_NS
  double entropy = 0;
  std::vector<std::pair<std::size_t, double>> running_min;
};

// Samples complete orthonormal families and minimizes S - 2 S~ with
// S~ = -sum_a max(<rho0>_a - <rho1>_a, 0) log <rho0>_a.
ProbeRecord random_projector_probe(const HermitianMatrix& rho0, const HermitianMatrix& rho1,
                                   const ProbeOptions& opt);

// Haar-distributed d x d unitary from a complex Gaussian matrix.
template <class Rng>
Matrix haar_unitary(Eigen::Index d, Rng& rng);

}  // namespace entconvex

#include "entconvex/detail/haar.hpp"
