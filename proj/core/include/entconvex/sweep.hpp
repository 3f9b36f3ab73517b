#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "entconvex/criterion.hpp"
#include "entconvex/laguerre_gauss.hpp"
#include "entconvex/oscillator.hpp"
#include "entconvex/spectra.hpp"

namespace entconvex {

class TensorCache;

enum class ModelKind { angular, oscillator, spherium, lg };

const char* model_name(ModelKind k);
ModelKind parse_model(const std::string& s);

struct PairSpec {
  ModelKind model = ModelKind::angular;
  // angular: Y^{L,M}_{l,l} and Y^{L,M'}_{l,l}
  int l = 3, L = 1, M = 1, Mprime = -1;
  // oscillator
  OscState osc0, osc1;
  OscBasisSpec osc_basis;
  TensorCache* cache = nullptr;
  // spherium: Psi_{2,M} and Psi_{2,M'} (uses M, Mprime)
  int lmax = 20;
  // LG
  LGMode lg0, lg1;
  LGBasis lg_basis;

  std::string label() const;
};

// A superposition pair psi0 (alpha = 1), psi1 (alpha = 0) in a fixed product basis.
class PairModel {
 public:
  virtual ~PairModel() = default;

  CoefficientTensor tensor(double alpha) const;
  HermitianMatrix rho(double alpha) const;

  const CoefficientTensor& psi0() const { return t0_; }
  const CoefficientTensor& psi1() const { return t1_; }

  // One-particle symmetry used to fix degenerate blocks (see symmetry_adapted_family).
  virtual std::optional<Matrix> generator() const { return std::nullopt; }
  // Exact-arithmetic models vs quadrature-built ones.
  virtual bool exact() const = 0;
  virtual std::string label() const = 0;

  double qc_tol() const { return exact() ? 1e-9 : 1e-6; }
  double chord_tol() const { return exact() ? 1e-7 : 1e-5; }

 protected:
  PairModel(CoefficientTensor t0, CoefficientTensor t1);

 private:
  CoefficientTensor t0_, t1_;
};

std::unique_ptr<PairModel> make_pair_model(const PairSpec& spec);

struct EntropyCurve {
  std::vector<double> alphas;
  std::vector<double> entropies;
  double s0 = 0, s1 = 0;  // entropies at alpha = 1 and alpha = 0
  double log_base = 2.0;

  double chord(std::size_t i) const { return alphas[i] * s0 + (1.0 - alphas[i]) * s1; }
};

EntropyCurve entropy_curve(const PairModel& model, int grid = 41, double log_base = 2.0,
                           unsigned threads = 0);

enum class Convexity { convex, concave, linear, indefinite };
const char* convexity_name(Convexity c);
Convexity parse_convexity(const std::string& s);

struct ConvexityLabel {
  Convexity kind = Convexity::linear;
  double max_above = 0;  // max (S - chord)
  double max_below = 0;  // max (chord - S)
};

ConvexityLabel classify_convexity(const EntropyCurve& curve, double tol);

struct ObservationRecord {
  CriterionReport report;
  EntropyCurve curve;
  ConvexityLabel label;
  bool asserted = false;  // Q_c != 0
  bool agrees = false;    // Q_c matches the label, or Q_c = 0
};

// +1 <-> convex, -1 <-> concave, 0 <-> not asserted.
bool qc_matches(int qc, Convexity c);

ObservationRecord criterion_vs_observation(const PairModel& model, int grid = 41,
                                           double log_base = 2.0, std::optional<double> tol = {});

}  // namespace entconvex
