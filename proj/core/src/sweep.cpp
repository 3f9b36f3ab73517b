#include "entconvex/sweep.hpp"

#include <cmath>

#include "entconvex/angular.hpp"
#include "entconvex/errors.hpp"
#include "entconvex/parallel.hpp"
#include "entconvex/spherium.hpp"

namespace entconvex {

const char* model_name(ModelKind k) {
  switch (k) {
    case ModelKind::angular: return "angular";
    case ModelKind::oscillator: return "oscillator";
    case ModelKind::spherium: return "spherium";
    case ModelKind::lg: return "lg";
  }
  return "?";
}

ModelKind parse_model(const std::string& s) {
  if (s == "angular") return ModelKind::angular;
  if (s == "oscillator") return ModelKind::oscillator;
  if (s == "spherium") return ModelKind::spherium;
  if (s == "lg") return ModelKind::lg;
  throw DomainError("unknown model '" + s + "'");
}

std::string PairSpec::label() const {
  switch (model) {
    case ModelKind::angular:
      return "l" + std::to_string(l) + "_L" + std::to_string(L) + "_M" + std::to_string(M) + "/" +
             std::to_string(Mprime);
    case ModelKind::oscillator: return osc0.label() + "/" + osc1.label();
    case ModelKind::spherium: return "2" + std::to_string(M) + "/2" + std::to_string(Mprime);
    case ModelKind::lg:
      return std::to_string(lg0.l) + std::to_string(lg0.m) + "/" + std::to_string(lg1.l) +
             std::to_string(lg1.m);
  }
  return {};
}

PairModel::PairModel(CoefficientTensor t0, CoefficientTensor t1)
    : t0_(t0.normalized()), t1_(t1.normalized()) {
  if (t0_.dim_a() != t1_.dim_a() || t0_.dim_b() != t1_.dim_b())
    throw DomainError("pair states live in different bases");
}

CoefficientTensor PairModel::tensor(double alpha) const {
  return superpose(t0_, t1_, alpha).normalized();
}

HermitianMatrix PairModel::rho(double alpha) const { return reduce_pure_state(tensor(alpha)); }

namespace {

class AngularPair : public PairModel {
 public:
  explicit AngularPair(const PairSpec& s)
      : PairModel(coupled_state_tensor(s.l, s.L, s.M, s.M, 1.0),
                  coupled_state_tensor(s.l, s.L, s.Mprime, s.Mprime, 1.0)),
        l_(s.l), label_(s.label()) {}
  std::optional<Matrix> generator() const override { return angular_lz(l_); }
  bool exact() const override { return true; }
  std::string label() const override { return label_; }

 private:
  int l_;
  std::string label_;
};

class OscillatorPair : public PairModel {
 public:
  explicit OscillatorPair(const PairSpec& s)
      : PairModel(checked(s.osc0, s), checked(s.osc1, s)),
        n_(s.osc_basis.n_per_coordinate), exact_(s.osc0.lambda == 0.0 && s.osc1.lambda == 0.0),
        label_(s.label()) {}
  std::optional<Matrix> generator() const override { return oscillator_lz_one_particle(n_); }
  bool exact() const override { return exact_; }
  std::string label() const override { return label_; }

 private:
  static CoefficientTensor checked(const OscState& st, const PairSpec& s) {
    auto t = oscillator_state_tensor(st, s.osc_basis, TensorMethod::automatic, s.cache);
    if (1.0 - t.norm() * t.norm() > 1e-6)
      throw NumericalError("oscillator basis too small for " + st.label() + ": captured norm " +
                           std::to_string(t.norm() * t.norm()));
    return t;
  }
  int n_;
  bool exact_;
  std::string label_;
};

class SpheriumPair : public PairModel {
 public:
  explicit SpheriumPair(const PairSpec& s)
      : PairModel(spherium_pair_tensor(s.M, s.M, 1.0, s.lmax),
                  spherium_pair_tensor(s.Mprime, s.Mprime, 1.0, s.lmax)),
        lmax_(s.lmax), label_(s.label()) {}
  std::optional<Matrix> generator() const override { return spherium_lz_one_particle(lmax_); }
  bool exact() const override { return true; }
  std::string label() const override { return label_; }

 private:
  int lmax_;
  std::string label_;
};

class LGPair : public PairModel {
 public:
  explicit LGPair(const PairSpec& s)
      : PairModel(lg_state_tensor(s.lg0, s.lg_basis), lg_state_tensor(s.lg1, s.lg_basis)),
        n_(s.lg_basis.size), label_(s.label()) {}
  std::optional<Matrix> generator() const override { return lg_x_parity(n_); }
  bool exact() const override { return false; }
  std::string label() const override { return label_; }

 private:
  int n_;
  std::string label_;
};

}  // namespace

std::unique_ptr<PairModel> make_pair_model(const PairSpec& spec) {
  switch (spec.model) {
    case ModelKind::angular: return std::make_unique<AngularPair>(spec);
    case ModelKind::oscillator: return std::make_unique<OscillatorPair>(spec);
    case ModelKind::spherium: return std::make_unique<SpheriumPair>(spec);
    case ModelKind::lg: return std::make_unique<LGPair>(spec);
  }
  throw DomainError("unknown model");
}

EntropyCurve entropy_curve(const PairModel& model, int grid, double log_base, unsigned threads) {
  if (grid < 5) throw DomainError("alpha grid needs at least 5 points");
  EntropyCurve c;
  c.log_base = log_base;
  c.alphas.resize(static_cast<std::size_t>(grid));
  c.entropies.resize(static_cast<std::size_t>(grid));
  for (int i = 0; i < grid; ++i) c.alphas[i] = double(i) / (grid - 1);
  parallel_for(
      static_cast<std::size_t>(grid),
      [&](std::size_t i) {
        c.entropies[i] = von_neumann_entropy(model.rho(c.alphas[i]), log_base);
      },
      threads);
  c.s1 = c.entropies.front();
  c.s0 = c.entropies.back();
  return c;
}

const char* convexity_name(Convexity c) {
  switch (c) {
    case Convexity::convex: return "convex";
    case Convexity::concave: return "concave";
    case Convexity::linear: return "linear";
    case Convexity::indefinite: return "indefinite";
  }
  return "?";
}

Convexity parse_convexity(const std::string& s) {
  if (s == "convex") return Convexity::convex;
  if (s == "concave") return Convexity::concave;
  if (s == "linear") return Convexity::linear;
  if (s == "indefinite") return Convexity::indefinite;
  throw DomainError("unknown convexity label '" + s + "'");
}

ConvexityLabel classify_convexity(const EntropyCurve& curve, double tol) {
  if (curve.alphas.size() < 5) throw DomainError("classify_convexity: need at least 5 points");
  ConvexityLabel out;
  for (std::size_t i = 0; i < curve.alphas.size(); ++i) {
    const double d = curve.entropies[i] - curve.chord(i);
    out.max_above = std::max(out.max_above, d);
    out.max_below = std::max(out.max_below, -d);
  }
  const bool above = out.max_above > tol, below = out.max_below > tol;
  if (above && below) out.kind = Convexity::indefinite;
  else if (below) out.kind = Convexity::convex;
  else if (above) out.kind = Convexity::concave;
  else out.kind = Convexity::linear;
  return out;
}

bool qc_matches(int qc, Convexity c) {
  if (qc == 0) return true;
  return qc > 0 ? c == Convexity::convex : c == Convexity::concave;
}

ObservationRecord criterion_vs_observation(const PairModel& model, int grid, double log_base,
                                           std::optional<double> tol) {
  ObservationRecord r;
  CriterionOptions opt;
  opt.log_base = log_base;
  opt.qc_tol = model.qc_tol();
  opt.generator = model.generator();
  r.report = evaluate_criterion(model.rho(1.0), model.rho(0.0), opt);
  r.curve = entropy_curve(model, grid, log_base);
  r.label = classify_convexity(r.curve, tol.value_or(model.chord_tol()));
  r.asserted = r.report.qc != 0;
  r.agrees = qc_matches(r.report.qc, r.label.kind);
  return r;
}

}  // namespace entconvex
