#include "commands.hpp"

#include <fstream>
#include <memory>

#include "entconvex/errors.hpp"
#include "entconvex/report.hpp"
#include "entconvex/tables.hpp"
#include "entconvex/tensor_cache.hpp"

namespace entconvex::cli {

namespace {

std::unique_ptr<TensorCache> open_cache(const RunConfig& cfg) {
  if (cfg.no_cache) return nullptr;
  return std::make_unique<TensorCache>(cfg.cache_dir.empty() ? TensorCache::default_directory()
                                                             : std::filesystem::path(cfg.cache_dir));
}

std::string sign(int qc) { return qc > 0 ? "+" : qc < 0 ? "-" : "0"; }

std::string opt_number(const std::optional<double>& v) { return v ? format_number(*v) : ""; }

// Writes to --out if given, otherwise to the stream.
template <class F>
void emit(const std::string& path, std::ostream& fallback, F&& write) {
  if (path.empty()) {
    write(fallback);
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path);
  write(f);
}

}  // namespace

int cmd_table(int id, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  auto cache = open_cache(cfg);
  TableOptions opt;
  opt.grid = cfg.alpha_steps;
  opt.lmax = cfg.lmax;
  opt.cache = cache.get();
  opt.forced_log_base = cfg.forced_log_base;
  if (id == 1 || id == 2) {
    if (cfg.basis_size) opt.osc_n = cfg.basis_size;
    if (cfg.quadrature_order) opt.osc_quadrature = cfg.quadrature_order;
  } else if (id == 4) {
    if (cfg.basis_size) opt.lg_size = cfg.basis_size;
    if (cfg.quadrature_order) opt.lg_quadrature = cfg.quadrature_order;
  }
  const TableResult t = compute_table(id, opt);

  emit(cfg.out, out, [&](std::ostream& o) {
    CsvWriter w(o);
    w.row({"pair", "S_vn", "S_NS", "S_R", "Q_c", "convexity_observed", "convexity_paper", "agree",
           "log_base_used", "sns_family", "S_vn_alpha0", "Q_c_expected", "S_vn_expected",
           "S_NS_expected", "S_R_expected", "max_abs_error", "criterion_agrees"});
    for (const auto& r : t.rows)
      w.row({r.label, format_number(r.s0), format_number(r.s_ns), format_number(r.s_r), sign(r.qc),
             convexity_name(r.observed), convexity_name(r.expected), r.agree() ? "yes" : "no",
             log_base_name(t.log_base), variant_name(t.variant), format_number(r.s1),
             sign(r.expected_qc), opt_number(r.expected_s_vn), format_number(r.expected_s_ns),
             format_number(r.expected_s_r), format_number(r.max_abs_error),
             r.criterion_agrees ? "yes" : "no"});
  });

  std::size_t ok = 0;
  for (const auto& r : t.rows) ok += r.agree();
  err << "table " << id << ": " << ok << "/" << t.rows.size() << " rows agree (log base "
      << log_base_name(t.log_base) << ", " << variant_name(t.variant) << " S_NS, tolerance "
      << format_number(t.tolerance) << ")\n";
  return t.all_agree() ? 0 : 1;
}

int cmd_curve(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const PairSpec spec = cfg.pair_spec();
  auto cache = open_cache(cfg);
  PairSpec s = spec;
  s.cache = cache.get();
  const auto model = make_pair_model(s);
  const auto curve = entropy_curve(*model, cfg.alpha_steps, cfg.base());
  emit(cfg.out, out, [&](std::ostream& o) { write_curve_csv(o, curve); });
  if (!cfg.svg.empty()) {
    std::ofstream f(cfg.svg);
    if (!f) throw std::runtime_error("cannot open " + cfg.svg);
    write_curve_svg(f, curve, std::string(model_name(spec.model)) + " " + model->label());
  }
  const auto label = classify_convexity(curve, model->chord_tol());
  err << model->label() << ": " << convexity_name(label.kind) << "\n";
  return 0;
}

int cmd_criterion(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  PairSpec s = cfg.pair_spec();
  auto cache = open_cache(cfg);
  s.cache = cache.get();
  const auto model = make_pair_model(s);
  CriterionOptions opt;
  opt.log_base = cfg.base();
  opt.qc_tol = model->qc_tol();
  opt.swap_reference = cfg.swap_reference;
  opt.generator = model->generator();
  const auto r = evaluate_criterion(model->rho(1.0), model->rho(0.0), opt);
  const auto curve = entropy_curve(*model, cfg.alpha_steps, cfg.base());
  const auto label = classify_convexity(curve, model->chord_tol());

  emit(cfg.out, out, [&](std::ostream& o) {
    CsvWriter w(o);
    w.row({"pair", "model", "log_base", "S0", "S1", "S_NS", "S_R", "Q_c", "S_ns_adapted",
           "Q_c_adapted", "convexity_observed", "max_above_chord", "max_below_chord", "agree"});
    w.row({model->label(), model_name(s.model), cfg.log_base, format_number(r.s0),
           format_number(r.s1), format_number(r.s_ns), format_number(r.s_r), sign(r.qc),
           opt_number(r.s_ns_adapted), r.qc_adapted ? sign(*r.qc_adapted) : "",
           convexity_name(label.kind), format_number(label.max_above),
           format_number(label.max_below), qc_matches(r.qc, label.kind) ? "yes" : "no"});
  });
  return 0;
}

int cmd_probe(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  PairSpec s = cfg.pair_spec();
  auto cache = open_cache(cfg);
  s.cache = cache.get();
  const auto model = make_pair_model(s);
  ProbeOptions opt;
  opt.samples = cfg.samples;
  opt.seed = cfg.seed;
  opt.log_base = cfg.base();
  opt.sampling = cfg.sampling == "biased" ? ProbeSampling::biased : ProbeSampling::haar;
  const auto rec = random_projector_probe(model->rho(1.0), model->rho(0.0), opt);

  emit(cfg.out, out, [&](std::ostream& o) {
    CsvWriter w(o);
    w.row({"samples_so_far", "min_S_minus_2Stilde", "bound_S_minus_2SNS"});
    for (const auto& [k, v] : rec.running_min)
      w.row({std::to_string(k), format_number(v), format_number(rec.bound)});
  });
  if (rec.min_value < rec.bound - 1e-9)
    err << "note: sampled minimum " << format_number(rec.min_value) << " is below S - 2 S_NS = "
        << format_number(rec.bound) << "\n";
  return 0;
}

int cmd_cache(const std::string& action, const RunConfig& cfg, std::ostream& out, std::ostream&) {
  TensorCache cache(cfg.cache_dir.empty() ? TensorCache::default_directory()
                                          : std::filesystem::path(cfg.cache_dir));
  if (action == "list") {
    const auto keys = cache.keys();
    out << keys.size() << " entries\n";
    for (const auto& k : keys) out << k << "\n";
  } else if (action == "clear") {
    out << "removed " << cache.clear() << " entries\n";
  } else if (action == "stats") {
    out << cache.keys().size() << " entries\n"
        << cache.total_bytes() << " bytes\n"
        << "format version " << TensorCache::kFormatVersion << "\n"
        << "directory " << cache.directory().string() << "\n";
  } else {
    throw DomainError("cache action must be list, clear or stats");
  }
  return 0;
}

}  // namespace entconvex::cli
