#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "entconvex/errors.hpp"
#include "entconvex/tables.hpp"

using entconvex::cli::RunConfig;

int main(int argc, char** argv) {
  CLI::App app{"Entanglement entropy convexity along superposition sweeps"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value configuration file");
  app.get_config_formatter_base()->arrayDelimiter(',');

  RunConfig cfg;
  app.add_option("--model", cfg.model, "angular | oscillator | spherium | lg")
      ->check(CLI::IsMember({"angular", "oscillator", "spherium", "lg"}));
  app.add_option("--l", cfg.l, "single-particle l (angular) or LG radial index");
  app.add_option("--L", cfg.L, "total angular momentum");
  app.add_option("--M", cfg.M, "projection of the first state");
  app.add_option("--Mprime", cfg.m_prime, "projection of the second state (default -M)");
  app.add_option("--n", cfg.n, "oscillator center-of-mass quantum number");
  app.add_option("--m", cfg.m, "angular quantum number (oscillator, LG)");
  app.add_option("--p", cfg.p, "oscillator relative radial quantum number");
  app.add_option("--partner", cfg.partner, "second state: n,m,l,p or l,m");
  app.add_option("--lambda", cfg.lambda, "oscillator interaction strength");
  app.add_option("--alpha-steps", cfg.alpha_steps, "grid points on [0,1]");
  auto* base_opt = app.add_option("--log-base", cfg.log_base, "2, e or 10");
  app.add_option("--lmax", cfg.lmax, "spherium one-particle cutoff");
  app.add_option("--basis-size", cfg.basis_size, "oscillator Fock cutoff or LG basis size");
  app.add_option("--quadrature-order", cfg.quadrature_order, "quadrature points (oscillator, LG)");
  app.add_option("--z", cfg.lg_z, "LG propagation distance");
  app.add_option("--samples", cfg.samples, "probe samples");
  app.add_option("--seed", cfg.seed, "probe seed");
  app.add_option("--sampling", cfg.sampling, "haar | biased")
      ->check(CLI::IsMember({"haar", "biased"}));
  app.add_flag("--swap-reference", cfg.swap_reference, "use the second state as reference");
  app.add_option("--out", cfg.out, "output CSV path (default stdout)");
  app.add_option("--svg", cfg.svg, "curve plot path");
  app.add_option("--cache-dir", cfg.cache_dir, "tensor cache directory");
  app.add_flag("--no-cache", cfg.no_cache, "do not read or write the tensor cache");

  int table_id = 0;
  auto* table = app.add_subcommand("table", "recompute a reference table, write CSV");
  table->add_option("id", table_id, "table number 1-5")->required()->check(CLI::Range(1, 5));
  table->fallthrough();
  auto* curve = app.add_subcommand("curve", "S(alpha) for one pair")->fallthrough();
  auto* crit = app.add_subcommand("criterion", "Q_c and the observed label for one pair")->fallthrough();
  auto* probe = app.add_subcommand("probe", "random projective-measurement probe")->fallthrough();
  std::string cache_action;
  auto* cache = app.add_subcommand("cache", "inspect the tensor cache");
  cache->add_option("action", cache_action)->required()->check(CLI::IsMember({"list", "clear", "stats"}));
  cache->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    cfg.validate();
    if (*table) {
      if (base_opt->count() > 0) cfg.forced_log_base = cfg.base();
      return entconvex::cli::cmd_table(table_id, cfg, std::cout, std::cerr);
    }
    if (*curve) return entconvex::cli::cmd_curve(cfg, std::cout, std::cerr);
    if (*crit) return entconvex::cli::cmd_criterion(cfg, std::cout, std::cerr);
    if (*probe) return entconvex::cli::cmd_probe(cfg, std::cout, std::cerr);
    if (*cache) return entconvex::cli::cmd_cache(cache_action, cfg, std::cout, std::cerr);
  } catch (const entconvex::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const entconvex::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
