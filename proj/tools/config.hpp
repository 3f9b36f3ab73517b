#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "entconvex/sweep.hpp"

namespace entconvex::cli {

struct RunConfig {
  std::string model = "angular";
  // angular: l, L, M (partner -M unless m_prime given); LG: l, m; oscillator: n, m, l, p
  int l = 3;
  int L = 1;
  int M = 1;
  std::optional<int> m_prime;
  int n = 0;
  int m = 1;
  int p = 0;
  std::string partner;  // "n,m,l,p" (oscillator) or "l,m" (LG)
  double lambda = 0.0;
  int alpha_steps = 41;
  std::string log_base = "2";
  int lmax = 20;
  int basis_size = 0;        // 0: model default
  int quadrature_order = 0;  // 0: model default
  double lg_z = 0.0;
  std::size_t samples = 10000;
  std::uint64_t seed = 1;
  std::string sampling = "haar";
  bool swap_reference = false;
  std::string out;
  std::string svg;
  std::string cache_dir;
  bool no_cache = false;
  std::optional<double> forced_log_base;  // table: set only when --log-base is given

  // Throws DomainError on invalid combinations.
  void validate() const;
  double base() const;
  PairSpec pair_spec() const;
};

}  // namespace entconvex::cli
