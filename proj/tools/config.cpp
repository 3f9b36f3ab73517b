#include "config.hpp"

#include <cstdlib>
#include <sstream>
#include <vector>

#include "entconvex/errors.hpp"
#include "entconvex/tables.hpp"

namespace entconvex::cli {

namespace {

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    char* end = nullptr;
    const long v = std::strtol(item.c_str(), &end, 10);
    if (item.empty() || *end != '\0') throw DomainError("bad integer list '" + s + "'");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

}  // namespace

double RunConfig::base() const { return parse_log_base(log_base); }

void RunConfig::validate() const {
  parse_model(model);
  base();
  if (alpha_steps < 5) throw DomainError("--alpha-steps must be at least 5");
  if (samples == 0) throw DomainError("--samples must be at least 1");
  if (lambda < 0) throw DomainError("--lambda must be >= 0");
  if (basis_size < 0 || quadrature_order < 0) throw DomainError("basis sizes must be positive");
  if (sampling != "haar" && sampling != "biased") throw DomainError("--sampling must be haar or biased");
}

PairSpec RunConfig::pair_spec() const {
  validate();
  PairSpec s;
  s.model = parse_model(model);
  switch (s.model) {
    case ModelKind::angular:
      s.l = l;
      s.L = L;
      s.M = M;
      s.Mprime = m_prime.value_or(-M);
      break;
    case ModelKind::spherium:
      s.M = M;
      s.Mprime = m_prime.value_or(-M);
      s.lmax = lmax;
      break;
    case ModelKind::oscillator: {
      s.osc0 = OscState{n, m, l, p, lambda};
      s.osc1 = OscState{n, -m, l, -p, lambda};
      if (!partner.empty()) {
        const auto v = parse_ints(partner);
        if (v.size() != 4) throw DomainError("--partner for the oscillator needs n,m,l,p");
        s.osc1 = OscState{v[0], v[1], v[2], v[3], lambda};
      }
      if (basis_size) s.osc_basis.n_per_coordinate = basis_size;
      if (quadrature_order) s.osc_basis.quadrature_order = quadrature_order;
      break;
    }
    case ModelKind::lg: {
      s.lg0 = LGMode{l, m, 1.0, lg_z, 1.0};
      s.lg1 = LGMode{l, -m, 1.0, lg_z, 1.0};
      if (!partner.empty()) {
        const auto v = parse_ints(partner);
        if (v.size() != 2) throw DomainError("--partner for LG modes needs l,m");
        s.lg1 = LGMode{v[0], v[1], 1.0, lg_z, 1.0};
      }
      if (basis_size) s.lg_basis.size = basis_size;
      if (quadrature_order) s.lg_basis.quadrature_order = quadrature_order;
      break;
    }
  }
  return s;
}

}  // namespace entconvex::cli
