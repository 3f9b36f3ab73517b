#pragma once

#include <optional>
#include <string>
#include <vector>

#include "entconvex/sweep.hpp"

namespace entconvex {

// Reference rows of the five comparison tables.
struct ReferenceRow {
  PairSpec pair;
  std::string label;  // e.g. "003-1 & 0031"
  Convexity convexity;
  int qc;
  std::optional<double> s_vn;
  double s_ns;
  double s_r;
};

struct ReferenceTable {
  int id = 0;
  std::string title;
  std::vector<ReferenceRow> rows;
  double tolerance = 5e-3;  // absolute, on every reported value
};

ReferenceTable reference_table(int id);

enum class SnsVariant { minimized, adapted };
const char* variant_name(SnsVariant v);

struct TableOptions {
  int grid = 41;
  int osc_n = 16;
  int osc_quadrature = 48;
  int lmax = 20;
  int lg_size = 40;
  int lg_quadrature = 64;
  TensorCache* cache = nullptr;
  std::optional<double> forced_log_base;  // skip detection of the base
};

struct RowResult {
  std::string label;
  double s0 = 0, s1 = 0;  // in the chosen base
  double s_ns = 0, s_r = 0;
  int qc = 0;
  Convexity observed = Convexity::linear;
  Convexity expected = Convexity::linear;
  int expected_qc = 0;
  std::optional<double> expected_s_vn;
  double expected_s_ns = 0, expected_s_r = 0;
  double max_abs_error = 0;
  bool labels_agree = false;      // observed convexity and Q_c sign both match
  bool values_agree = false;      // all values within the table tolerance
  bool criterion_agrees = false;  // Q_c vs observed curve (independent of reference)
  bool agree() const { return labels_agree && values_agree; }

  // both variants, natural log, kept for base and variant detection
  double s0_nats = 0, s_ns_min_nats = 0, s_ns_adapted_nats = 0;
  int qc_min = 0, qc_adapted = 0;
};

struct TableResult {
  int id = 0;
  double log_base = 2.0;
  SnsVariant variant = SnsVariant::minimized;
  double tolerance = 5e-3;
  std::vector<RowResult> rows;
  bool all_agree() const;
};

// Max relative error over reported values, |reference| floored at 1e-2.
double relative_misfit(const ReferenceTable& ref, const std::vector<RowResult>& rows,
                       double log_base, SnsVariant variant);

TableResult compute_table(int id, const TableOptions& opt = {});

std::string log_base_name(double base);
double parse_log_base(const std::string& s);

}  // namespace entconvex
