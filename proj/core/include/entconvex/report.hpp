#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "entconvex/sweep.hpp"

namespace entconvex {

// 12 significant digits, "%.12g".
std::string format_number(double v);

// RFC 4180 style: fields quoted only when they contain a comma, quote or newline.
class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}
  void row(const std::vector<std::string>& fields);

 private:
  std::ostream& out_;
};

void write_curve_csv(std::ostream& out, const EntropyCurve& curve);

// Polyline of S(alpha) with the chord between the endpoints and simple axes.
void write_curve_svg(std::ostream& out, const EntropyCurve& curve, const std::string& title);

}  // namespace entconvex
