#include "entconvex/report.hpp"

#include <algorithm>
#include <cstdio>

namespace entconvex {

std::string format_number(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.12g", v == 0.0 ? 0.0 : v);  // no "-0"
  return buf;
}

void CsvWriter::row(const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out_ << ',';
    const std::string& f = fields[i];
    if (f.find_first_of(",\"\n\r") == std::string::npos) {
      out_ << f;
      continue;
    }
    out_ << '"';
    for (char c : f) {
      if (c == '"') out_ << '"';
      out_ << c;
    }
    out_ << '"';
  }
  out_ << "\r\n";
}

void write_curve_csv(std::ostream& out, const EntropyCurve& curve) {
  CsvWriter w(out);
  w.row({"alpha", "entropy"});
  for (std::size_t i = 0; i < curve.alphas.size(); ++i)
    w.row({format_number(curve.alphas[i]), format_number(curve.entropies[i])});
}

namespace {
std::string escape(const std::string& s) {
  std::string o;
  for (char c : s) {
    switch (c) {
      case '<': o += "&lt;"; break;
      case '>': o += "&gt;"; break;
      case '&': o += "&amp;"; break;
      default: o += c;
    }
  }
  return o;
}
}  // namespace

void write_curve_svg(std::ostream& out, const EntropyCurve& curve, const std::string& title) {
  const double w = 480, h = 320, left = 50, right = 20, top = 30, bottom = 40;
  double ymax = 0.0;
  for (double s : curve.entropies) ymax = std::max(ymax, s);
  ymax = ymax > 0 ? ymax * 1.1 : 1.0;
  auto px = [&](double a) { return left + a * (w - left - right); };
  auto py = [&](double s) { return h - bottom - s / ymax * (h - top - bottom); };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
      << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << w / 2 << "\" y=\"18\" text-anchor=\"middle\" font-size=\"13\">"
      << escape(title) << "</text>\n";
  out << "<line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(1) << "\" y2=\"" << py(0)
      << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(0) << "\" y2=\""
      << py(ymax) << "\" stroke=\"black\"/>\n";
  out << "<text x=\"" << px(0.5) << "\" y=\"" << h - 8 << "\" text-anchor=\"middle\" font-size=\"12\">alpha</text>\n";
  out << "<text x=\"" << px(0) - 6 << "\" y=\"" << py(ymax) + 4
      << "\" text-anchor=\"end\" font-size=\"11\">" << format_number(ymax) << "</text>\n";
  out << "<text x=\"" << px(0) - 6 << "\" y=\"" << py(0) + 4 << "\" text-anchor=\"end\" font-size=\"11\">0</text>\n";
  out << "<line x1=\"" << px(0) << "\" y1=\"" << py(curve.s1) << "\" x2=\"" << px(1) << "\" y2=\""
      << py(curve.s0) << "\" stroke=\"gray\" stroke-dasharray=\"4 3\"/>\n";
  out << "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"1.5\" points=\"";
  for (std::size_t i = 0; i < curve.alphas.size(); ++i)
    out << (i ? " " : "") << format_number(px(curve.alphas[i])) << ','
        << format_number(py(curve.entropies[i]));
  out << "\"/>\n</svg>\n";
}

}  // namespace entconvex
