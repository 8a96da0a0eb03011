#include "klee/app/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace klee::app {

namespace {

std::string num(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.6g", std::abs(v) < 1e-300 ? 0.0 : v);
  return buffer;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

double niceStep(double span, int targetTicks) {
  const double raw = span / std::max(1, targetTicks);
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  const double f = raw / mag;
  const double nice = f < 1.5 ? 1.0 : f < 3.0 ? 2.0 : f < 7.0 ? 5.0 : 10.0;
  return nice * mag;
}

}  // namespace

std::string SvgChart::render() const {
  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  for (const auto& s : series) {
    for (std::size_t i = 0; i < std::min(s.x.size(), s.y.size()); ++i) {
      if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
      xmin = std::min(xmin, s.x[i]);
      xmax = std::max(xmax, s.x[i]);
      ymin = std::min(ymin, s.y[i]);
      ymax = std::max(ymax, s.y[i]);
    }
  }
  if (!std::isfinite(xmin)) xmin = 0.0, xmax = 1.0, ymin = 0.0, ymax = 1.0;
  // Flat data still needs a visible band.
  const auto widen = [](double& lo, double& hi) {
    const double span = hi - lo;
    const double pad = span > 0.0 ? 0.05 * span : std::max(1e-3, 1e-3 * std::abs(lo));
    lo -= pad;
    hi += pad;
  };
  widen(xmin, xmax);
  widen(ymin, ymax);

  const double left = 80, right = 20, top = 50, bottom = 60;
  double plotW = width - left - right, plotH = height - top - bottom;
  if (equalAspect) {
    const double sx = plotW / (xmax - xmin), sy = plotH / (ymax - ymin);
    const double s = std::min(sx, sy);
    const double cx = 0.5 * (xmin + xmax), cy = 0.5 * (ymin + ymax);
    xmin = cx - 0.5 * plotW / s;
    xmax = cx + 0.5 * plotW / s;
    ymin = cy - 0.5 * plotH / s;
    ymax = cy + 0.5 * plotH / s;
  }
  const auto px = [&](double x) { return left + (x - xmin) / (xmax - xmin) * plotW; };
  const auto py = [&](double y) { return top + (ymax - y) / (ymax - ymin) * plotH; };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << " " << height << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
  out << "<text x=\"" << num(width / 2.0) << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">" << escape(title)
      << "</text>\n";
  out << "<rect x=\"" << num(left) << "\" y=\"" << num(top) << "\" width=\"" << num(plotW) << "\" height=\""
      << num(plotH) << "\" fill=\"none\" stroke=\"black\"/>\n";

  const double xs = niceStep(xmax - xmin, 6), ys = niceStep(ymax - ymin, 6);
  for (double t = std::ceil(xmin / xs) * xs; t <= xmax + 1e-12 * xs; t += xs) {
    const double x = px(t);
    out << "<line x1=\"" << num(x) << "\" y1=\"" << num(top + plotH) << "\" x2=\"" << num(x) << "\" y2=\""
        << num(top + plotH + 5) << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << num(x) << "\" y=\"" << num(top + plotH + 18) << "\" text-anchor=\"middle\">"
        << num(std::abs(t) < 1e-12 * xs ? 0.0 : t) << "</text>\n";
  }
  for (double t = std::ceil(ymin / ys) * ys; t <= ymax + 1e-12 * ys; t += ys) {
    const double y = py(t);
    out << "<line x1=\"" << num(left - 5) << "\" y1=\"" << num(y) << "\" x2=\"" << num(left) << "\" y2=\""
        << num(y) << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << num(left - 8) << "\" y=\"" << num(y + 4) << "\" text-anchor=\"end\">"
        << num(std::abs(t) < 1e-12 * ys ? 0.0 : t) << "</text>\n";
  }
  out << "<text x=\"" << num(left + plotW / 2) << "\" y=\"" << num(height - 15.0)
      << "\" text-anchor=\"middle\">" << escape(xLabel) << "</text>\n";
  out << "<text x=\"18\" y=\"" << num(top + plotH / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
      << num(top + plotH / 2) << ")\">" << escape(yLabel) << "</text>\n";

  out << "<g>\n";
  for (const auto& s : series) {
    out << "<path fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.5\"";
    if (!s.dash.empty()) out << " stroke-dasharray=\"" << s.dash << "\"";
    out << " d=\"";
    bool pen = false;
    for (std::size_t i = 0; i < std::min(s.x.size(), s.y.size()); ++i) {
      if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) {
        pen = false;
        continue;
      }
      out << (pen ? " L" : "M") << num(px(s.x[i])) << "," << num(py(s.y[i]));
      pen = true;
    }
    out << "\"><title>" << escape(s.label) << "</title></path>\n";
  }
  out << "</g>\n";

  double ly = top + 16;
  for (const auto& s : series) {
    const double lx = left + plotW - 170;
    out << "<line x1=\"" << num(lx) << "\" y1=\"" << num(ly - 4) << "\" x2=\"" << num(lx + 24) << "\" y2=\""
        << num(ly - 4) << "\" stroke=\"" << s.color << "\" stroke-width=\"2\"";
    if (!s.dash.empty()) out << " stroke-dasharray=\"" << s.dash << "\"";
    out << "/>\n";
    out << "<text x=\"" << num(lx + 30) << "\" y=\"" << num(ly) << "\">" << escape(s.label) << "</text>\n";
    ly += 16;
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace klee::app
