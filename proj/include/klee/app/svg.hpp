#pragma once

#include <string>
#include <vector>

namespace klee::app {

struct SvgSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
  std::string color = "#1f77b4";
  std::string dash;  // stroke-dasharray, empty for solid
};

/// Minimal line chart: axes with ticks, labels, title and legend.
struct SvgChart {
  std::string title;
  std::string xLabel;
  std::string yLabel;
  std::vector<SvgSeries> series;
  bool equalAspect = false;
  int width = 640;
  int height = 480;

  std::string render() const;
};

}  // namespace klee::app
