#pragma once

#include <string>
#include <vector>

namespace polygeo::svg {

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

/// Standalone SVG document: one polyline with markers per series.
std::string line_plot(const std::vector<Series>& series, const std::string& title, const std::string& x_label,
                      const std::string& y_label, bool log_x = false);

/// Standalone SVG document: counts of values in [0, 1) over `bins` equal
/// bins, one bar group per series.
std::string histogram(const std::vector<std::vector<double>>& values, const std::vector<std::string>& labels, int bins,
                      const std::string& title);

}  // namespace polygeo::svg
