#include "polygeo/svg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace polygeo::svg {

namespace {

constexpr double kWidth = 720, kHeight = 440;
constexpr double kLeft = 70, kRight = 20, kTop = 40, kBottom = 60;
constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"};

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

void header(std::ostringstream& os, const std::string& title) {
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
     << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
     << "<text x=\"" << kWidth / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">" << escape(title)
     << "</text>\n"
     << "<line x1=\"" << kLeft << "\" y1=\"" << kHeight - kBottom << "\" x2=\"" << kWidth - kRight << "\" y2=\""
     << kHeight - kBottom << "\" stroke=\"black\"/>\n"
     << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\"" << kHeight - kBottom
     << "\" stroke=\"black\"/>\n";
}

void tick_labels(std::ostringstream& os, double x0, double x1, double y0, double y1, bool log_x) {
  for (int t = 0; t <= 4; ++t) {
    const double fx = t / 4.0;
    const double px = kLeft + fx * (kWidth - kLeft - kRight);
    double vx = x0 + fx * (x1 - x0);
    if (log_x) vx = std::pow(10.0, vx);
    os << "<text x=\"" << px << "\" y=\"" << kHeight - kBottom + 16 << "\" text-anchor=\"middle\">" << vx
       << "</text>\n";
    const double py = kHeight - kBottom - fx * (kHeight - kTop - kBottom);
    os << "<text x=\"" << kLeft - 6 << "\" y=\"" << py + 4 << "\" text-anchor=\"end\">" << y0 + fx * (y1 - y0)
       << "</text>\n";
  }
}

}  // namespace

std::string line_plot(const std::vector<Series>& series, const std::string& title, const std::string& x_label,
                      const std::string& y_label, bool log_x) {
  double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
  const auto tx = [log_x](double x) { return log_x ? std::log10(x) : x; };
  for (const Series& s : series) {
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      x0 = std::min(x0, tx(s.x[i]));
      x1 = std::max(x1, tx(s.x[i]));
      y0 = std::min(y0, s.y[i]);
      y1 = std::max(y1, s.y[i]);
    }
  }
  if (!(x1 > x0)) x1 = x0 + 1;
  if (!(y1 > y0)) y1 = y0 + 1;
  y0 = std::min(y0, 0.0);

  std::ostringstream os;
  header(os, title);
  tick_labels(os, x0, x1, y0, y1, log_x);
  os << "<text x=\"" << kWidth / 2 << "\" y=\"" << kHeight - 18 << "\" text-anchor=\"middle\">" << escape(x_label)
     << "</text>\n"
     << "<text x=\"16\" y=\"" << kHeight / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
     << kHeight / 2 << ")\">" << escape(y_label) << "</text>\n";
  const auto px = [&](double x) { return kLeft + (tx(x) - x0) / (x1 - x0) * (kWidth - kLeft - kRight); };
  const auto py = [&](double y) { return kHeight - kBottom - (y - y0) / (y1 - y0) * (kHeight - kTop - kBottom); };
  for (std::size_t k = 0; k < series.size(); ++k) {
    const Series& s = series[k];
    const char* color = kPalette[k % std::size(kPalette)];
    os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < s.x.size(); ++i) os << px(s.x[i]) << ',' << py(s.y[i]) << ' ';
    os << "\"/>\n";
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      os << "<circle cx=\"" << px(s.x[i]) << "\" cy=\"" << py(s.y[i]) << "\" r=\"3\" fill=\"" << color << "\"/>\n";
    }
    os << "<text x=\"" << kWidth - kRight - 4 << "\" y=\"" << kTop + 14 * (k + 1) << "\" text-anchor=\"end\" fill=\""
       << color << "\">" << escape(s.label) << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string histogram(const std::vector<std::vector<double>>& values, const std::vector<std::string>& labels, int bins,
                      const std::string& title) {
  std::vector<std::vector<int>> counts(values.size(), std::vector<int>(static_cast<std::size_t>(bins), 0));
  int peak = 1;
  for (std::size_t s = 0; s < values.size(); ++s) {
    for (double v : values[s]) {
      const int b = std::clamp(static_cast<int>(v * bins), 0, bins - 1);
      peak = std::max(peak, ++counts[s][static_cast<std::size_t>(b)]);
    }
  }
  std::ostringstream os;
  header(os, title);
  tick_labels(os, 0.0, 1.0, 0.0, peak, false);
  os << "<text x=\"" << kWidth / 2 << "\" y=\"" << kHeight - 18 << "\" text-anchor=\"middle\">height on edge</text>\n";
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  const double group = plot_w / bins;
  const double bar = group / static_cast<double>(std::max<std::size_t>(values.size(), 1));
  for (std::size_t s = 0; s < values.size(); ++s) {
    const char* color = kPalette[s % std::size(kPalette)];
    for (int b = 0; b < bins; ++b) {
      const double h = plot_h * counts[s][static_cast<std::size_t>(b)] / peak;
      os << "<rect x=\"" << kLeft + b * group + s * bar << "\" y=\"" << kHeight - kBottom - h << "\" width=\"" << bar
         << "\" height=\"" << h << "\" fill=\"" << color << "\"/>\n";
    }
    if (s < labels.size()) {
      os << "<text x=\"" << kWidth - kRight - 4 << "\" y=\"" << kTop + 14 * (s + 1)
         << "\" text-anchor=\"end\" fill=\"" << color << "\">" << escape(labels[s]) << "</text>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace polygeo::svg
