#pragma once

// Minimal SVG writer for step-function plots of membership curves over a
// universe, with the y axis fixed to [0, 1].

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "eventling/dataset.hpp"
#include "eventling/tnorm.hpp"

namespace eventling {

struct PlotSeries {
  std::string label;
  RealCurve curve;
  std::string color;
  bool dashed = false;
};

inline const std::vector<std::string>& default_palette() {
  static const std::vector<std::string> colors{"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                               "#9467bd", "#8c564b"};
  return colors;
}

namespace detail {

inline std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

/// Roughly ten "nice" tick positions (1, 2 or 5 times a power of ten).
inline std::vector<double> nice_ticks(double lo, double hi) {
  const double raw = (hi - lo) / 10.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double step = mag;
  for (double m : {1.0, 2.0, 5.0, 10.0}) {
    step = m * mag;
    if (step >= raw) break;
  }
  std::vector<double> ticks;
  for (double t = std::ceil(lo / step) * step; t <= hi + step * 1e-9; t += step) ticks.push_back(t);
  return ticks;
}

}  // namespace detail

/// Renders each series as a step path: horizontal runs over the pieces,
/// vertical jumps at the breakpoints.
inline std::string render_step_plot(const std::vector<PlotSeries>& series, const Universe& u,
                                    const SvgLayout& layout, const std::string& title,
                                    const std::string& x_label = "omega",
                                    const std::string& y_label = "membership") {
  const double w = layout.width;
  const double h = layout.height;
  const double m = layout.margin;
  const double plot_w = w - 2 * m;
  const double plot_h = h - 2 * m;
  auto sx = [&](double omega) { return m + (omega - u.lo) / u.width() * plot_w; };
  auto sy = [&](double value) { return h - m - value * plot_h; };

  std::ostringstream svg;
  svg << fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\">\n",
      layout.width, layout.height, layout.width, layout.height);
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << fmt::format(
      "<text x=\"{:.2f}\" y=\"{:.2f}\" font-family=\"sans-serif\" font-size=\"16\" "
      "text-anchor=\"middle\">{}</text>\n",
      w / 2, m / 2, detail::xml_escape(title));

  // axes
  svg << fmt::format(
      "<path d=\"M {:.2f} {:.2f} V {:.2f} H {:.2f}\" fill=\"none\" stroke=\"black\"/>\n", m, m,
      h - m, w - m);
  for (double t : detail::nice_ticks(u.lo, u.hi)) {
    svg << fmt::format(
        "<line x1=\"{0:.2f}\" y1=\"{1:.2f}\" x2=\"{0:.2f}\" y2=\"{2:.2f}\" stroke=\"black\"/>"
        "<text x=\"{0:.2f}\" y=\"{3:.2f}\" font-family=\"sans-serif\" font-size=\"11\" "
        "text-anchor=\"middle\">{4}</text>\n",
        sx(t), h - m, h - m + 5, h - m + 18, fmt::format("{:g}", t));
  }
  for (int i = 0; i <= 4; ++i) {
    const double v = i / 4.0;
    svg << fmt::format(
        "<line x1=\"{0:.2f}\" y1=\"{1:.2f}\" x2=\"{2:.2f}\" y2=\"{1:.2f}\" stroke=\"#dddddd\"/>"
        "<text x=\"{3:.2f}\" y=\"{4:.2f}\" font-family=\"sans-serif\" font-size=\"11\" "
        "text-anchor=\"end\">{5:g}</text>\n",
        m, sy(v), w - m, m - 6, sy(v) + 4, v);
  }
  svg << fmt::format(
      "<text x=\"{:.2f}\" y=\"{:.2f}\" font-family=\"sans-serif\" font-size=\"13\" "
      "text-anchor=\"middle\">{}</text>\n",
      w / 2, h - m / 4, detail::xml_escape(x_label));
  svg << fmt::format(
      "<text x=\"{0:.2f}\" y=\"{1:.2f}\" font-family=\"sans-serif\" font-size=\"13\" "
      "text-anchor=\"middle\" transform=\"rotate(-90 {0:.2f} {1:.2f})\">{2}</text>\n",
      m / 4, h / 2, detail::xml_escape(y_label));

  for (std::size_t s = 0; s < series.size(); ++s) {
    const auto& c = series[s].curve;
    const auto& b = c.breakpoints();
    const auto& v = c.values();
    std::string d = fmt::format("M {:.2f} {:.2f}", sx(b.front()), sy(v.front()));
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i > 0) d += fmt::format(" V {:.2f}", sy(v[i]));
      d += fmt::format(" H {:.2f}", sx(b[i + 1]));
    }
    svg << fmt::format("<path d=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"2\"{}/>\n", d,
                       series[s].color, series[s].dashed ? " stroke-dasharray=\"6 3\"" : "");
    const double ly = m + 16.0 * static_cast<double>(s);
    svg << fmt::format(
        "<line x1=\"{0:.2f}\" y1=\"{1:.2f}\" x2=\"{2:.2f}\" y2=\"{1:.2f}\" stroke=\"{3}\" "
        "stroke-width=\"2\"/><text x=\"{4:.2f}\" y=\"{5:.2f}\" font-family=\"sans-serif\" "
        "font-size=\"11\">{6}</text>\n",
        w - m - 150, ly, w - m - 130, series[s].color, w - m - 125, ly + 4,
        detail::xml_escape(series[s].label));
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace eventling
