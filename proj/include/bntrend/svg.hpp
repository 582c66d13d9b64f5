#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "bntrend/error.hpp"
#include "bntrend/format.hpp"

namespace bntrend {

// Tabular form of one or more term series: one labeled column group per term,
// one row per window. This is both what the series command exports and what
// the plot command reads back in.
struct SeriesTable {
  struct Column {
    std::string label;
    bool absent = false;
    std::vector<double> observed;
    std::vector<double> chi;
  };
  std::vector<std::string> window_starts;  // ISO dates, one per row
  std::vector<Column> columns;
};

enum class SeriesMetric { observed, chi };

namespace detail {

inline std::string svg_coord(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

// Tick spacing of the form 1/2/5 * 10^k so that at most `max_ticks` fit.
inline double nice_step(double max_value, int max_ticks) {
  if (max_value <= 0) return 1.0;
  double raw = max_value / max_ticks;
  double magnitude = std::pow(10.0, std::floor(std::log10(raw)));
  for (double m : {1.0, 2.0, 5.0, 10.0}) {
    if (magnitude * m >= raw) return magnitude * m;
  }
  return magnitude * 10.0;
}

}  // namespace detail

// Standalone SVG line chart: one polyline per column, linear axes, window
// start dates along x, legend on the right. A pure function of its input —
// identical tables render to identical bytes.
inline std::string render_svg(const SeriesTable& table,
                              SeriesMetric metric = SeriesMetric::observed) {
  if (table.columns.empty() || table.window_starts.empty())
    throw ConfigError("cannot render an empty series");
  for (const auto& col : table.columns) {
    const auto& values = metric == SeriesMetric::observed ? col.observed : col.chi;
    if (values.size() != table.window_starts.size())
      throw ConfigError("series columns must all have one value per window");
  }

  static constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                             "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};
  constexpr double kLeft = 70, kRight = 780, kTop = 40, kBottom = 480;

  std::size_t rows = table.window_starts.size();
  double max_value = 0;
  for (const auto& col : table.columns)
    for (double v : (metric == SeriesMetric::observed ? col.observed : col.chi))
      max_value = std::max(max_value, v);
  if (max_value <= 0) max_value = 1;

  auto x_of = [&](std::size_t i) {
    if (rows == 1) return (kLeft + kRight) / 2;
    return kLeft + (kRight - kLeft) * static_cast<double>(i) / static_cast<double>(rows - 1);
  };
  auto y_of = [&](double v) { return kBottom - (kBottom - kTop) * (v / max_value); };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
         "width=\"960\" height=\"540\" viewBox=\"0 0 960 540\">\n";
  svg += "<rect x=\"0\" y=\"0\" width=\"960\" height=\"540\" fill=\"white\"/>\n";

  // axes
  svg += "<line x1=\"" + detail::svg_coord(kLeft) + "\" y1=\"" + detail::svg_coord(kTop) +
         "\" x2=\"" + detail::svg_coord(kLeft) + "\" y2=\"" + detail::svg_coord(kBottom) +
         "\" stroke=\"black\"/>\n";
  svg += "<line x1=\"" + detail::svg_coord(kLeft) + "\" y1=\"" + detail::svg_coord(kBottom) +
         "\" x2=\"" + detail::svg_coord(kRight) + "\" y2=\"" + detail::svg_coord(kBottom) +
         "\" stroke=\"black\"/>\n";

  // y ticks
  double step = detail::nice_step(max_value, 8);
  for (double v = 0; v <= max_value + step * 1e-9; v += step) {
    double y = y_of(v);
    svg += "<line x1=\"" + detail::svg_coord(kLeft - 5) + "\" y1=\"" + detail::svg_coord(y) +
           "\" x2=\"" + detail::svg_coord(kLeft) + "\" y2=\"" + detail::svg_coord(y) +
           "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + detail::svg_coord(kLeft - 10) + "\" y=\"" +
           detail::svg_coord(y + 4) + "\" text-anchor=\"end\" font-size=\"12\">" +
           format_double(v) + "</text>\n";
  }

  // x tick labels: window start dates, thinned to at most 10
  std::size_t label_stride = (rows + 9) / 10;
  if (label_stride < 1) label_stride = 1;
  for (std::size_t i = 0; i < rows; i += label_stride) {
    double x = x_of(i);
    svg += "<line x1=\"" + detail::svg_coord(x) + "\" y1=\"" + detail::svg_coord(kBottom) +
           "\" x2=\"" + detail::svg_coord(x) + "\" y2=\"" + detail::svg_coord(kBottom + 5) +
           "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + detail::svg_coord(x) + "\" y=\"" + detail::svg_coord(kBottom + 20) +
           "\" text-anchor=\"middle\" font-size=\"11\">" + xml_escape(table.window_starts[i]) +
           "</text>\n";
  }

  // one polyline per column
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    const auto& col = table.columns[c];
    const auto& values = metric == SeriesMetric::observed ? col.observed : col.chi;
    const char* color = kPalette[c % (sizeof(kPalette) / sizeof(kPalette[0]))];
    std::string points;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i) points.push_back(' ');
      points += detail::svg_coord(x_of(i)) + "," + detail::svg_coord(y_of(values[i]));
    }
    svg += std::string("<polyline fill=\"none\" stroke=\"") + color +
           "\" stroke-width=\"2\" points=\"" + points + "\"/>\n";
  }

  // legend
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    const auto& col = table.columns[c];
    const char* color = kPalette[c % (sizeof(kPalette) / sizeof(kPalette[0]))];
    double y = kTop + 18 * static_cast<double>(c);
    svg += std::string("<line x1=\"800\" x2=\"824\" y1=\"") + detail::svg_coord(y) +
           "\" y2=\"" + detail::svg_coord(y) + "\" stroke=\"" + color +
           "\" stroke-width=\"2\"/>\n";
    std::string label = col.label;
    if (col.absent) label += " [absent]";
    svg += "<text x=\"830\" y=\"" + detail::svg_coord(y + 4) + "\" font-size=\"12\">" +
           xml_escape(label) + "</text>\n";
  }

  svg += "</svg>\n";
  return svg;
}

}  // namespace bntrend
