#ifndef SYNANT_SVG_HPP
#define SYNANT_SVG_HPP

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "synant/graph.hpp"
#include "synant/matchstats.hpp"
#include "synant/strutil.hpp"

namespace synant {
namespace svg {

inline std::string escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

inline std::string num(double v) { return format_fixed(v, 2); }

struct Bar {
  std::string group;   // x-axis cluster, e.g. "class A"
  std::string series;  // legend entry
  std::string color;
  double value = 0.0;
};

// Grouped bar chart. Bars arrive in draw order; clusters keep first-seen
// order. Values are labeled on top of each bar.
inline std::string bar_chart(const std::string& title,
                             const std::string& y_label,
                             const std::vector<Bar>& bars,
                             const std::vector<std::string>& comments = {}) {
  std::vector<std::string> groups;
  std::vector<std::pair<std::string, std::string>> series;  // name, color
  for (const Bar& b : bars) {
    if (std::find(groups.begin(), groups.end(), b.group) == groups.end()) {
      groups.push_back(b.group);
    }
    auto known = std::find_if(series.begin(), series.end(),
                              [&](const auto& s) { return s.first == b.series; });
    if (known == series.end()) series.emplace_back(b.series, b.color);
  }
  double vmax = 1.0;
  for (const Bar& b : bars) vmax = std::max(vmax, b.value);

  const double bar_w = 34, gap = 10, cluster_gap = 46;
  const double plot_h = 260, margin_l = 64, margin_t = 56, margin_b = 76;
  const size_t per_cluster = series.size();
  const double cluster_w = per_cluster * bar_w + (per_cluster - 1) * gap;
  const double plot_w =
      groups.size() * cluster_w + (groups.size() + 1) * cluster_gap;
  const double width = margin_l + plot_w + 180;  // room for the legend
  const double height = margin_t + plot_h + margin_b;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width)
      << "\" height=\"" << num(height) << "\" viewBox=\"0 0 " << num(width)
      << " " << num(height) << "\">\n";
  for (const std::string& c : comments) {
    out << "<!-- " << escape(c) << " -->\n";
  }
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << num(margin_l) << "\" y=\"28\" font-family=\"sans-serif\""
      << " font-size=\"17\" font-weight=\"bold\">" << escape(title)
      << "</text>\n";

  auto ypix = [&](double v) { return margin_t + plot_h * (1.0 - v / (vmax * 1.15)); };

  // y axis with 5 ticks
  out << "<line x1=\"" << num(margin_l) << "\" y1=\"" << num(margin_t)
      << "\" x2=\"" << num(margin_l) << "\" y2=\"" << num(margin_t + plot_h)
      << "\" stroke=\"black\"/>\n";
  for (int t = 0; t <= 5; ++t) {
    double v = vmax * 1.15 * t / 5.0;
    double y = ypix(v);
    out << "<line x1=\"" << num(margin_l - 4) << "\" y1=\"" << num(y)
        << "\" x2=\"" << num(margin_l) << "\" y2=\"" << num(y)
        << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << num(margin_l - 8) << "\" y=\"" << num(y + 4)
        << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">"
        << format_fixed(v, 2) << "</text>\n";
  }
  out << "<text x=\"16\" y=\"" << num(margin_t + plot_h / 2)
      << "\" font-family=\"sans-serif\" font-size=\"12\" transform=\"rotate(-90 16 "
      << num(margin_t + plot_h / 2) << ")\" text-anchor=\"middle\">"
      << escape(y_label) << "</text>\n";
  out << "<line x1=\"" << num(margin_l) << "\" y1=\"" << num(margin_t + plot_h)
      << "\" x2=\"" << num(margin_l + plot_w) << "\" y2=\""
      << num(margin_t + plot_h) << "\" stroke=\"black\"/>\n";

  for (size_t gi = 0; gi < groups.size(); ++gi) {
    double x0 = margin_l + cluster_gap + gi * (cluster_w + cluster_gap);
    for (size_t si = 0; si < series.size(); ++si) {
      auto bar = std::find_if(bars.begin(), bars.end(), [&](const Bar& b) {
        return b.group == groups[gi] && b.series == series[si].first;
      });
      if (bar == bars.end()) continue;
      double x = x0 + si * (bar_w + gap);
      double y = ypix(bar->value);
      out << "<rect x=\"" << num(x) << "\" y=\"" << num(y) << "\" width=\""
          << num(bar_w) << "\" height=\"" << num(margin_t + plot_h - y)
          << "\" fill=\"" << bar->color << "\"/>\n";
      out << "<text x=\"" << num(x + bar_w / 2) << "\" y=\"" << num(y - 4)
          << "\" font-family=\"sans-serif\" font-size=\"10\" text-anchor=\"middle\">"
          << format_fixed(bar->value, 3) << "</text>\n";
    }
    out << "<text x=\"" << num(x0 + cluster_w / 2) << "\" y=\""
        << num(margin_t + plot_h + 22)
        << "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\">"
        << escape(groups[gi]) << "</text>\n";
  }

  double lx = margin_l + plot_w + 16, ly = margin_t + 6;
  for (const auto& [name, color] : series) {
    out << "<rect x=\"" << num(lx) << "\" y=\"" << num(ly)
        << "\" width=\"14\" height=\"14\" fill=\"" << color << "\"/>\n";
    out << "<text x=\"" << num(lx + 20) << "\" y=\"" << num(ly + 12)
        << "\" font-family=\"sans-serif\" font-size=\"12\">" << escape(name)
        << "</text>\n";
    ly += 22;
  }
  out << "</svg>\n";
  return out.str();
}

// Heat map of (n_syn, n_ant) proportions. Cells beyond `cap` fold into the
// cap row/column, labeled with a trailing '+'.
inline std::string heatmap_chart(const HeatmapGrid& grid, int cap,
                                 const std::vector<std::string>& comments = {}) {
  int max_syn = 0, max_ant = 0;
  for (const auto& [cell, count] : grid.counts) {
    max_syn = std::max(max_syn, cell.first);
    max_ant = std::max(max_ant, cell.second);
  }
  const int nx = std::min(max_syn, cap) + 1;
  const int ny = std::min(max_ant, cap) + 1;
  std::map<std::pair<int, int>, double> folded;
  for (const auto& [cell, prop] : grid.proportions) {
    folded[{std::min(cell.first, cap), std::min(cell.second, cap)}] += prop;
  }

  const double cell_px = 34, margin_l = 70, margin_t = 56, margin_b = 60;
  const double width = margin_l + nx * cell_px + 40;
  const double height = margin_t + ny * cell_px + margin_b;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width)
      << "\" height=\"" << num(height) << "\" viewBox=\"0 0 " << num(width)
      << " " << num(height) << "\">\n";
  for (const std::string& c : comments) out << "<!-- " << escape(c) << " -->\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << num(margin_l) << "\" y=\"26\" font-family=\"sans-serif\""
      << " font-size=\"16\" font-weight=\"bold\">" << escape(grid.label)
      << " (n=" << grid.total << ")</text>\n";

  // n_ant = 0 sits on the bottom row
  for (int sy = 0; sy < nx; ++sy) {
    for (int an = 0; an < ny; ++an) {
      double x = margin_l + sy * cell_px;
      double y = margin_t + (ny - 1 - an) * cell_px;
      double prop = 0.0;
      if (auto it = folded.find({sy, an}); it != folded.end()) prop = it->second;
      int shade = static_cast<int>(std::lround(255.0 * (1.0 - prop)));
      char color[8];
      std::snprintf(color, sizeof(color), "#%02x%02xff", shade, shade);
      out << "<rect x=\"" << num(x) << "\" y=\"" << num(y) << "\" width=\""
          << num(cell_px) << "\" height=\"" << num(cell_px) << "\" fill=\""
          << color << "\" stroke=\"#cccccc\"/>\n";
      if (prop > 0.0) {
        out << "<text x=\"" << num(x + cell_px / 2) << "\" y=\""
            << num(y + cell_px / 2 + 4)
            << "\" font-family=\"sans-serif\" font-size=\"9\" text-anchor=\"middle\""
            << (prop > 0.5 ? " fill=\"white\"" : "") << ">"
            << format_fixed(prop, 2) << "</text>\n";
      }
    }
  }
  for (int sy = 0; sy < nx; ++sy) {
    std::string label = std::to_string(sy) + (sy == cap && max_syn > cap ? "+" : "");
    out << "<text x=\"" << num(margin_l + sy * cell_px + cell_px / 2) << "\" y=\""
        << num(margin_t + ny * cell_px + 16)
        << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">"
        << label << "</text>\n";
  }
  for (int an = 0; an < ny; ++an) {
    std::string label = std::to_string(an) + (an == cap && max_ant > cap ? "+" : "");
    out << "<text x=\"" << num(margin_l - 8) << "\" y=\""
        << num(margin_t + (ny - 1 - an) * cell_px + cell_px / 2 + 4)
        << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">"
        << label << "</text>\n";
  }
  out << "<text x=\"" << num(margin_l + nx * cell_px / 2) << "\" y=\""
      << num(margin_t + ny * cell_px + 40)
      << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">"
      << "n_syn</text>\n";
  out << "<text x=\"20\" y=\"" << num(margin_t + ny * cell_px / 2)
      << "\" font-family=\"sans-serif\" font-size=\"12\" transform=\"rotate(-90 20 "
      << num(margin_t + ny * cell_px / 2) << ")\" text-anchor=\"middle\">"
      << "n_ant</text>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace svg
}  // namespace synant

#endif  // SYNANT_SVG_HPP
