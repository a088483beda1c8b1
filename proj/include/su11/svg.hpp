#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace su11 {

// One curve or point set on a plot.  yerr, when nonempty, must match y and
// draws vertical error bars around scatter markers.
struct PlotSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
  std::vector<double> yerr;
  bool line = false;  // polyline when set, circle markers otherwise
  std::string color = "#1f77b4";
};

// Self-contained SVG line/scatter plot with linear axes and a legend.
void render_svg_plot(std::ostream& os, const std::string& title,
                     const std::string& x_label, const std::string& y_label,
                     const std::vector<PlotSeries>& series);

void write_svg_plot(const std::string& path, const std::string& title,
                    const std::string& x_label, const std::string& y_label,
                    const std::vector<PlotSeries>& series);

}  // namespace su11
