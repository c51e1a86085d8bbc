#pragma once

#include <string>
#include <utility>
#include <vector>

namespace sltrust {

struct SvgSeries {
    std::string label;
    std::string color;
    std::vector<std::pair<double, double>> points;
};

// Self-contained static SVG line chart (no scripting).
std::string svg_line_chart(const std::string& title,
                           const std::string& x_label,
                           const std::string& y_label,
                           const std::vector<SvgSeries>& series);

}  // namespace sltrust
