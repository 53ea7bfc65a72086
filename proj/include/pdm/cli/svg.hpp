#pragma once

#include <string>
#include <vector>

#include "pdm/types.hpp"

namespace pdm::cli {

struct Series {
    std::string label;
    std::vector<real> x;
    std::vector<real> y;
    std::string color = "#1f77b4";
    bool dashed = false;
};

/// Self-contained line plot with axes, tick labels, a legend and a title.
/// Series longer than `max_points` are decimated by a fixed stride.
std::string render_svg(const std::string& title, const std::string& x_label, const std::string& y_label,
                       const std::vector<Series>& series, std::size_t max_points = 1500);

}  // namespace pdm::cli
