#pragma once

#include <string>
#include <vector>

namespace stumpbounds {

/**
 * Static SVG line chart: fixed 800x500 viewport, fixed palette assigned by
 * series order, one polyline per series (split at non-finite points).
 * Output is byte-identical for identical input.
 */
std::string render_line_chart(const std::string& title,
                              const std::string& x_name,
                              const std::vector<double>& x,
                              const std::vector<std::string>& series_names,
                              const std::vector<std::vector<double>>& series);

}  // namespace stumpbounds
