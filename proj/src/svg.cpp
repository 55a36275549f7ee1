#include "stumpbounds/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "stumpbounds/csv.hpp"
#include "stumpbounds/errors.hpp"

namespace stumpbounds {

namespace {

constexpr double kWidth = 800, kHeight = 500;
constexpr double kLeft = 70, kRight = 780, kTop = 40, kBottom = 460;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};
constexpr std::size_t kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);

}  // namespace

std::string render_line_chart(const std::string& title,
                              const std::string& x_name,
                              const std::vector<double>& x,
                              const std::vector<std::string>& series_names,
                              const std::vector<std::vector<double>>& series) {
    if (x.empty()) throw DataError("chart needs at least one x value");
    if (series.empty()) throw DataError("chart needs at least one series");
    for (const auto& s : series)
        if (s.size() != x.size())
            throw DataError("series length does not match x length");

    double x_min = x.front(), x_max = x.front();
    for (double v : x) {
        x_min = std::min(x_min, v);
        x_max = std::max(x_max, v);
    }
    double y_min = 0.0, y_max = -1.0;  // empty until a finite point appears
    bool any = false;
    for (const auto& s : series)
        for (double v : s)
            if (std::isfinite(v)) {
                if (!any) {
                    y_min = y_max = v;
                    any = true;
                } else {
                    y_min = std::min(y_min, v);
                    y_max = std::max(y_max, v);
                }
            }
    if (!any) throw DataError("chart has no finite data points");
    if (x_max == x_min) x_max = x_min + 1.0;
    if (y_max == y_min) y_max = y_min + 1.0;

    const auto sx = [&](double v) {
        return kLeft + (v - x_min) / (x_max - x_min) * (kRight - kLeft);
    };
    const auto sy = [&](double v) {
        return kBottom - (v - y_min) / (y_max - y_min) * (kBottom - kTop);
    };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
        << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' '
        << kHeight << "\">\n";
    svg << "<rect width=\"" << kWidth << "\" height=\"" << kHeight
        << "\" fill=\"white\"/>\n";
    svg << "<text x=\"" << (kWidth / 2)
        << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"16\">"
        << title << "</text>\n";

    // Axes and 5 ticks per axis.
    svg << "<line x1=\"" << kLeft << "\" y1=\"" << kBottom << "\" x2=\"" << kRight
        << "\" y2=\"" << kBottom << "\" stroke=\"black\"/>\n";
    svg << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft
        << "\" y2=\"" << kBottom << "\" stroke=\"black\"/>\n";
    for (int i = 0; i <= 4; ++i) {
        const double fx = x_min + (x_max - x_min) * i / 4.0;
        const double fy = y_min + (y_max - y_min) * i / 4.0;
        svg << "<text x=\"" << format_number(sx(fx)) << "\" y=\"" << (kBottom + 18)
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
               "font-size=\"11\">"
            << format_number(fx) << "</text>\n";
        svg << "<text x=\"" << (kLeft - 8) << "\" y=\"" << format_number(sy(fy) + 4)
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" "
               "font-size=\"11\">"
            << format_number(fy) << "</text>\n";
    }
    svg << "<text x=\"" << (kWidth / 2) << "\" y=\"" << (kHeight - 8)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"12\">"
        << x_name << "</text>\n";

    for (std::size_t s = 0; s < series.size(); ++s) {
        const char* color = kPalette[s % kPaletteSize];
        std::ostringstream points;
        bool open = false;
        const auto flush = [&]() {
            if (open) {
                svg << "<polyline fill=\"none\" stroke=\"" << color
                    << "\" stroke-width=\"1.5\" points=\"" << points.str()
                    << "\"/>\n";
                points.str("");
                open = false;
            }
        };
        for (std::size_t i = 0; i < x.size(); ++i) {
            const double v = series[s][i];
            if (!std::isfinite(v)) {
                flush();
                continue;
            }
            if (open) points << ' ';
            points << format_number(sx(x[i])) << ',' << format_number(sy(v));
            open = true;
        }
        flush();
        svg << "<text x=\"" << (kRight - 160) << "\" y=\""
            << (kTop + 16 + 16 * static_cast<double>(s)) << "\" fill=\"" << color
            << "\" font-family=\"sans-serif\" font-size=\"12\">" << series_names[s]
            << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace stumpbounds
