#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace sltrust {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 500.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 780.0;
constexpr double kTop = 50.0;
constexpr double kBottom = 450.0;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

double nice_step(double span) {
    if (span <= 0.0) return 1.0;
    const double raw = span / 5.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    const double frac = raw / mag;
    double step = 10.0;
    if (frac <= 1.0) step = 1.0;
    else if (frac <= 2.0) step = 2.0;
    else if (frac <= 5.0) step = 5.0;
    return step * mag;
}

std::string escape(const std::string& s) {
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

}  // namespace

std::string svg_line_chart(const std::string& title,
                           const std::string& x_label,
                           const std::string& y_label,
                           const std::vector<SvgSeries>& series) {
    double xmin = std::numeric_limits<double>::infinity();
    double xmax = -xmin;
    double ymin = xmin;
    double ymax = -xmin;
    for (const auto& s : series) {
        for (const auto& [x, y] : s.points) {
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
    }
    if (!(xmin <= xmax)) {  // no points at all
        xmin = 0.0;
        xmax = 1.0;
        ymin = 0.0;
        ymax = 1.0;
    }
    if (xmax == xmin) {
        xmin -= 0.5;
        xmax += 0.5;
    }
    if (ymax == ymin) {
        ymin -= 0.5;
        ymax += 0.5;
    }
    const double ypad = 0.05 * (ymax - ymin);
    ymin -= ypad;
    ymax += ypad;

    auto sx = [&](double x) {
        return kLeft + (x - xmin) / (xmax - xmin) * (kRight - kLeft);
    };
    auto sy = [&](double y) {
        return kBottom - (y - ymin) / (ymax - ymin) * (kBottom - kTop);
    };

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(kWidth) +
           "\" height=\"" + fmt(kHeight) + "\" viewBox=\"0 0 " + fmt(kWidth) +
           " " + fmt(kHeight) + "\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out += "<text x=\"" + fmt(kWidth / 2) +
           "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"16\">" +
           escape(title) + "</text>\n";

    // Grid and ticks.
    const double xstep = nice_step(xmax - xmin);
    const double ystep = nice_step(ymax - ymin);
    out += "<g font-family=\"sans-serif\" font-size=\"11\" fill=\"#333\">\n";
    for (double x = std::ceil(xmin / xstep) * xstep; x <= xmax + 1e-12 * xstep;
         x += xstep) {
        const double px = sx(x);
        out += "<line x1=\"" + fmt(px) + "\" y1=\"" + fmt(kTop) + "\" x2=\"" +
               fmt(px) + "\" y2=\"" + fmt(kBottom) +
               "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        out += "<text x=\"" + fmt(px) + "\" y=\"" + fmt(kBottom + 16) +
               "\" text-anchor=\"middle\">" + fmt(x) + "</text>\n";
    }
    for (double y = std::ceil(ymin / ystep) * ystep; y <= ymax + 1e-12 * ystep;
         y += ystep) {
        const double py = sy(y);
        out += "<line x1=\"" + fmt(kLeft) + "\" y1=\"" + fmt(py) + "\" x2=\"" +
               fmt(kRight) + "\" y2=\"" + fmt(py) +
               "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        out += "<text x=\"" + fmt(kLeft - 6) + "\" y=\"" + fmt(py + 4) +
               "\" text-anchor=\"end\">" + fmt(y) + "</text>\n";
    }
    out += "</g>\n";

    // Axes.
    out += "<line x1=\"" + fmt(kLeft) + "\" y1=\"" + fmt(kBottom) + "\" x2=\"" +
           fmt(kRight) + "\" y2=\"" + fmt(kBottom) +
           "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    out += "<line x1=\"" + fmt(kLeft) + "\" y1=\"" + fmt(kTop) + "\" x2=\"" +
           fmt(kLeft) + "\" y2=\"" + fmt(kBottom) +
           "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    out += "<text x=\"" + fmt((kLeft + kRight) / 2) + "\" y=\"" +
           fmt(kHeight - 10) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"13\">" +
           escape(x_label) + "</text>\n";
    out += "<text x=\"18\" y=\"" + fmt((kTop + kBottom) / 2) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"13\" transform=\"rotate(-90 18 " +
           fmt((kTop + kBottom) / 2) + ")\">" +
           escape(y_label) + "</text>\n";

    // Series.
    for (const auto& s : series) {
        if (s.points.empty()) continue;
        out += "<polyline fill=\"none\" stroke=\"" + s.color +
               "\" stroke-width=\"2\" points=\"";
        for (const auto& [x, y] : s.points) {
            out += fmt(sx(x)) + "," + fmt(sy(y)) + " ";
        }
        out += "\"/>\n";
    }

    // Legend.
    double ly = kTop + 8;
    for (const auto& s : series) {
        out += "<line x1=\"" + fmt(kRight - 150) + "\" y1=\"" + fmt(ly) +
               "\" x2=\"" + fmt(kRight - 120) + "\" y2=\"" + fmt(ly) +
               "\" stroke=\"" + s.color + "\" stroke-width=\"2\"/>\n";
        out += "<text x=\"" + fmt(kRight - 114) + "\" y=\"" + fmt(ly + 4) +
               "\" font-family=\"sans-serif\" font-size=\"12\">" +
               escape(s.label) + "</text>\n";
        ly += 18;
    }
    out += "</svg>\n";
    return out;
}

}  // namespace sltrust
