#pragma once

#include <algorithm>
#include <cstdio>
#include <string>
#include <vector>

#include "caper/diagram.hpp"

namespace caper {

namespace detail {

inline double to_double(const Extended& v) {
    return numerator(v.value()).convert_to<double>() / denominator(v.value()).convert_to<double>();
}

inline std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

inline const char* degree_color(int degree) {
    static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};
    return palette[degree % 6];
}

struct PlotRange {
    double lo = 0.0, hi = 1.0;
};

inline PlotRange finite_range(const PersistenceDiagram& dgm) {
    PlotRange r;
    bool any = false;
    auto feed = [&](const Extended& v) {
        if (!v.finite()) return;
        double d = to_double(v);
        if (!any) {
            r.lo = r.hi = d;
            any = true;
        } else {
            r.lo = std::min(r.lo, d);
            r.hi = std::max(r.hi, d);
        }
    };
    for (const auto& pt : dgm.points) {
        feed(pt.birth);
        feed(pt.death);
    }
    if (!any) return {0.0, 1.0};
    if (r.lo == r.hi) {
        r.lo -= 1.0;
        r.hi += 1.0;
    }
    double pad = (r.hi - r.lo) * 0.05;
    return {r.lo - pad, r.hi + pad};
}

inline std::string svg_open(int width, int height) {
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) + "\" height=\"" +
           std::to_string(height) + "\" viewBox=\"0 0 " + std::to_string(width) + " " +
           std::to_string(height) +
           "\">\n"
           "<defs><marker id=\"arrow\" markerWidth=\"8\" markerHeight=\"8\" refX=\"6\" refY=\"3\" "
           "orient=\"auto\"><path d=\"M0,0 L6,3 L0,6 z\" fill=\"#444444\"/></marker></defs>\n"
           "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

}  // namespace detail

/// Persistence diagram plot: points above an explicit diagonal, one color
/// per degree, infinite deaths pinned to the frame top with an arrowhead.
inline std::string plot_diagram_svg(const PersistenceDiagram& dgm) {
    using namespace detail;
    const int width = 480, height = 480, margin = 48;
    PlotRange r = finite_range(dgm);
    auto x = [&](double v) { return margin + (v - r.lo) / (r.hi - r.lo) * (width - 2 * margin); };
    auto y = [&](double v) { return height - margin - (v - r.lo) / (r.hi - r.lo) * (height - 2 * margin); };

    std::string svg = svg_open(width, height);
    svg += "<line x1=\"" + num(x(r.lo)) + "\" y1=\"" + num(y(r.lo)) + "\" x2=\"" + num(x(r.hi)) +
           "\" y2=\"" + num(y(r.hi)) + "\" stroke=\"#888888\" stroke-dasharray=\"4 3\"/>\n";
    svg += "<rect x=\"" + num(static_cast<double>(margin)) + "\" y=\"" + num(static_cast<double>(margin)) +
           "\" width=\"" + num(static_cast<double>(width - 2 * margin)) + "\" height=\"" +
           num(static_cast<double>(height - 2 * margin)) + "\" fill=\"none\" stroke=\"#444444\"/>\n";
    svg += "<text x=\"" + num(static_cast<double>(margin)) + "\" y=\"" + num(height - margin / 4.0) +
           "\" font-size=\"12\">" + num(r.lo) + "</text>\n";
    svg += "<text x=\"" + num(width - margin * 1.5) + "\" y=\"" + num(height - margin / 4.0) +
           "\" font-size=\"12\">" + num(r.hi) + "</text>\n";
    PersistenceDiagram sorted = dgm;
    sorted.sort();
    for (const auto& pt : sorted.points) {
        double bx = x(pt.birth.finite() ? to_double(pt.birth) : r.lo);
        if (pt.death.is_pos_inf()) {
            svg += "<line x1=\"" + num(bx) + "\" y1=\"" + num(y(to_double(pt.birth))) + "\" x2=\"" + num(bx) +
                   "\" y2=\"" + num(static_cast<double>(margin)) + "\" stroke=\"" + degree_color(pt.degree) +
                   "\" marker-end=\"url(#arrow)\"/>\n";
        } else {
            svg += "<circle cx=\"" + num(bx) + "\" cy=\"" + num(y(to_double(pt.death))) +
                   "\" r=\"3\" fill=\"" + degree_color(pt.degree) + "\"/>\n";
        }
    }
    svg += "</svg>\n";
    return svg;
}

/// Barcode plot: bars stacked by (degree, birth), infinite bars drawn to
/// the frame edge with an arrowhead.
inline std::string plot_barcode_svg(const PersistenceDiagram& dgm) {
    using namespace detail;
    const int width = 640, margin = 48, bar_gap = 14;
    PersistenceDiagram sorted = dgm;
    sorted.sort();
    const int height = std::max(160, 2 * margin + bar_gap * static_cast<int>(sorted.points.size()));
    PlotRange r = finite_range(dgm);
    auto x = [&](double v) { return margin + (v - r.lo) / (r.hi - r.lo) * (width - 2 * margin); };

    std::string svg = svg_open(width, height);
    svg += "<line x1=\"" + num(static_cast<double>(margin)) + "\" y1=\"" + num(static_cast<double>(height - margin)) +
           "\" x2=\"" + num(static_cast<double>(width - margin)) + "\" y2=\"" +
           num(static_cast<double>(height - margin)) + "\" stroke=\"#444444\"/>\n";
    svg += "<text x=\"" + num(static_cast<double>(margin)) + "\" y=\"" + num(height - margin / 2.0) +
           "\" font-size=\"12\">" + num(r.lo) + "</text>\n";
    svg += "<text x=\"" + num(static_cast<double>(width - 2 * margin)) + "\" y=\"" + num(height - margin / 2.0) +
           "\" font-size=\"12\">" + num(r.hi) + "</text>\n";
    int slot = 0;
    for (const auto& pt : sorted.points) {
        double yy = margin + slot * bar_gap;
        double bx = x(pt.birth.finite() ? to_double(pt.birth) : r.lo);
        std::string color = degree_color(pt.degree);
        if (pt.death.is_pos_inf()) {
            svg += "<line x1=\"" + num(bx) + "\" y1=\"" + num(yy) + "\" x2=\"" +
                   num(static_cast<double>(width - margin)) + "\" y2=\"" + num(yy) + "\" stroke=\"" + color +
                   "\" stroke-width=\"4\" marker-end=\"url(#arrow)\"/>\n";
        } else {
            svg += "<line x1=\"" + num(bx) + "\" y1=\"" + num(yy) + "\" x2=\"" + num(x(to_double(pt.death))) +
                   "\" y2=\"" + num(yy) + "\" stroke=\"" + color + "\" stroke-width=\"4\"/>\n";
        }
        ++slot;
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace caper
