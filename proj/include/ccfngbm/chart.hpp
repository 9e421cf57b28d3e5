#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdio>
#include <string>
#include <vector>

#include "ccfngbm/report.hpp"

namespace ccfngbm {

/// Actual and predicted values share the period axis starting at start_period;
/// forecast values continue after the last actual period.
struct ChartInput {
    std::string title;
    std::string unit;
    int start_period = 0;
    std::vector<double> actual;
    std::vector<double> predicted;
    std::vector<double> forecast;
};

namespace detail {

inline std::string num(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

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

}  // namespace detail

/// Standalone SVG 1.1 line chart. Output depends only on the input.
inline std::string render_svg(const ChartInput& in) {
    using detail::num;
    constexpr double width = 800, height = 480;
    constexpr double left = 80, right = 170, top = 50, bottom = 60;
    const double plot_w = width - left - right;
    const double plot_h = height - top - bottom;

    const std::size_t n_periods = std::max(in.actual.size(), in.predicted.size()) + in.forecast.size();
    if (n_periods == 0) fail(ErrorCategory::Config, "chart needs at least one value");

    std::vector<double> all;
    all.insert(all.end(), in.actual.begin(), in.actual.end());
    all.insert(all.end(), in.predicted.begin(), in.predicted.end());
    all.insert(all.end(), in.forecast.begin(), in.forecast.end());
    double lo = *std::min_element(all.begin(), all.end());
    double hi = *std::max_element(all.begin(), all.end());
    if (hi == lo) {
        lo -= 1.0;
        hi += 1.0;
    }
    const double pad = 0.05 * (hi - lo);
    lo -= pad;
    hi += pad;

    auto px = [&](std::size_t i) {
        return n_periods == 1 ? left + plot_w / 2
                              : left + plot_w * static_cast<double>(i) / static_cast<double>(n_periods - 1);
    };
    auto py = [&](double v) { return top + plot_h * (hi - v) / (hi - lo); };

    auto polyline = [&](std::size_t offset, const std::vector<double>& v, const std::string& style) {
        std::string pts;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (!pts.empty()) pts += ' ';
            pts += num(px(offset + i)) + ',' + num(py(v[i]));
        }
        return "  <polyline fill=\"none\" " + style + " points=\"" + pts + "\"/>\n";
    };

    std::string s;
    s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(width) +
         "\" height=\"" + num(height) + "\" viewBox=\"0 0 " + num(width) + ' ' + num(height) + "\">\n";
    s += "  <rect x=\"0\" y=\"0\" width=\"" + num(width) + "\" height=\"" + num(height) +
         "\" fill=\"white\"/>\n";
    s += "  <text x=\"" + num(width / 2) + "\" y=\"28\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">" +
         detail::xml_escape(in.title) + "</text>\n";

    // Axes and ticks.
    s += "  <line x1=\"" + num(left) + "\" y1=\"" + num(top + plot_h) + "\" x2=\"" + num(left + plot_w) +
         "\" y2=\"" + num(top + plot_h) + "\" stroke=\"black\"/>\n";
    s += "  <line x1=\"" + num(left) + "\" y1=\"" + num(top) + "\" x2=\"" + num(left) + "\" y2=\"" +
         num(top + plot_h) + "\" stroke=\"black\"/>\n";
    for (int t = 0; t <= 5; ++t) {
        const double v = lo + (hi - lo) * t / 5.0;
        s += "  <line x1=\"" + num(left - 4) + "\" y1=\"" + num(py(v)) + "\" x2=\"" + num(left + plot_w) +
             "\" y2=\"" + num(py(v)) + "\" stroke=\"#dddddd\"/>\n";
        s += "  <text x=\"" + num(left - 8) + "\" y=\"" + num(py(v) + 4) +
             "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" + num(v) + "</text>\n";
    }
    const std::size_t stride = std::max<std::size_t>(1, (n_periods + 11) / 12);
    for (std::size_t i = 0; i < n_periods; i += stride) {
        s += "  <text x=\"" + num(px(i)) + "\" y=\"" + num(top + plot_h + 18) +
             "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" +
             std::to_string(in.start_period + static_cast<int>(i)) + "</text>\n";
    }
    if (!in.unit.empty()) {
        s += "  <text x=\"16\" y=\"" + num(top + plot_h / 2) + "\" transform=\"rotate(-90 16 " +
             num(top + plot_h / 2) + ")\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" +
             detail::xml_escape(in.unit) + "</text>\n";
    }

    // Series.
    const std::string actual_style = "stroke=\"#222222\" stroke-width=\"2\"";
    const std::string fit_style = "stroke=\"#1f77b4\" stroke-width=\"2\"";
    const std::string fc_style = "stroke=\"#d62728\" stroke-width=\"2\" stroke-dasharray=\"6,4\"";
    if (!in.actual.empty()) {
        s += polyline(0, in.actual, actual_style);
        for (std::size_t i = 0; i < in.actual.size(); ++i) {
            s += "  <circle cx=\"" + num(px(i)) + "\" cy=\"" + num(py(in.actual[i])) +
                 "\" r=\"3\" fill=\"#222222\"/>\n";
        }
    }
    if (!in.predicted.empty()) s += polyline(0, in.predicted, fit_style);
    if (!in.forecast.empty()) {
        // Join the forecast to the last predicted point.
        std::vector<double> seg;
        std::size_t offset = in.predicted.size();
        if (!in.predicted.empty()) {
            seg.push_back(in.predicted.back());
            --offset;
        }
        seg.insert(seg.end(), in.forecast.begin(), in.forecast.end());
        s += polyline(offset, seg, fc_style);
    }

    // Legend.
    struct Entry {
        const char* name;
        const std::string* style;
    };
    std::vector<Entry> legend{{"actual", &actual_style}, {"fitted", &fit_style}};
    if (!in.forecast.empty()) legend.push_back({"forecast", &fc_style});
    double ly = top + 10;
    const double lx = left + plot_w + 20;
    for (const auto& e : legend) {
        s += "  <line x1=\"" + num(lx) + "\" y1=\"" + num(ly) + "\" x2=\"" + num(lx + 30) + "\" y2=\"" +
             num(ly) + "\" " + *e.style + "/>\n";
        s += "  <text x=\"" + num(lx + 38) + "\" y=\"" + num(ly + 4) +
             "\" font-family=\"sans-serif\" font-size=\"12\">" + e.name + "</text>\n";
        ly += 22;
    }
    s += "</svg>\n";
    return s;
}

inline void emit_chart(const ChartInput& in, const std::string& path) {
    write_file(path, render_svg(in));
}

}  // namespace ccfngbm
