#include "macroatlas/svg.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace macroatlas {

namespace {

constexpr std::array<const char*, 6> kPalette{"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string tick(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

std::string escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out.push_back(c);
        }
    }
    return out;
}

bool isBaseline(const Curve& c) { return c.name.find("(baseline)") != std::string::npos; }

struct Bounds {
    double xlo = std::numeric_limits<double>::infinity();
    double xhi = -std::numeric_limits<double>::infinity();
    double ylo = std::numeric_limits<double>::infinity();
    double yhi = -std::numeric_limits<double>::infinity();

    void add(double x, double y) {
        xlo = std::min(xlo, x);
        xhi = std::max(xhi, x);
        ylo = std::min(ylo, y);
        yhi = std::max(yhi, y);
    }

    void pad() {
        auto widen = [](double& lo, double& hi) {
            if (hi - lo <= 0) {
                const double d = std::max(std::abs(lo) * 0.1, 1.0);
                lo -= d;
                hi += d;
            }
            const double m = 0.05 * (hi - lo);
            lo -= m;
            hi += m;
        };
        widen(xlo, xhi);
        widen(ylo, yhi);
    }
};

}  // namespace

std::string renderSvg(const PanelPayload& panel, const SvgStyle& style) {
    Bounds b;
    for (const auto& c : panel.curves) {
        for (const auto& p : c.points) b.add(p.x, p.y);
        for (const auto& m : c.markers) b.add(m.x, m.y);
    }
    if (panel.equilibriumMarker) b.add(panel.equilibriumMarker->x, panel.equilibriumMarker->y);
    b.pad();

    const double left = style.margin, right = style.width - style.margin / 2.0;
    const double top = style.margin / 2.0 + 10, bottom = style.height - style.margin;
    auto sx = [&](double x) { return left + (x - b.xlo) / (b.xhi - b.xlo) * (right - left); };
    auto sy = [&](double y) { return bottom - (y - b.ylo) / (b.yhi - b.ylo) * (bottom - top); };

    std::ostringstream os;
    os << R"(<?xml version="1.0" encoding="UTF-8"?>)" << '\n';
    os << R"(<svg xmlns="http://www.w3.org/2000/svg" width=")" << style.width << R"(" height=")" << style.height
       << R"(" viewBox="0 0 )" << style.width << ' ' << style.height << R"(" font-family="sans-serif">)" << '\n';
    os << R"(<rect width="100%" height="100%" fill="white"/>)" << '\n';
    os << R"(<text x=")" << num(style.width / 2.0) << R"(" y="20" text-anchor="middle" font-size="14">)"
       << panel.nodeId << ". " << escape(panel.name) << "</text>\n";

    // Axes and ticks.
    os << R"(<g class="axes" stroke="black" stroke-width="1">)" << '\n';
    os << R"(<line x1=")" << num(left) << R"(" y1=")" << num(bottom) << R"(" x2=")" << num(right) << R"(" y2=")"
       << num(bottom) << R"("/>)" << '\n';
    os << R"(<line x1=")" << num(left) << R"(" y1=")" << num(top) << R"(" x2=")" << num(left) << R"(" y2=")"
       << num(bottom) << R"("/>)" << '\n';
    os << "</g>\n";
    os << R"(<g class="ticks" font-size="10">)" << '\n';
    for (int k = 0; k <= 4; ++k) {
        const double xv = b.xlo + (b.xhi - b.xlo) * k / 4.0;
        const double yv = b.ylo + (b.yhi - b.ylo) * k / 4.0;
        os << R"(<text x=")" << num(sx(xv)) << R"(" y=")" << num(bottom + 14) << R"(" text-anchor="middle">)"
           << tick(xv) << "</text>\n";
        os << R"(<text x=")" << num(left - 4) << R"(" y=")" << num(sy(yv) + 3) << R"(" text-anchor="end">)"
           << tick(yv) << "</text>\n";
    }
    os << "</g>\n";
    os << R"(<text class="xlabel" x=")" << num((left + right) / 2) << R"(" y=")" << num(style.height - 15.0)
       << R"(" text-anchor="middle" font-size="13">)" << escape(panel.xLabel) << "</text>\n";
    os << R"(<text class="ylabel" x="15" y=")" << num((top + bottom) / 2)
       << R"(" text-anchor="middle" font-size="13" transform="rotate(-90 15 )" << num((top + bottom) / 2) << R"x()">)x"
       << escape(panel.yLabel) << "</text>\n";

    std::size_t colorIndex = 0, baselineIndex = 0;
    for (const auto& c : panel.curves) {
        const bool dashed = isBaseline(c);
        const char* color = dashed ? kPalette[baselineIndex++ % kPalette.size()]
                                   : kPalette[colorIndex++ % kPalette.size()];
        os << R"(<polyline class="curve" data-name=")" << escape(c.name) << R"(" fill="none" stroke=")" << color
           << R"(" stroke-width="2")" << (dashed ? R"( stroke-dasharray="6 4")" : "") << R"( points=")";
        for (std::size_t k = 0; k < c.points.size(); ++k)
            os << (k ? " " : "") << num(sx(c.points[k].x)) << ',' << num(sy(c.points[k].y));
        os << R"("/>)" << '\n';
        const auto& last = c.points.back();
        os << R"(<text x=")" << num(sx(last.x) + 4) << R"(" y=")" << num(sy(last.y) - 4) << R"(" font-size="11" fill=")"
           << color << R"(">)" << escape(c.name) << "</text>\n";
        for (const auto& m : c.markers) {
            os << R"(<circle class="marker" data-name=")" << escape(m.name) << R"(" cx=")" << num(sx(m.x))
               << R"(" cy=")" << num(sy(m.y)) << R"(" r="4" fill="black"/>)" << '\n';
            os << R"(<text x=")" << num(sx(m.x) + 6) << R"(" y=")" << num(sy(m.y) + 14) << R"(" font-size="10">)"
               << escape(m.name) << " (" << tick(m.x) << ", " << tick(m.y) << ")</text>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

std::string normalizeSvg(const std::string& svg) {
    std::string out;
    bool space = false;
    for (char c : svg) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            space = true;
            continue;
        }
        if (space && !out.empty()) out.push_back(' ');
        space = false;
        out.push_back(c);
    }
    return out;
}

}  // namespace macroatlas
