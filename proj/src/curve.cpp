#include "macroatlas/curve.hpp"

#include <algorithm>
#include <cmath>

#include "macroatlas/error.hpp"

namespace macroatlas {

std::vector<double> linspace(double lo, double hi, std::size_t count) {
    if (count < 2) throw ValidationError("count", "linspace needs at least two points");
    std::vector<double> out(count);
    const double step = (hi - lo) / static_cast<double>(count - 1);
    for (std::size_t k = 0; k < count; ++k) out[k] = lo + step * static_cast<double>(k);
    out.back() = hi;
    return out;
}

Curve makeCurve(std::string name, std::string xLabel, std::string yLabel, std::vector<Point> points) {
    std::erase_if(points, [](const Point& p) { return !std::isfinite(p.x) || !std::isfinite(p.y); });
    std::stable_sort(points.begin(), points.end(), [](const Point& a, const Point& b) { return a.x < b.x; });
    points.erase(std::unique(points.begin(), points.end(), [](const Point& a, const Point& b) { return a.x == b.x; }),
                 points.end());
    if (points.size() < 2) throw ValidationError(name, "curve '" + name + "' has fewer than two distinct points");
    return Curve{std::move(name), std::move(xLabel), std::move(yLabel), std::move(points), {}, false};
}

Curve makeVertical(std::string name, std::string xLabel, std::string yLabel, double x, double yLo, double yHi,
                   std::size_t count) {
    if (!(yLo < yHi)) throw ValidationError(name, "vertical curve needs yLo < yHi");
    Curve c{std::move(name), std::move(xLabel), std::move(yLabel), {}, {}, true};
    for (double y : linspace(yLo, yHi, count)) c.points.push_back({x, y});
    return c;
}

bool wellFormed(const Curve& c) {
    if (c.points.size() < 2) return false;
    for (std::size_t k = 1; k < c.points.size(); ++k) {
        const auto& a = c.points[k - 1];
        const auto& b = c.points[k];
        if (c.vertical ? !(a.x == b.x && a.y < b.y) : !(a.x < b.x)) return false;
    }
    return true;
}

nlohmann::json toJson(const Curve& c) {
    nlohmann::json pts = nlohmann::json::array();
    for (const auto& p : c.points) pts.push_back({{"x", p.x}, {"y", p.y}});
    nlohmann::json markers = nlohmann::json::array();
    for (const auto& m : c.markers) markers.push_back({{"name", m.name}, {"x", m.x}, {"y", m.y}});
    return {{"name", c.name},       {"xLabel", c.xLabel},   {"yLabel", c.yLabel},
            {"points", std::move(pts)}, {"markers", std::move(markers)}, {"vertical", c.vertical}};
}

Curve curveFromJson(const nlohmann::json& j) {
    Curve c;
    c.name = j.at("name").get<std::string>();
    c.xLabel = j.at("xLabel").get<std::string>();
    c.yLabel = j.at("yLabel").get<std::string>();
    c.vertical = j.value("vertical", false);
    for (const auto& p : j.at("points")) c.points.push_back({p.at("x").get<double>(), p.at("y").get<double>()});
    for (const auto& m : j.value("markers", nlohmann::json::array()))
        c.markers.push_back({m.at("name").get<std::string>(), m.at("x").get<double>(), m.at("y").get<double>()});
    return c;
}

}  // namespace macroatlas
