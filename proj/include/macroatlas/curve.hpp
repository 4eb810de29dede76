#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace macroatlas {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

struct NamedPoint {
    std::string name;
    double x = 0.0;
    double y = 0.0;
};

// A sampled series behind one diagram panel. Points are strictly increasing in
// x, except for vertical curves (LRAS, LRPC, MS) whose x is constant and whose
// y is strictly increasing.
struct Curve {
    std::string name;
    std::string xLabel;
    std::string yLabel;
    std::vector<Point> points;
    std::vector<NamedPoint> markers;
    bool vertical = false;
};

std::vector<double> linspace(double lo, double hi, std::size_t count = 101);

// Sorts by x and drops samples that repeat an x value. Throws ValidationError
// if fewer than two distinct points remain.
Curve makeCurve(std::string name, std::string xLabel, std::string yLabel, std::vector<Point> points);
Curve makeVertical(std::string name, std::string xLabel, std::string yLabel, double x, double yLo, double yHi,
                   std::size_t count = 101);

bool wellFormed(const Curve& c);

nlohmann::json toJson(const Curve& c);
Curve curveFromJson(const nlohmann::json& j);

}  // namespace macroatlas
