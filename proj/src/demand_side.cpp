#include "macroatlas/demand_side.hpp"

#include <cmath>
#include <limits>

#include "macroatlas/econ_core.hpp"
#include "macroatlas/error.hpp"
#include "macroatlas/numerics.hpp"

namespace macroatlas {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void requireKeynesian(const Params& p) {
    if (!(p.c1 < 1)) throw ValidationError("c1", "goods-market multiplier requires c1 < 1");
}

}  // namespace

double moneyMarketEq(double Ms, double P, double Y, double kY, double b) {
    if (!(Ms > 0)) throw ValidationError("Ms", "Ms must be positive");
    if (!(P > 0)) throw ValidationError("P", "P must be positive");
    if (!(Y > 0)) throw ValidationError("Y", "Y must be positive");
    return std::log(P * kY * Y / Ms) / b;
}

double lmRate(double Y, double P, const Params& p) { return moneyMarketEq(p.Ms, P, Y, p.kY, p.b); }

Curve lmCurve(double P, std::span<const double> Ygrid, const Params& p) {
    std::vector<Point> pts;
    for (double Y : Ygrid)
        if (Y > 0) pts.push_back({Y, lmRate(Y, P, p)});
    return makeCurve("LM", "Y", "i", std::move(pts));
}

double nationalSaving(double Y, double r, const Params& p) {
    return Y - consumption(Y, r, p.c0, p.c1, p.T, p.e) - p.G;
}

double keynesianCrossSolve(double r, const Params& p) {
    requireKeynesian(p);
    auto gap = [&](double Y) { return plannedExpenditure(Y, r, p.c0, p.c1, p.T, p.e, p.I0, p.d, p.G) - Y; };
    const auto bracket = expandBracket(gap, Bracket{0.0, 1000.0, 1e-12, 1e-10, 200}, kNegInf);
    return findRoot1D(gap, bracket).root;
}

double classicalCrossSolve(double Y, const Params& p) {
    if (!(p.e + p.d > 0))
        throw SolverError(SolverError::Kind::NoCrossing, "saving and investment schedules are parallel (e + d = 0)");
    auto excessSaving = [&](double r) { return nationalSaving(Y, r, p) - investmentDemand(r, p.I0, p.d); };
    const auto bracket = expandBracket(excessSaving, Bracket{-10.0, 10.0, 1e-14, 1e-10, 200}, kNegInf);
    return findRoot1D(excessSaving, bracket).root;
}

double isSlope(const Params& p) {
    requireKeynesian(p);
    return -(p.e + p.d) / (1.0 - p.c1);
}

double isOutput(double r, const Params& p) {
    requireKeynesian(p);
    return (p.c0 - p.c1 * p.T + p.I0 + p.G - (p.e + p.d) * r) / (1.0 - p.c1);
}

double isRate(double Y, const Params& p) {
    requireKeynesian(p);
    if (!(p.e + p.d > 0)) throw ValidationError("d", "IS inversion requires e + d > 0");
    return (p.c0 - p.c1 * p.T + p.I0 + p.G - (1.0 - p.c1) * Y) / (p.e + p.d);
}

Curve isCurve(std::span<const double> rGrid, const Params& p) {
    std::vector<Point> pts;
    for (double r : rGrid) pts.push_back({isOutput(r, p), r});
    return makeCurve("IS", "Y", "r", std::move(pts));
}

double realRate(double i, const Params& p) { return i - fractionToPercent(p.piE); }
double nominalRate(double r, const Params& p) { return r + fractionToPercent(p.piE); }

IslmSolution islmSolve(double P, const Params& p) {
    if (!(P > 0)) throw ValidationError("P", "P must be positive");
    requireKeynesian(p);

    const double nan = std::numeric_limits<double>::quiet_NaN();
    auto residuals = [&](double Y, double i) -> std::pair<double, double> {
        if (!(Y > 0)) return {nan, nan};
        return {Y - isOutput(realRate(i, p), p), i - lmRate(Y, P, p)};
    };

    const double Y0 = std::max(isOutput(realRate(0.0, p), p), 1.0);
    const double Ycap = 1e3 * std::max(std::abs(isOutput(0.0, p)), 1.0);
    Solve2DOptions opts;
    opts.fallback = Box{1e-8, Ycap, lmRate(1e-8, P, p) - 1.0, lmRate(Ycap, P, p) + 1.0};

    const auto rep = solve2D(residuals, {Y0, lmRate(Y0, P, p)}, opts);
    double Y = rep.root.first;

    // Polish along the LM curve so the money market clears to rounding.
    auto onLm = [&](double y) { return y - isOutput(realRate(lmRate(y, P, p), p), p); };
    for (int k = 0; k < 8; ++k) {
        const double g = onLm(Y);
        const double h = 1e-6 * std::max(std::abs(Y), 1.0);
        const double slope = (onLm(Y + h) - onLm(Y - h)) / (2 * h);
        if (!(std::abs(slope) > 0) || !std::isfinite(slope)) break;
        const double next = Y - g / slope;
        if (!(next > 0) || !(std::abs(onLm(next)) < std::abs(g))) break;
        Y = next;
    }
    const double i = lmRate(Y, P, p);
    return {Y, i, realRate(i, p)};
}

double adOutput(double P, const Params& p) { return islmSolve(P, p).Y; }

Curve adCurve(std::span<const double> Pgrid, const Params& p) {
    std::vector<Point> pts;
    for (double P : Pgrid)
        if (P > 0) pts.push_back({adOutput(P, p), P});
    return makeCurve("AD", "Y", "P", std::move(pts));
}

}  // namespace macroatlas
