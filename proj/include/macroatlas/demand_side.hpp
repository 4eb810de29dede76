#pragma once

#include <span>

#include "macroatlas/curve.hpp"
#include "macroatlas/params.hpp"

namespace macroatlas {

// Money market: i* solving P kY Y exp(-b i) = Ms, in percent points.
double moneyMarketEq(double Ms, double P, double Y, double kY, double b);
double lmRate(double Y, double P, const Params& p);
Curve lmCurve(double P, std::span<const double> Ygrid, const Params& p);

// National saving Y - C - G.
double nationalSaving(double Y, double r, const Params& p);

// Goods-market equilibrium seen from the expenditure side: root of E(Y) = Y at fixed r.
double keynesianCrossSolve(double r, const Params& p);
// The same locus from the saving side: r at which national saving meets investment.
double classicalCrossSolve(double Y, const Params& p);

// IS in closed form: Y(r) = (c0 - c1 T + I0 + G - (e + d) r) / (1 - c1).
double isOutput(double r, const Params& p);
double isSlope(const Params& p);
// Inverse of isOutput.
double isRate(double Y, const Params& p);
Curve isCurve(std::span<const double> rGrid, const Params& p);

// Fisher link r = i - piE (piE stored as a fraction, rates in percent points).
double realRate(double i, const Params& p);
double nominalRate(double r, const Params& p);

struct IslmSolution {
    double Y = 0.0;
    double i = 0.0;
    double r = 0.0;
};

IslmSolution islmSolve(double P, const Params& p);
double adOutput(double P, const Params& p);
Curve adCurve(std::span<const double> Pgrid, const Params& p);

}  // namespace macroatlas
