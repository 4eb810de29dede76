#pragma once

// Functional forms of the model economy. Every function is pure.

namespace macroatlas {

// Y = A K^alpha L^(1-alpha)
double production(double A, double K, double L, double alpha);
double mpl(double A, double K, double L, double alpha);
double mpk(double A, double K, double L, double alpha);
// d(MPL)/dL and d(MPK)/dK, both negative.
double mplSlope(double A, double K, double L, double alpha);
double mpkSlope(double A, double K, double L, double alpha);
// Per-worker output f(k) = A k^alpha.
double intensiveOutput(double A, double k, double alpha);

// C = c0 + c1 (Y - T) - e r
double consumption(double Y, double r, double c0, double c1, double T, double e);
// I = I0 - d r; may go negative.
double investmentDemand(double r, double I0, double d);
// Planned expenditure E = C + I + G.
double plannedExpenditure(double Y, double r, double c0, double c1, double T, double e, double I0,
                          double d, double G);

// Liquidity function L(Y, i) = kY Y exp(-b i); money demand MD = P L(Y, i).
double liquidity(double Y, double i, double kY, double b);
double moneyDemand(double P, double Y, double i, double kY, double b);

// UC = (r + delta) pK, with r as a fraction.
double userCost(double r, double delta, double pK);
// Capital stock at which MPK equals the real rental uc / pK.
double capitalDemand(double uc, double L, double A, double alpha, double pK);

double nominalWage(double w, double P);

// Percent points (IS-LM blocks) <-> fractions (delta, n, s, UC).
constexpr double percentToFraction(double pct) { return pct / 100.0; }
constexpr double fractionToPercent(double frac) { return frac * 100.0; }

}  // namespace macroatlas
