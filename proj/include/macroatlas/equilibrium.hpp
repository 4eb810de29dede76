#pragma once

#include <span>

#include "macroatlas/curve.hpp"
#include "macroatlas/params.hpp"

namespace macroatlas {

// Okun-style gap rule Uu = Ubar - omega (Y - Ybar) / Ybar.
double okunU(double Y, double Ybar, double Ubar, double omega);
// Expectations-augmented Phillips curve pi = piE - beta (Uu - Ubar).
double phillips(double Uu, double piE, double beta, double Ubar);

Curve srpcCurve(std::span<const double> Ugrid, const Params& p);
Curve lrpcCurve(double piLo, double piHi, const Params& p);

// AD meets SRAS at the price expectation p.PE.
EconState shortRunGE(const Params& p);
// Y = Ybar; r from the IS inversion, P from the LM inversion; PE = P.
EconState longRunGE(const Params& p);

struct MarketResiduals {
    double goods = 0.0;   // Y - C - I - G
    double money = 0.0;   // Ms - MD
    double supply = 0.0;  // Y - SRAS(P) at the state's PE
    double labor = 0.0;   // LS(w) - LD(w)
};

MarketResiduals residuals(const EconState& s, const Params& p);

}  // namespace macroatlas
