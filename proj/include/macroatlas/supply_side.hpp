#pragma once

#include "macroatlas/params.hpp"

namespace macroatlas {

// Optimal split of the time endowment for U = ln(cons) + theta ln(leisure)
// subject to cons = m + w (H - leisure).
struct HouseholdChoice {
    double leisure = 0.0;
    double labor = 0.0;
    double cons = 0.0;
    double utility = 0.0;
};

// Change in hours worked when the wage moves from w0 to w1, split into the
// Hicksian substitution effect and the income effect.
struct SlutskyDecomposition {
    double total = 0.0;
    double substitution = 0.0;
    double income = 0.0;
};

// Per-worker Solow quantities.
struct SolowSolution {
    double kStar = 0.0;
    double kGold = 0.0;
    double cStar = 0.0;
};

struct LaborMarket {
    double wage = 0.0;
    double labor = 0.0;
    double residual = 0.0;
};

HouseholdChoice leisureChoice(double w, double theta, double H, double m);
double householdUtility(double cons, double leisure, double theta);
SlutskyDecomposition slutsky(double w0, double w1, double theta, double H, double m);

// Aggregate hours supplied by Nh identical households.
double laborSupply(double w, const Params& p);
// Hours at which MPL equals w.
double laborDemand(double w, double A, double K, double alpha);

// Throws SolverError::NoCrossing when supply and demand do not cross on (0, wMax].
LaborMarket laborMarketEq(const Params& p, double wMax = 1000.0);
double fullEmploymentOutput(const Params& p);

// SRAS: P = PE (Y / Ybar)^gamma, solved for Y.
double srasOutput(double P, double PE, double gamma, double Ybar);
constexpr double lrasOutput(double Ybar) { return Ybar; }

SolowSolution solowSolve(double s, double n, double delta, double A, double alpha);
inline SolowSolution solowSolve(const Params& p) { return solowSolve(p.s, p.n, p.delta, p.A, p.alpha); }

}  // namespace macroatlas
