#include "macroatlas/supply_side.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "macroatlas/econ_core.hpp"
#include "macroatlas/error.hpp"
#include "macroatlas/numerics.hpp"

namespace macroatlas {

namespace {

void requireWage(double w, const char* name = "w") {
    if (!(w > 0)) throw ValidationError(name, std::string(name) + " must be positive");
}

}  // namespace

double householdUtility(double cons, double leisure, double theta) {
    const double leisureTerm = theta > 0 ? theta * std::log(leisure) : 0.0;
    return std::log(cons) + leisureTerm;
}

HouseholdChoice leisureChoice(double w, double theta, double H, double m) {
    requireWage(w);
    // Interior FOC theta * cons = w * leisure together with the full-income budget.
    const double interior = theta * (m + w * H) / ((1.0 + theta) * w);
    HouseholdChoice hc;
    hc.leisure = std::clamp(interior, 0.0, H);
    hc.labor = H - hc.leisure;
    hc.cons = m + w * hc.labor;
    hc.utility = householdUtility(hc.cons, hc.leisure, theta);
    return hc;
}

SlutskyDecomposition slutsky(double w0, double w1, double theta, double H, double m) {
    requireWage(w0, "w0");
    requireWage(w1, "w1");
    const auto before = leisureChoice(w0, theta, H, m);
    const auto after = leisureChoice(w1, theta, H, m);

    // Expenditure-minimizing leisure at w1 that keeps utility at the w0 level.
    const double compensatedLeisure =
        std::clamp(std::pow(theta * std::exp(before.utility) / w1, 1.0 / (1.0 + theta)), 0.0, H);

    SlutskyDecomposition out;
    out.total = after.labor - before.labor;
    out.substitution = (H - compensatedLeisure) - before.labor;
    out.income = out.total - out.substitution;
    return out;
}

double laborSupply(double w, const Params& p) { return p.Nh * leisureChoice(w, p.theta, p.H, p.m).labor; }

double laborDemand(double w, double A, double K, double alpha) {
    requireWage(w);
    return std::pow((1.0 - alpha) * A * std::pow(K, alpha) / w, 1.0 / alpha);
}

LaborMarket laborMarketEq(const Params& p, double wMax) {
    auto excessDemand = [&](double w) { return laborDemand(w, p.A, p.K, p.alpha) - laborSupply(w, p); };
    if (excessDemand(wMax) > 0)
        throw SolverError(SolverError::Kind::NoCrossing,
                          "labor supply and demand do not cross on (0, " + std::to_string(wMax) + "]");

    // Demand explodes as w -> 0, so halving from wMax finds a sign change.
    double hi = wMax, lo = wMax;
    while (excessDemand(lo) <= 0) {
        hi = lo;
        lo *= 0.5;
        if (lo < 1e-12) throw SolverError(SolverError::Kind::NoCrossing, "labor market has no positive-wage crossing");
    }
    if (lo == hi) hi = 2 * lo;

    const auto rep = findRoot1D(excessDemand, Bracket{lo, hi, 1e-15, 1e-10, 400});
    return {rep.root, laborDemand(rep.root, p.A, p.K, p.alpha), rep.residual};
}

double fullEmploymentOutput(const Params& p) {
    return production(p.A, p.K, laborMarketEq(p).labor, p.alpha);
}

double srasOutput(double P, double PE, double gamma, double Ybar) {
    if (!(P > 0)) throw ValidationError("P", "P must be positive");
    if (!(PE > 0)) throw ValidationError("PE", "PE must be positive");
    return Ybar * std::pow(P / PE, 1.0 / gamma);
}

SolowSolution solowSolve(double s, double n, double delta, double A, double alpha) {
    const double dilution = n + delta;
    if (!(dilution > 0)) throw ValidationError("n", "Solow model requires n + delta > 0");
    if (!(s > 0 && s < 1)) throw ValidationError("s", "Solow model requires 0 < s < 1");
    SolowSolution sol;
    sol.kStar = std::pow(s * A / dilution, 1.0 / (1.0 - alpha));
    sol.kGold = std::pow(alpha * A / dilution, 1.0 / (1.0 - alpha));
    sol.cStar = intensiveOutput(A, sol.kStar, alpha) - dilution * sol.kStar;
    return sol;
}

}  // namespace macroatlas
