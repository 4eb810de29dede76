#include "macroatlas/equilibrium.hpp"

#include "macroatlas/demand_side.hpp"
#include "macroatlas/econ_core.hpp"
#include "macroatlas/error.hpp"
#include "macroatlas/numerics.hpp"
#include "macroatlas/supply_side.hpp"

namespace macroatlas {

namespace {

// Fields shared by the short- and long-run states once Y, P, i, r are known.
EconState assemble(const Params& p, const LaborMarket& labor, double Ybar, double Y, double P, double PE,
                   double i, double r) {
    EconState s;
    s.Y = Y;
    s.P = P;
    s.PE = PE;
    s.i = i;
    s.r = r;
    s.C = consumption(Y, r, p.c0, p.c1, p.T, p.e);
    s.Ipriv = investmentDemand(r, p.I0, p.d);
    s.Snat = Y - s.C - p.G;
    s.w = labor.wage;
    s.L = labor.labor;
    s.leisure = p.H - labor.labor / p.Nh;
    s.Ybar = Ybar;
    s.Uu = okunU(Y, Ybar, p.Ubar, p.omega);
    s.pi = phillips(s.Uu, p.piE, p.beta, p.Ubar);
    return s;
}

}  // namespace

double okunU(double Y, double Ybar, double Ubar, double omega) {
    if (!(Ybar > 0)) throw ValidationError("Ybar", "Ybar must be positive");
    return Ubar - omega * (Y - Ybar) / Ybar;
}

double phillips(double Uu, double piE, double beta, double Ubar) { return piE - beta * (Uu - Ubar); }

Curve srpcCurve(std::span<const double> Ugrid, const Params& p) {
    std::vector<Point> pts;
    for (double U : Ugrid) pts.push_back({U, phillips(U, p.piE, p.beta, p.Ubar)});
    return makeCurve("SRPC", "U", "π", std::move(pts));
}

Curve lrpcCurve(double piLo, double piHi, const Params& p) {
    return makeVertical("LRPC", "U", "π", p.Ubar, piLo, piHi);
}

EconState shortRunGE(const Params& p) {
    validate(p);
    const auto labor = laborMarketEq(p);
    const double Ybar = production(p.A, p.K, labor.labor, p.alpha);

    auto gap = [&](double P) { return adOutput(P, p) - srasOutput(P, p.PE, p.gamma, Ybar); };
    const auto bracket = expandBracket(gap, Bracket{0.5 * p.PE, 2.0 * p.PE, 1e-15, 1e-10, 400}, 0.0);
    const double P = findRoot1D(gap, bracket).root;

    const auto islm = islmSolve(P, p);
    return assemble(p, labor, Ybar, islm.Y, P, p.PE, islm.i, islm.r);
}

EconState longRunGE(const Params& p) {
    validate(p);
    const auto labor = laborMarketEq(p);
    const double Ybar = production(p.A, p.K, labor.labor, p.alpha);
    const double r = isRate(Ybar, p);
    const double i = nominalRate(r, p);
    const double P = p.Ms / liquidity(Ybar, i, p.kY, p.b);
    return assemble(p, labor, Ybar, Ybar, P, P, i, r);
}

MarketResiduals residuals(const EconState& s, const Params& p) {
    MarketResiduals out;
    out.goods = s.Y - s.C - s.Ipriv - p.G;
    out.money = p.Ms - moneyDemand(s.P, s.Y, s.i, p.kY, p.b);
    out.supply = s.Y - srasOutput(s.P, s.PE, p.gamma, s.Ybar);
    out.labor = laborSupply(s.w, p) - laborDemand(s.w, p.A, p.K, p.alpha);
    return out;
}

}  // namespace macroatlas
