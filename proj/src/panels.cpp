#include "macroatlas/panels.hpp"

#include <algorithm>
#include <cmath>

#include "macroatlas/big_picture.hpp"
#include "macroatlas/demand_side.hpp"
#include "macroatlas/econ_core.hpp"
#include "macroatlas/equilibrium.hpp"
#include "macroatlas/error.hpp"
#include "macroatlas/supply_side.hpp"
#include "macroatlas/symbols.hpp"

namespace macroatlas {

namespace {

constexpr std::size_t kSamples = 101;

const std::string& lbl(std::string_view key) { return SymbolRegistry::standard().label(key); }

std::vector<double> grid(std::optional<double> lo, std::optional<double> hi, double defLo, double defHi) {
    const double a = lo.value_or(defLo), b = hi.value_or(defHi);
    if (!(a < b)) throw ValidationError("range", "panel range requires min < max");
    return linspace(a, b, kSamples);
}

// Symmetric window around a coordinate that may sit near zero (interest rates).
std::pair<double, double> window(double center, double minHalfWidth = 5.0) {
    const double half = std::max(3.0 * std::abs(center), minHalfWidth);
    return {center - half, center + half};
}

double rel(double lhs, double rhs) { return std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)); }

// Prices below the short-run equilibrium by up to a factor 10 and above by 3.
std::vector<double> priceGrid(const PanelRange& range, double P) {
    return grid(range.yMin, range.yMax, P / 10.0, 3.0 * P);
}

double userCostAt(const Params& p, const EconState& s) {
    const double uc = userCost(percentToFraction(s.r), p.delta, p.pK);
    if (!(uc > 0)) throw ValidationError("r", "user cost of capital is not positive at the current real rate");
    return uc;
}

std::vector<double> rateGrid(const PanelRange& range, double center) {
    const auto [lo, hi] = window(center);
    return grid(range.yMin, range.yMax, lo, hi);
}

Curve savingSchedule(const Params& p, const EconState& s, const PanelRange& range) {
    const auto rs = rateGrid(range, s.r);
    if (p.e == 0)
        return makeVertical("S", lbl("S"), lbl("r"), nationalSaving(s.Y, s.r, p), rs.front(), rs.back());
    std::vector<Point> pts;
    for (double r : rs) pts.push_back({nationalSaving(s.Y, r, p), r});
    return makeCurve("S", lbl("S"), lbl("r"), std::move(pts));
}

Curve investmentSchedule(const Params& p, const EconState& s, const PanelRange& range) {
    std::vector<Point> pts;
    for (double r : rateGrid(range, s.r)) pts.push_back({investmentDemand(r, p.I0, p.d), r});
    return makeCurve("I", lbl("I (investment)"), lbl("r"), std::move(pts));
}

Curve laborSupplyCurve(const Params& p, const EconState& s, const PanelRange& range, double scale,
                       const std::string& name, const std::string& xLabel) {
    // Start just above the reservation wage so hours are strictly increasing.
    const double reservation = p.H > 0 ? p.theta * p.m / p.H : 0.0;
    const double lo = std::max(reservation * (1.0 + 1e-6), s.w / 100.0);
    std::vector<Point> pts;
    for (double w : grid(range.yMin, range.yMax, lo, std::max(3.0 * s.w, 2.0 * lo)))
        if (w > 0) pts.push_back({scale * leisureChoice(w, p.theta, p.H, p.m).labor, w});
    return makeCurve(name, xLabel, lbl("w"), std::move(pts));
}

Curve laborDemandCurve(const Params& p, const EconState& s, const PanelRange& range) {
    std::vector<Point> pts;
    for (double w : grid(range.yMin, range.yMax, s.w / 3.0, 3.0 * s.w))
        if (w > 0) pts.push_back({laborDemand(w, p.A, p.K, p.alpha), w});
    return makeCurve("LD", lbl("L (labor)"), lbl("w"), std::move(pts));
}

Curve productionInLabor(const Params& p, const EconState& s, const PanelRange& range, double K,
                        const std::string& name) {
    std::vector<Point> pts;
    for (double L : grid(range.xMin, range.xMax, 0.0, 3.0 * s.L)) pts.push_back({L, production(p.A, K, L, p.alpha)});
    return makeCurve(name, lbl("L (labor)"), lbl("Y"), std::move(pts));
}

Curve srasCurve(const Params& p, const EconState& s, const PanelRange& range) {
    std::vector<Point> pts;
    for (double P : priceGrid(range, s.P)) pts.push_back({srasOutput(P, s.PE, p.gamma, s.Ybar), P});
    return makeCurve("SRAS", lbl("Y"), lbl("P"), std::move(pts));
}

Curve lrasCurve(const EconState& s, const PanelRange& range) {
    const auto Ps = priceGrid(range, s.P);
    return makeVertical("LRAS", lbl("Y"), lbl("P"), lrasOutput(s.Ybar), Ps.front(), Ps.back());
}

Curve moneyDemandCurve(const Params& p, const EconState& s, const PanelRange& range) {
    std::vector<Point> pts;
    for (double i : rateGrid(range, s.i)) pts.push_back({moneyDemand(s.P, s.Y, i, p.kY, p.b), i});
    return makeCurve("MD", lbl("MD"), lbl("i"), std::move(pts));
}

}  // namespace

Overlay overlayFromString(std::string_view s) {
    if (s == "baseline") return Overlay::Baseline;
    if (s == "current") return Overlay::Current;
    if (s == "both") return Overlay::Both;
    throw ValidationError("overlay", "overlay must be baseline, current or both");
}

std::string_view toString(Overlay o) {
    switch (o) {
        case Overlay::Baseline: return "baseline";
        case Overlay::Current: return "current";
        case Overlay::Both: return "both";
    }
    return "";
}

Point panelMarker(int nodeId, const Params& p, const EconState& s) {
    switch (nodeId) {
        case 1: {
            const auto hc = leisureChoice(s.w, p.theta, p.H, p.m);
            return {hc.leisure, hc.cons};
        }
        case 2: return {leisureChoice(s.w, p.theta, p.H, p.m).labor, s.w};
        case 3: case 5: case 6: case 7: case 18: return {s.L, s.w};
        case 4: case 8: return {s.L, s.Ybar};
        case 9: return {p.K, s.Ybar};
        case 10: return {p.K, mpk(p.A, p.K, s.L, p.alpha)};
        case 11: {
            const double uc = userCostAt(p, s);
            return {capitalDemand(uc, s.L, p.A, p.alpha, p.pK), uc};
        }
        case 12: {
            const auto sol = solowSolve(p);
            return {sol.kStar, p.s * intensiveOutput(p.A, sol.kStar, p.alpha)};
        }
        case 13: case 14: case 19: return {s.Y, s.P};
        case 15: case 16: return {p.Ms, s.i};
        case 17: case 24: return {s.Y, s.i};
        case 20: return {s.Uu, s.pi};
        case 21: case 22: return {s.Snat, s.r};
        case 23: return {s.Y, s.r};
        case 25: return {s.r, userCostAt(p, s)};
        case 26: return {s.Ipriv, s.r};
        case 27: return {s.Y, plannedExpenditure(s.Y, s.r, p.c0, p.c1, p.T, p.e, p.I0, p.d, p.G)};
        default: throw NotFoundError("unknown diagram id " + std::to_string(nodeId));
    }
}

double markerResidual(int nodeId, const Params& p, const EconState& s, Point m) {
    switch (nodeId) {
        case 1: {
            // Tangency theta * cons = w * leisure on the budget line.
            const double budget = rel(m.y, p.m + s.w * (p.H - m.x));
            return std::max(budget, rel(p.theta * m.y, s.w * m.x));
        }
        case 2: return rel(m.x, leisureChoice(m.y, p.theta, p.H, p.m).labor);
        case 3: return rel(m.x, laborSupply(m.y, p));
        case 4: case 8: return rel(m.y, production(p.A, p.K, m.x, p.alpha));
        case 5: return rel(mpl(p.A, p.K, m.x, p.alpha), m.y);
        case 6: return rel(m.x, laborDemand(m.y, p.A, p.K, p.alpha));
        case 7: case 18: return rel(laborSupply(m.y, p), laborDemand(m.y, p.A, p.K, p.alpha));
        case 9: return rel(m.y, production(p.A, m.x, s.L, p.alpha));
        case 10: return rel(m.y, mpk(p.A, m.x, s.L, p.alpha));
        case 11: return rel(mpk(p.A, m.x, s.L, p.alpha), m.y / p.pK);
        case 12: return rel(p.s * intensiveOutput(p.A, m.x, p.alpha), (p.n + p.delta) * m.x);
        case 13: return rel(m.x, srasOutput(m.y, s.PE, p.gamma, s.Ybar));
        case 14:
            return std::max(rel(m.x, srasOutput(m.y, s.PE, p.gamma, s.Ybar)), rel(m.x, adOutput(m.y, p)));
        case 15: case 16: return rel(moneyDemand(s.P, s.Y, m.y, p.kY, p.b), m.x);
        case 17: return rel(m.y, lmRate(m.x, s.P, p));
        case 19: return rel(m.x, adOutput(m.y, p));
        case 20: return rel(m.y, phillips(m.x, p.piE, p.beta, p.Ubar));
        case 21: return rel(m.x, nationalSaving(s.Y, m.y, p));
        case 22: return rel(nationalSaving(s.Y, m.y, p), investmentDemand(m.y, p.I0, p.d));
        case 23: return rel(m.x, isOutput(m.y, p));
        case 24: return std::max(rel(m.x, isOutput(realRate(m.y, p), p)), rel(m.y, lmRate(m.x, s.P, p)));
        case 25: return rel(m.y, userCost(percentToFraction(m.x), p.delta, p.pK));
        case 26: return rel(m.x, investmentDemand(m.y, p.I0, p.d));
        case 27: return rel(plannedExpenditure(m.x, s.r, p.c0, p.c1, p.T, p.e, p.I0, p.d, p.G), m.x);
        default: throw NotFoundError("unknown diagram id " + std::to_string(nodeId));
    }
}

std::vector<Curve> panelCurves(int nodeId, const Params& p, const EconState& s, const PanelRange& range,
                               std::string_view suffix) {
    std::vector<Curve> out;
    switch (nodeId) {
        case 1: {
            const auto hc = leisureChoice(s.w, p.theta, p.H, p.m);
            std::vector<Point> budget, indiff;
            for (double l : grid(range.xMin, range.xMax, p.H / 100.0, p.H)) {
                budget.push_back({l, p.m + s.w * (p.H - l)});
                indiff.push_back({l, std::exp(hc.utility) / std::pow(l, p.theta)});
            }
            out.push_back(makeCurve("budget line", lbl("L (leisure)"), lbl("I (income)"), std::move(budget)));
            out.push_back(makeCurve("indifference curve", lbl("L (leisure)"), lbl("I (income)"), std::move(indiff)));
            break;
        }
        case 2: out.push_back(laborSupplyCurve(p, s, range, 1.0, "labor supply", lbl("W (hours)"))); break;
        case 3: out.push_back(laborSupplyCurve(p, s, range, p.Nh, "LS", lbl("L (labor)"))); break;
        case 4: out.push_back(productionInLabor(p, s, range, p.K, "PF")); break;
        case 5: {
            std::vector<Point> pts;
            const auto Ls = grid(range.xMin, range.xMax, s.L / 50.0, 3.0 * s.L);
            for (double L : Ls) pts.push_back({L, mpl(p.A, p.K, L, p.alpha)});
            out.push_back(makeCurve("MPL", lbl("L (labor)"), lbl("MPL"), std::move(pts)));
            out.push_back(makeCurve("MCL", lbl("L (labor)"), lbl("MPL"), {{Ls.front(), s.w}, {Ls.back(), s.w}}));
            break;
        }
        case 6: out.push_back(laborDemandCurve(p, s, range)); break;
        case 7: case 18:
            out.push_back(laborSupplyCurve(p, s, range, p.Nh, "LS", lbl("L (labor)")));
            out.push_back(laborDemandCurve(p, s, range));
            break;
        case 8:
            out.push_back(productionInLabor(p, s, range, p.K, "PF (K)"));
            out.push_back(productionInLabor(p, s, range, 0.5 * p.K, "PF (K/2)"));
            out.push_back(productionInLabor(p, s, range, 1.5 * p.K, "PF (3K/2)"));
            break;
        case 9: {
            std::vector<Point> pts;
            for (double K : grid(range.xMin, range.xMax, 0.0, 3.0 * p.K))
                pts.push_back({K, production(p.A, K, s.L, p.alpha)});
            out.push_back(makeCurve("PF", lbl("K"), lbl("Y"), std::move(pts)));
            break;
        }
        case 10: {
            std::vector<Point> pts;
            for (double K : grid(range.xMin, range.xMax, p.K / 50.0, 3.0 * p.K))
                pts.push_back({K, mpk(p.A, K, s.L, p.alpha)});
            out.push_back(makeCurve("MPK", lbl("K"), lbl("MPK"), std::move(pts)));
            break;
        }
        case 11: {
            const double uc = userCostAt(p, s);
            std::vector<Point> pts;
            for (double u : grid(range.yMin, range.yMax, uc / 3.0, 3.0 * uc))
                if (u > 0) pts.push_back({capitalDemand(u, s.L, p.A, p.alpha, p.pK), u});
            Curve demand = makeCurve("Kd", lbl("K"), lbl("UC"), std::move(pts));
            const double kd = capitalDemand(uc, s.L, p.A, p.alpha, p.pK);
            out.push_back(std::move(demand));
            out.push_back(makeCurve("UC", lbl("K"), lbl("UC"), {{0.0, uc}, {3.0 * kd, uc}}));
            break;
        }
        case 12: {
            const auto sol = solowSolve(p);
            std::vector<Point> saving, output, dilution;
            for (double k : grid(range.xMin, range.xMax, 0.0, std::max(3.0 * sol.kStar, 1.2 * sol.kGold))) {
                const double f = intensiveOutput(p.A, k, p.alpha);
                saving.push_back({k, p.s * f});
                output.push_back({k, f});
                dilution.push_back({k, (p.n + p.delta) * k});
            }
            out.push_back(makeCurve("s·f(k)", lbl("k"), lbl("f"), std::move(saving)));
            out.push_back(makeCurve("(n+δ)k", lbl("k"), lbl("f"), std::move(dilution)));
            Curve fk = makeCurve("f(k)", lbl("k"), lbl("f"), std::move(output));
            fk.markers.push_back({"k-gold", sol.kGold, intensiveOutput(p.A, sol.kGold, p.alpha)});
            out.push_back(std::move(fk));
            break;
        }
        case 13:
            out.push_back(srasCurve(p, s, range));
            out.push_back(lrasCurve(s, range));
            break;
        case 14: {
            std::vector<Point> pts;
            for (double P : priceGrid(range, s.P)) pts.push_back({adOutput(P, p), P});
            out.push_back(makeCurve("AD", lbl("Y"), lbl("P"), std::move(pts)));
            out.push_back(srasCurve(p, s, range));
            out.push_back(lrasCurve(s, range));
            break;
        }
        case 15: out.push_back(moneyDemandCurve(p, s, range)); break;
        case 16: {
            out.push_back(moneyDemandCurve(p, s, range));
            const auto is = rateGrid(range, s.i);
            out.push_back(makeVertical("MS", lbl("MD"), lbl("i"), p.Ms, is.front(), is.back()));
            break;
        }
        case 17: out.push_back(lmCurve(s.P, grid(range.xMin, range.xMax, s.Y / 10.0, 3.0 * s.Y), p)); break;
        case 19: out.push_back(adCurve(priceGrid(range, s.P), p)); break;
        case 20: {
            const double uHi = 3.0 * std::max(s.Uu, p.Ubar);
            Curve sr = srpcCurve(grid(range.xMin, range.xMax, 0.0, uHi > 0 ? uHi : 0.1), p);
            const double piLo = std::min(sr.points.front().y, sr.points.back().y);
            const double piHi = std::max(sr.points.front().y, sr.points.back().y);
            out.push_back(std::move(sr));
            out.push_back(lrpcCurve(piLo == piHi ? piLo - 0.01 : piLo, piLo == piHi ? piHi + 0.01 : piHi, p));
            break;
        }
        case 21: out.push_back(savingSchedule(p, s, range)); break;
        case 22:
            out.push_back(savingSchedule(p, s, range));
            out.push_back(investmentSchedule(p, s, range));
            break;
        case 23: out.push_back(isCurve(rateGrid(range, s.r), p)); break;
        case 24: {
            std::vector<Point> is;
            for (double i : rateGrid(range, s.i)) is.push_back({isOutput(realRate(i, p), p), i});
            out.push_back(makeCurve("IS", lbl("Y"), lbl("i"), std::move(is)));
            out.push_back(lmCurve(s.P, grid(range.xMin, range.xMax, s.Y / 10.0, 3.0 * s.Y), p));
            break;
        }
        case 25: {
            // Keep r + delta >= 0 so the user cost is defined.
            auto [lo, hi] = window(s.r);
            lo = std::max(lo, -fractionToPercent(p.delta));
            std::vector<Point> pts;
            for (double r : grid(range.xMin, range.xMax, lo, hi))
                pts.push_back({r, userCost(percentToFraction(r), p.delta, p.pK)});
            out.push_back(makeCurve("UC", lbl("r"), lbl("UC"), std::move(pts)));
            break;
        }
        case 26: out.push_back(investmentSchedule(p, s, range)); break;
        case 27: {
            std::vector<Point> ae, diag;
            for (double Y : grid(range.xMin, range.xMax, 0.0, 3.0 * s.Y)) {
                ae.push_back({Y, plannedExpenditure(Y, s.r, p.c0, p.c1, p.T, p.e, p.I0, p.d, p.G)});
                diag.push_back({Y, Y});
            }
            out.push_back(makeCurve("E", lbl("Y"), lbl("E"), std::move(ae)));
            out.push_back(makeCurve("E = Y", lbl("Y"), lbl("E"), std::move(diag)));
            break;
        }
        default: throw NotFoundError("unknown diagram id " + std::to_string(nodeId));
    }

    const Point m = panelMarker(nodeId, p, s);
    out.front().markers.insert(out.front().markers.begin(), NamedPoint{"equilibrium", m.x, m.y});
    if (!suffix.empty())
        for (auto& c : out) {
            c.name += suffix;
            for (auto& mk : c.markers) mk.name += suffix;
        }
    return out;
}

PanelPayload buildPanel(int nodeId, PanelInput current, std::optional<PanelInput> baseline, Overlay overlay,
                        const PanelRange& range, bool dirty) {
    const auto& node = canonicalGraph().node(nodeId);
    const auto& reg = SymbolRegistry::standard();

    PanelPayload out;
    out.nodeId = nodeId;
    out.name = node.name;
    out.xLabel = reg.label(node.xLabel);
    out.yLabel = reg.label(node.yLabel);
    out.dirty = dirty;
    if (!node.note.empty()) out.definition = node.note;

    const PanelInput base = baseline.value_or(current);
    if (overlay == Overlay::Both) {
        // Baseline curves first so the current ones draw on top.
        for (auto& c : panelCurves(nodeId, *base.params, *base.state, range, " (baseline)"))
            out.curves.push_back(std::move(c));
    }
    const PanelInput& shown = overlay == Overlay::Baseline ? base : current;
    for (auto& c : panelCurves(nodeId, *shown.params, *shown.state, range)) out.curves.push_back(std::move(c));
    out.equilibriumMarker = panelMarker(nodeId, *shown.params, *shown.state);
    return out;
}

nlohmann::json toJson(const PanelPayload& panel) {
    nlohmann::json curves = nlohmann::json::array();
    for (const auto& c : panel.curves) curves.push_back(toJson(c));
    nlohmann::json j = {{"nodeId", panel.nodeId},      {"name", panel.name},
                        {"xLabel", panel.xLabel},      {"yLabel", panel.yLabel},
                        {"curves", std::move(curves)}, {"dirty", panel.dirty}};
    j["equilibriumMarker"] = panel.equilibriumMarker
                                 ? nlohmann::json{{"x", panel.equilibriumMarker->x}, {"y", panel.equilibriumMarker->y}}
                                 : nlohmann::json(nullptr);
    j["definition"] = panel.definition ? nlohmann::json(*panel.definition) : nlohmann::json(nullptr);
    return j;
}

}  // namespace macroatlas
