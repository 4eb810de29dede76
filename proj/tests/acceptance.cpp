// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

#include "macroatlas/big_picture.hpp"
#include "macroatlas/demand_side.hpp"
#include "macroatlas/econ_core.hpp"
#include "macroatlas/equilibrium.hpp"
#include "macroatlas/error.hpp"
#include "macroatlas/numerics.hpp"
#include "macroatlas/scenario.hpp"
#include "macroatlas/supply_side.hpp"
#include "oracles.hpp"

#ifndef MACROATLAS_CLI
#define MACROATLAS_CLI "macroatlas"
#endif

using namespace macroatlas;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) detail = what;
        pass = pass && ok;
    }
};

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Diagram titles expected verbatim.
const std::vector<std::string> kTitles = {
    "The Leisure-Work Choice Problem",
    "Individual Labor Supply Curve",
    "Labor Supply Diagram",
    "Two-dimensional Production Function Diagram (Y-L Space)",
    "Marginal Product of Labor (MPL) Diagram",
    "Labor Demand Diagram",
    "Labor Market Equilibrium Diagram",
    "Three-dimensional Production Function Diagram (Y-L-K Space)",
    "Two-dimensional Production Function Diagram (Y-K Space)",
    "Marginal Product of Capital (MPK) Diagram",
    "Capital Demand Diagram",
    "Solow Model",
    "Aggregate Supply (AS) Diagram",
    "A Diagram for General Equilibrium in the Macroeconomy",
    "Money Demand Diagram",
    "Money Market Equilibrium Diagram (Money Supply and Demand)",
    "LM Diagram (Liquidity-Money Diagram)",
    "Labor Market Equilibrium Diagram",
    "Aggregate Demand (AD) Diagram",
    "Phillips Curve",
    "Saving vs. Interest Rate Diagram",
    "National Saving and Investment Model (aka “Classical Cross” Model)",
    "IS Diagram (Investment=Saving Diagram)",
    "IS-LM Model",
    "User Cost of Capital Model",
    "Investment vs. Interest Rate Diagram",
    "Aggregate Expenditure Line (aka “Keynesian Cross” Model)",
};

Outcome graphFidelity() {
    Outcome o;
    const auto& g = canonicalGraph();
    o.require(g.nodes().size() == 27, "node count " + std::to_string(g.nodes().size()));
    for (int id = 1; id <= static_cast<int>(std::min<std::size_t>(27, g.nodes().size())); ++id)
        o.require(g.node(id).name == kTitles[id - 1], "title mismatch at node " + std::to_string(id));
    std::set<EdgeKind> kinds;
    for (const auto& e : g.edges()) kinds.insert(e.kind);
    o.require(kinds.size() == 3, "edge kinds " + std::to_string(kinds.size()));
    o.require(g.topologicalOrder().size() == g.nodes().size(), "derivation subgraph has a cycle");
    o.require(g.parents(14) == std::vector<int>{13, 19}, "parents of node 14");
    return o;
}

Outcome dualView() {
    Outcome o;
    const Params p;
    double worst = 0;
    for (int k = 0; k <= 10; ++k) {
        const double r = 0.5 * k;
        const double Y = isOutput(r, p);
        worst = std::max(worst, std::abs(Y - keynesianCrossSolve(r, p)));
        worst = std::max(worst, std::abs(classicalCrossSolve(Y, p) - r));
    }
    o.require(worst < 1e-9, "max gap " + num(worst));
    o.detail = o.pass ? "max gap " + num(worst) : o.detail;
    return o;
}

Outcome derivativeFidelity() {
    Outcome o;
    oracle::Rng rng(2024);
    double worst = 0;
    for (int k = 0; k < 100; ++k) {
        const double A = rng.uniform(0.5, 3), K = rng.uniform(10, 1e4), L = rng.uniform(10, 1e4),
                     alpha = rng.uniform(0.1, 0.9);
        const double hL = 1e-5 * L, hK = 1e-5 * K;
        const double fdL = (production(A, K, L + hL, alpha) - production(A, K, L - hL, alpha)) / (2 * hL);
        const double fdK = (production(A, K + hK, L, alpha) - production(A, K - hK, L, alpha)) / (2 * hK);
        worst = std::max({worst, oracle::relErr(mpl(A, K, L, alpha), fdL), oracle::relErr(mpk(A, K, L, alpha), fdK)});
    }
    o.require(worst < 1e-6, "max rel error " + num(worst));
    if (o.pass) o.detail = "max rel error " + num(worst);
    return o;
}

Outcome solow() {
    Outcome o;
    const double s = 0.2, n = 0.02, delta = 0.08, A = 1, alpha = 0.5;
    const auto sol = solowSolve(s, n, delta, A, alpha);
    const double kNum = findRoot1D([&](double k) { return s * intensiveOutput(A, k, alpha) - (n + delta) * k; },
                                   {1e-3, 100, 1e-14, 1e-14, 400})
                            .root;
    const double gNum =
        findRoot1D([&](double k) { return mpk(A, k, 1, alpha) - (n + delta); }, {1e-3, 1000, 1e-14, 1e-15, 400}).root;
    o.require(std::abs(sol.kStar - 4) < 1e-10, "kStar " + num(sol.kStar));
    o.require(std::abs(sol.kGold - 25) < 1e-10, "kGold " + num(sol.kGold));
    o.require(std::abs(kNum - sol.kStar) < 1e-10, "numeric kStar " + num(kNum));
    o.require(std::abs(gNum - sol.kGold) < 1e-10, "numeric kGold " + num(gNum));
    o.require(std::abs(mpk(A, sol.kGold, 1, alpha) - (n + delta)) < 1e-12, "MPK at kGold");
    double bestS = 0, bestC = -1;
    for (int k = 1; k <= 19; ++k) {
        const double c = solowSolve(0.05 * k, n, delta, A, alpha).cStar;
        if (c > bestC) {
            bestC = c;
            bestS = 0.05 * k;
        }
    }
    o.require(std::abs(bestS - alpha) < 1e-12, "cStar peaks at s=" + num(bestS));
    return o;
}

Outcome multiplier() {
    Outcome o;
    const Params p;
    const double h = 1.0;
    Params up = p, down = p;
    up.G += h;
    down.G -= h;
    const double r = 2.0;
    const double viaCross = (keynesianCrossSolve(r, up) - keynesianCrossSolve(r, down)) / (2 * h);
    const double viaIs = (isOutput(r, up) - isOutput(r, down)) / (2 * h);
    o.require(std::abs(viaCross - 1 / (1 - p.c1)) < 1e-9, "cross multiplier " + num(viaCross));
    o.require(std::abs(viaIs - 4) < 1e-9, "IS multiplier " + num(viaIs));
    return o;
}

Outcome neutrality() {
    Outcome o;
    const Params p;
    Params m = p;
    m.Ms *= 2;
    const EconState a = longRunGE(p), b = longRunGE(m);
    o.require(oracle::relErr(b.P, 2 * a.P) < 1e-8, "P ratio " + num(b.P / a.P));
    for (double EconState::*f : {&EconState::Y, &EconState::r, &EconState::w, &EconState::L})
        o.require(oracle::relErr(b.*f, a.*f) < 1e-8, "real variable moved");
    return o;
}

Outcome signs() {
    Outcome o;
    const Params p;
    const EconState dG = comparativeStatic(shortRunGE, p, "G", 1.0);
    const EconState dM = comparativeStatic(shortRunGE, p, "Ms", 1.0);
    o.require(dG.Y > 0, "dY/dG " + num(dG.Y));
    o.require(dG.i > 0, "di/dG " + num(dG.i));
    o.require(dG.Ipriv < 0, "dI/dG " + num(dG.Ipriv));
    o.require(dM.Y > 0, "dY/dMs " + num(dM.Y));
    o.require(dM.i < 0, "di/dMs " + num(dM.i));
    double prev = INFINITY;
    for (int k = 0; k < 20; ++k) {
        const double P = 0.5 + 0.1 * k;
        const double Y = adOutput(P, p);
        o.require(Y < prev, "AD not decreasing at P=" + num(P));
        prev = Y;
    }
    return o;
}

Outcome residualsCheck() {
    Outcome o;
    const Params p;
    const EconState s = shortRunGE(p);
    const auto r = residuals(s, p);
    o.require(std::abs(r.goods) < 1e-8, "goods " + num(r.goods));
    o.require(std::abs(r.money) < 1e-8, "money " + num(r.money));
    o.require(std::abs(r.supply) < 1e-8, "supply " + num(r.supply));
    const auto ref = oracle::shortRun(p);
    o.require(oracle::relErr(s.Y, ref.Y) < 1e-9, "Y vs oracle");
    if (o.pass)
        o.detail = "goods " + num(r.goods) + ", money " + num(r.money) + ", supply " + num(r.supply);
    return o;
}

Outcome propagation() {
    Outcome o;
    const auto& g = canonicalGraph();
    const std::string ms[] = {"Ms"}, gov[] = {"G"};
    const auto pm = g.propagate(ms).dirty;
    o.require(std::set<int>(pm.begin(), pm.end()) == std::set<int>{16, 17, 24, 19, 14, 20} && pm.size() == 6,
              "Ms plan");
    for (int id : g.propagate(gov).dirty) o.require(id > 13, "G plan touches node " + std::to_string(id));
    return o;
}

Outcome replayCheck() {
    Outcome o;
    const fs::path dir = fs::temp_directory_path() / ("macroatlas-acceptance-" + std::to_string(::getpid()));
    fs::remove_all(dir);
    {
        ScenarioStore store(dir);
        const Scenario s = store.create(Params{});
        store.applyShock(s.id, "Ms", 1100);
        store.applyShock(s.id, "G", 330);
        store.applyShock(s.id, "T", 90);
        const Scenario loaded = store.get(s.id);
        const Scenario re = replay(loaded);
        double worst = 0;
        for (const auto& f : stateFields()) worst = std::max(worst, std::abs(re.current.*(f.member) - loaded.current.*(f.member)));
        o.require(worst <= 1e-12, "replay gap " + num(worst));

        const std::string before = slurp(store.pathFor(s.id));
        for (auto [field, value] : {std::pair{"c1", 1.5}, {"alpha", 2.0}, {"m", 1e12}}) {
            try {
                store.applyShock(s.id, field, value);
                o.require(false, std::string("shock on ") + field + " accepted");
            } catch (const Error&) {
            }
        }
        o.require(slurp(store.pathFor(s.id)) == before, "failed shock changed the file");
    }
    fs::remove_all(dir);
    return o;
}

int run(const std::string& cmd) {
    const int rc = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

Outcome cliDeterminism() {
    Outcome o;
    const std::string cli = MACROATLAS_CLI;
    const fs::path dir = fs::temp_directory_path() / ("macroatlas-cli-" + std::to_string(::getpid()));
    fs::remove_all(dir);
    fs::create_directories(dir);
    auto path = [&](const std::string& name) { return (dir / name).string(); };
    for (const char* fmt : {"dot", "json"}) {
        for (int k = 0; k < 2; ++k)
            o.require(run(cli + " export-graph --format " + fmt + " --out " + path(std::string(fmt) + std::to_string(k))) == 0,
                      std::string("export-graph ") + fmt + " failed");
        o.require(slurp(path(std::string(fmt) + "0")) == slurp(path(std::string(fmt) + "1")) &&
                      !slurp(path(std::string(fmt) + "0")).empty(),
                  std::string(fmt) + " export differs");
    }
    for (int node : {12, 14, 20, 24}) {
        const std::string n = std::to_string(node);
        for (int k = 0; k < 2; ++k)
            o.require(run(cli + " plot --node " + n + " --overlay both --field Ms --value 1100 --out " +
                          path("p" + n + "_" + std::to_string(k) + ".svg")) == 0,
                      "plot " + n + " failed");
        o.require(slurp(path("p" + n + "_0.svg")) == slurp(path("p" + n + "_1.svg")), "plot " + n + " differs");
    }
    o.require(run(cli + " solve --json > " + path("solve.json")) == 0, "solve exit code");
    try {
        const auto j = nlohmann::json::parse(slurp(path("solve.json")));
        const double Y = j["longRun"]["Y"], Ybar = j["longRun"]["Ybar"];
        o.require(std::abs(Y - Ybar) < 1e-8, "long-run Y - Ybar " + num(Y - Ybar));
    } catch (const std::exception& ex) {
        o.require(false, std::string("solve output: ") + ex.what());
    }
    fs::remove_all(dir);
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"graph fidelity: 27 verbatim titles, 3 edge kinds, acyclic, parents(14)={13,19} [exact]", graphFidelity},
        {"dual view: IS vs Keynesian and classical crosses, r in {0,0.5,...,5} [1e-9]", dualView},
        {"derivative fidelity: mpl/mpk vs finite differences, 100 points [rel 1e-6]", derivativeFidelity},
        {"Solow: kStar=4, kGold=25 [1e-10], MPK(kGold)=n+delta [1e-12], cStar peaks at s=alpha", solow},
        {"multiplier: dY/dG at fixed r = 1/(1-c1) = 4 [1e-9]", multiplier},
        {"money neutrality: 2x Ms doubles long-run P, fixes Y, r, w, L [rel 1e-8]", neutrality},
        {"comparative-static signs: dY/dG>0, di/dG>0, dI/dG<0, dY/dMs>0, di/dMs<0, AD decreasing [sign]", signs},
        {"equilibrium residuals: goods, money, AS at shortRunGE [1e-8]", residualsCheck},
        {"propagation: Ms dirties {16,17,24,19,14,20}; G avoids 1-13 [exact]", propagation},
        {"replay: history reproduces current [1e-12]; failed shocks keep file bytes [exact]", replayCheck},
        {"CLI determinism: export-graph and plot byte-identical; solve exits 0, long-run Y=Ybar [1e-8]", cliDeterminism},
    };
    int failures = 0;
    for (const auto& [name, fn] : criteria) {
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& ex) {
            o.pass = false;
            o.detail = std::string("exception: ") + ex.what();
        }
        if (!o.pass) ++failures;
        std::printf("%s  %s%s%s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.empty() ? "" : "  -- ",
                    o.detail.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
