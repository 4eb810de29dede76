#include <doctest.h>

#include <algorithm>
#include <map>
#include <regex>
#include <sstream>
#include <set>
#include <string>

#include "macroatlas/big_picture.hpp"
#include "macroatlas/error.hpp"
#include "macroatlas/params.hpp"

using namespace macroatlas;

namespace {

// Diagram titles, verbatim from the list of diagrams and models.
const char* const kTitles[27] = {
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

std::set<int> ids(std::initializer_list<int> l) { return std::set<int>(l); }

}  // namespace

TEST_CASE("canonical graph inventory") {
    const auto& g = canonicalGraph();
    REQUIRE(g.nodes().size() == 27);
    for (int id = 1; id <= 27; ++id) {
        INFO(id);
        CHECK(g.node(id).name == kTitles[id - 1]);
    }
    std::set<EdgeKind> kinds;
    for (const auto& e : g.edges()) kinds.insert(e.kind);
    CHECK(kinds == std::set<EdgeKind>{EdgeKind::Derivation, EdgeKind::PartOfComplex, EdgeKind::DualView});
    CHECK(g.edges().size() == 31);
    CHECK(g.topologicalOrder().size() == 27);
    CHECK(g.parents(14) == std::vector<int>{13, 19});
    const auto it = std::find_if(g.edges().begin(), g.edges().end(),
                                 [](const Edge& e) { return e.from == 27 && e.to == 23; });
    REQUIRE(it != g.edges().end());
    CHECK(it->note == "One way to derive IS");
    CHECK(g.node(17).note.rfind("LM Curve:", 0) == 0);
    CHECK(g.node(23).note.rfind("IS Curve:", 0) == 0);
}

TEST_CASE("every diagram belongs to the general-equilibrium component") {
    const auto& g = canonicalGraph();
    const auto comp = g.component(14);
    CHECK(comp.size() == 27);
}

TEST_CASE("descendants, ancestors and dual views") {
    const auto& g = canonicalGraph();
    CHECK(g.descendants(16) == ids({17, 24, 19, 14, 20}));
    CHECK(g.descendants(14) == ids({20}));
    CHECK(g.ancestors(1).empty());
    CHECK(g.dualViews(22) == std::vector<int>{27});
    CHECK(g.dualViews(27) == std::vector<int>{22});
    CHECK(g.dualViews(7) == std::vector<int>{18});
    CHECK_THROWS_AS(g.descendants(28), NotFoundError);
}

TEST_CASE("provenance paths") {
    const auto& g = canonicalGraph();
    CHECK(g.provenancePaths(15, 14) == std::vector<std::vector<int>>{{15, 16, 17, 24, 19, 14}});
    const auto paths = g.provenancePaths(8, 14);
    const std::vector<int> labor{8, 4, 5, 6, 7, 13, 14}, capital{8, 9, 10, 11, 26, 22, 23, 24, 19, 14};
    CHECK(std::find(paths.begin(), paths.end(), labor) != paths.end());
    CHECK(std::find(paths.begin(), paths.end(), capital) != paths.end());
    CHECK(g.provenancePaths(20, 1).empty());
    for (const auto& path : paths) {
        CHECK(path.front() == 8);
        CHECK(path.back() == 14);
        for (std::size_t k = 1; k < path.size(); ++k) {
            const auto& kids = g.children(path[k - 1]);
            CHECK(std::find(kids.begin(), kids.end(), path[k]) != kids.end());
        }
    }
}

TEST_CASE("propagation plans") {
    const auto& g = canonicalGraph();
    const std::string ms[] = {"Ms"};
    CHECK(g.propagate(ms).dirty == std::vector<int>{16, 17, 24, 19, 14, 20});
    const std::string gov[] = {"G"};
    const auto plan = g.propagate(gov);
    CHECK(plan.dirty == std::vector<int>{27, 22, 23, 24, 19, 14, 20});
    for (int id : plan.dirty) CHECK(id > 13);
    CHECK(g.propagate(std::span<const std::string>{}).dirty.empty());
    const std::string bad[] = {"Q"};
    CHECK_THROWS_AS(g.propagate(bad), ValidationError);
    const std::string a[] = {"A"};
    const auto pa = g.propagate(a).dirty;
    for (int id : {4, 5, 6, 7, 8, 9}) CHECK(std::find(pa.begin(), pa.end(), id) != pa.end());
}

TEST_CASE("property: every plan is closed and topologically ordered") {
    const auto& g = canonicalGraph();
    std::vector<std::string> names;
    for (const auto& f : paramFields()) names.emplace_back(f.name);
    // Singletons, pairs, and the full set.
    std::vector<std::vector<std::string>> sets;
    for (const auto& n : names) sets.push_back({n});
    for (std::size_t a = 0; a < names.size(); ++a)
        for (std::size_t b = a + 1; b < names.size(); b += 3) sets.push_back({names[a], names[b]});
    sets.push_back(names);
    for (const auto& s : sets) {
        const auto plan = g.propagate(s);
        std::map<int, std::size_t> pos;
        for (std::size_t k = 0; k < plan.dirty.size(); ++k) pos[plan.dirty[k]] = k;
        CHECK(pos.size() == plan.dirty.size());
        for (int id : plan.dirty) {
            for (int child : g.children(id)) CHECK(pos.count(child) == 1);
            for (int parent : g.parents(id))
                if (pos.count(parent)) CHECK(pos[parent] < pos[id]);
        }
        for (const auto& f : s)
            for (int owner : g.owners().at(f)) CHECK(pos.count(owner) == 1);
    }
}

TEST_CASE("every parameter has an owner") {
    const auto& owners = canonicalGraph().owners();
    for (const auto& f : paramFields()) CHECK_MESSAGE(owners.count(std::string(f.name)) == 1, f.name);
}

TEST_CASE("JSON round trip") {
    const auto& g = canonicalGraph();
    const auto j = g.toJson();
    const BigPicture back = BigPicture::fromJson(j);
    CHECK(back.toJson() == j);
    CHECK(exportDot(back) == exportDot(g));
}

TEST_CASE("constructor rejects malformed graphs") {
    auto node = [](int id) { return DiagramNode{id, "n", Side::SupplySide, "Y", "P", {}, ""}; };
    CHECK_THROWS_AS(BigPicture({node(1), node(2)}, {{1, 2, EdgeKind::Derivation, ""}, {2, 1, EdgeKind::Derivation, ""}},
                               {}),
                    ValidationError);
    CHECK_THROWS_AS(BigPicture({node(1), node(3)}, {}, {}), ValidationError);
    CHECK_THROWS_AS(BigPicture({node(1), node(2)}, {{1, 5, EdgeKind::Derivation, ""}}, {}), ValidationError);
    CHECK_THROWS_AS(BigPicture({node(1), node(2)}, {{1, 2, EdgeKind::PartOfComplex, ""}}, {}), ValidationError);
    CHECK_THROWS_AS(BigPicture({node(1)}, {}, {{"nonsense", {1}}}), ValidationError);
    auto bad = node(1);
    bad.xLabel = "no-such-symbol";
    CHECK_THROWS_AS(BigPicture({bad}, {}, {}), ValidationError);
    // A dual view alongside a derivation is not a cycle.
    CHECK_NOTHROW(BigPicture({node(1), node(2)}, {{1, 2, EdgeKind::Derivation, ""}, {1, 2, EdgeKind::DualView, ""}}, {}));
}

TEST_CASE("DOT export") {
    const std::string dot = exportDot(canonicalGraph());
    std::istringstream lines(dot);
    std::size_t nodes = 0;
    for (std::string line; std::getline(lines, line);)
        if (std::regex_match(line, std::regex(R"(  n\d+ \[label=".*"\];)"))) ++nodes;
    CHECK(nodes == 27);
    CHECK(dot.find("n22 -> n27 [style=dashed, dir=both") != std::string::npos);
    CHECK(dot.find("n3 -> n7 [style=dotted") != std::string::npos);
    CHECK(dot == exportDot(canonicalGraph()));
    CHECK(dot.rfind("digraph", 0) == 0);
}
