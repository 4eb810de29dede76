#pragma once

#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace macroatlas {

enum class Side { SupplySide, DemandSide, Integrative };

// Derivation: one diagram is derived from another.
// PartOfComplex: a diagram is the commonly used segment of a richer one.
// DualView: two viewpoints of the same concept (stored once, symmetric).
enum class EdgeKind { Derivation, PartOfComplex, DualView };

std::string_view toString(Side s);
std::string_view toString(EdgeKind k);

struct DiagramNode {
    int id = 0;
    std::string name;
    Side side = Side::SupplySide;
    std::string xLabel;  // SymbolRegistry keys
    std::string yLabel;
    std::vector<std::string> binding;  // empty means definitional
    std::string note;
};

struct Edge {
    int from = 0;
    int to = 0;
    EdgeKind kind = EdgeKind::Derivation;
    std::string note;
};

struct PropagationPlan {
    std::vector<int> dirty;  // topological order
    std::vector<std::string> trigger;

    friend bool operator==(const PropagationPlan&, const PropagationPlan&) = default;
};

// The diagram graph. Immutable after construction; the constructor rejects
// non-contiguous ids, dangling edges, derivation cycles, unlabeled
// PartOfComplex edges, unknown axis symbols and unknown parameter owners.
class BigPicture {
public:
    BigPicture(std::vector<DiagramNode> nodes, std::vector<Edge> edges,
               std::map<std::string, std::vector<int>> owners);

    static BigPicture fromJson(const nlohmann::json& j);
    nlohmann::json toJson() const;

    std::span<const DiagramNode> nodes() const { return nodes_; }
    std::span<const Edge> edges() const { return edges_; }
    const std::map<std::string, std::vector<int>>& owners() const { return owners_; }

    const DiagramNode& node(int id) const;
    bool contains(int id) const { return id >= 1 && id <= static_cast<int>(nodes_.size()); }

    const std::vector<int>& children(int id) const;  // Derivation only, ascending
    const std::vector<int>& parents(int id) const;
    std::set<int> descendants(int id) const;
    std::set<int> ancestors(int id) const;
    std::vector<int> dualViews(int id) const;

    // Every Derivation path from a to b.
    std::vector<std::vector<int>> provenancePaths(int a, int b) const;
    // Owners of the shocked parameters plus their Derivation descendants, in
    // topological order. Throws ValidationError for unknown parameter names.
    PropagationPlan propagate(std::span<const std::string> shocked) const;
    std::vector<int> topologicalOrder() const;
    // Nodes reachable from id over edges of every kind, ignoring direction.
    std::set<int> component(int id) const;

private:
    void checkId(int id) const;

    std::vector<DiagramNode> nodes_;
    std::vector<Edge> edges_;
    std::map<std::string, std::vector<int>> owners_;
    std::vector<std::vector<int>> children_;
    std::vector<std::vector<int>> parents_;
};

// The shipped 27-diagram graph, parsed once from the bundled data file.
const BigPicture& canonicalGraph();
std::string_view canonicalGraphJson();

// DOT text: Derivation solid, DualView dashed with arrows both ways,
// PartOfComplex dotted. Output is deterministic.
std::string exportDot(const BigPicture& g);

}  // namespace macroatlas
