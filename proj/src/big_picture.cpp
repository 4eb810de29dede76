#include "macroatlas/big_picture.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <tuple>

#include "bigpicture_data.hpp"
#include "macroatlas/error.hpp"
#include "macroatlas/params.hpp"
#include "macroatlas/symbols.hpp"

namespace macroatlas {

namespace {

Side sideFromString(const std::string& s) {
    if (s == "SupplySide") return Side::SupplySide;
    if (s == "DemandSide") return Side::DemandSide;
    if (s == "Integrative") return Side::Integrative;
    throw ValidationError("side", "unknown side '" + s + "'");
}

EdgeKind kindFromString(const std::string& s) {
    if (s == "Derivation") return EdgeKind::Derivation;
    if (s == "PartOfComplex") return EdgeKind::PartOfComplex;
    if (s == "DualView") return EdgeKind::DualView;
    throw ValidationError("kind", "unknown edge kind '" + s + "'");
}

std::string dotEscape(std::string_view s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

}  // namespace

std::string_view toString(Side s) {
    switch (s) {
        case Side::SupplySide: return "SupplySide";
        case Side::DemandSide: return "DemandSide";
        case Side::Integrative: return "Integrative";
    }
    return "";
}

std::string_view toString(EdgeKind k) {
    switch (k) {
        case EdgeKind::Derivation: return "Derivation";
        case EdgeKind::PartOfComplex: return "PartOfComplex";
        case EdgeKind::DualView: return "DualView";
    }
    return "";
}

BigPicture::BigPicture(std::vector<DiagramNode> nodes, std::vector<Edge> edges,
                       std::map<std::string, std::vector<int>> owners)
    : nodes_(std::move(nodes)), edges_(std::move(edges)), owners_(std::move(owners)) {
    std::sort(nodes_.begin(), nodes_.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    for (std::size_t k = 0; k < nodes_.size(); ++k)
        if (nodes_[k].id != static_cast<int>(k) + 1)
            throw ValidationError("id", "node ids must be exactly 1.." + std::to_string(nodes_.size()));

    const auto& reg = SymbolRegistry::standard();
    for (const auto& n : nodes_) {
        if (!reg.find(n.xLabel) || !reg.find(n.yLabel))
            throw ValidationError("label", "node " + std::to_string(n.id) + " uses an unregistered axis symbol");
    }

    children_.assign(nodes_.size() + 1, {});
    parents_.assign(nodes_.size() + 1, {});
    for (const auto& e : edges_) {
        const auto inRange = [&](int id) { return id >= 1 && id <= static_cast<int>(nodes_.size()); };
        if (!inRange(e.from) || !inRange(e.to))
            throw ValidationError("edge", "edge " + std::to_string(e.from) + "->" + std::to_string(e.to) +
                                              " names a missing node");
        if (e.from == e.to) throw ValidationError("edge", "self-loop on node " + std::to_string(e.from));
        if (e.kind == EdgeKind::PartOfComplex && e.note.empty())
            throw ValidationError("note", "PartOfComplex edge must name the selected segment");
        if (e.kind == EdgeKind::Derivation) {
            children_[e.from].push_back(e.to);
            parents_[e.to].push_back(e.from);
        }
    }
    for (auto& v : children_) std::sort(v.begin(), v.end());
    for (auto& v : parents_) std::sort(v.begin(), v.end());

    // Kahn's algorithm doubles as the cycle check.
    if (topologicalOrder().size() != nodes_.size())
        throw ValidationError("edges", "derivation edges contain a cycle");

    for (const auto& [field, ids] : owners_) {
        if (!isParamField(field)) throw ValidationError(field, "owner map names unknown parameter '" + field + "'");
        for (int id : ids) checkId(id);
    }
}

void BigPicture::checkId(int id) const {
    if (!contains(id)) throw NotFoundError("unknown diagram id " + std::to_string(id));
}

const DiagramNode& BigPicture::node(int id) const {
    checkId(id);
    return nodes_[id - 1];
}

const std::vector<int>& BigPicture::children(int id) const {
    checkId(id);
    return children_[id];
}

const std::vector<int>& BigPicture::parents(int id) const {
    checkId(id);
    return parents_[id];
}

std::set<int> BigPicture::descendants(int id) const {
    checkId(id);
    std::set<int> seen;
    std::vector<int> stack = children_[id];
    while (!stack.empty()) {
        const int n = stack.back();
        stack.pop_back();
        if (seen.insert(n).second) stack.insert(stack.end(), children_[n].begin(), children_[n].end());
    }
    return seen;
}

std::set<int> BigPicture::ancestors(int id) const {
    checkId(id);
    std::set<int> seen;
    std::vector<int> stack = parents_[id];
    while (!stack.empty()) {
        const int n = stack.back();
        stack.pop_back();
        if (seen.insert(n).second) stack.insert(stack.end(), parents_[n].begin(), parents_[n].end());
    }
    return seen;
}

std::vector<int> BigPicture::dualViews(int id) const {
    checkId(id);
    std::vector<int> out;
    for (const auto& e : edges_) {
        if (e.kind != EdgeKind::DualView) continue;
        if (e.from == id) out.push_back(e.to);
        if (e.to == id) out.push_back(e.from);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> BigPicture::provenancePaths(int a, int b) const {
    checkId(a);
    checkId(b);
    std::vector<std::vector<int>> paths;
    std::vector<int> path{a};
    std::function<void(int)> walk = [&](int n) {
        if (n == b) {
            if (path.size() > 1) paths.push_back(path);
            return;
        }
        for (int c : children_[n]) {
            path.push_back(c);
            walk(c);
            path.pop_back();
        }
    };
    walk(a);
    return paths;
}

PropagationPlan BigPicture::propagate(std::span<const std::string> shocked) const {
    PropagationPlan plan;
    std::set<int> roots;
    for (const auto& field : shocked) {
        const auto it = owners_.find(field);
        if (it == owners_.end()) throw ValidationError(field, "unknown parameter '" + field + "'");
        roots.insert(it->second.begin(), it->second.end());
        if (std::find(plan.trigger.begin(), plan.trigger.end(), field) == plan.trigger.end())
            plan.trigger.push_back(field);
    }

    // Reverse postorder of a DFS started from the owners in ascending id order.
    std::vector<char> visited(nodes_.size() + 1, 0);
    std::vector<int> post;
    std::function<void(int)> visit = [&](int n) {
        visited[n] = 1;
        for (int c : children_[n])
            if (!visited[c]) visit(c);
        post.push_back(n);
    };
    for (int r : roots)
        if (!visited[r]) visit(r);
    plan.dirty.assign(post.rbegin(), post.rend());
    return plan;
}

std::vector<int> BigPicture::topologicalOrder() const {
    std::vector<int> indegree(nodes_.size() + 1, 0);
    for (std::size_t n = 1; n <= nodes_.size(); ++n) indegree[n] = static_cast<int>(parents_[n].size());
    std::set<int> ready;
    for (std::size_t n = 1; n <= nodes_.size(); ++n)
        if (indegree[n] == 0) ready.insert(static_cast<int>(n));
    std::vector<int> order;
    while (!ready.empty()) {
        const int n = *ready.begin();
        ready.erase(ready.begin());
        order.push_back(n);
        for (int c : children_[n])
            if (--indegree[c] == 0) ready.insert(c);
    }
    return order;
}

std::set<int> BigPicture::component(int id) const {
    checkId(id);
    std::set<int> seen{id};
    std::vector<int> stack{id};
    while (!stack.empty()) {
        const int n = stack.back();
        stack.pop_back();
        for (const auto& e : edges_) {
            int other = 0;
            if (e.from == n) other = e.to;
            if (e.to == n) other = e.from;
            if (other && seen.insert(other).second) stack.push_back(other);
        }
    }
    return seen;
}

BigPicture BigPicture::fromJson(const nlohmann::json& j) {
    std::vector<DiagramNode> nodes;
    for (const auto& n : j.at("nodes")) {
        DiagramNode d;
        d.id = n.at("id").get<int>();
        d.name = n.at("name").get<std::string>();
        d.side = sideFromString(n.at("side").get<std::string>());
        d.xLabel = n.at("xLabel").get<std::string>();
        d.yLabel = n.at("yLabel").get<std::string>();
        d.binding = n.value("binding", std::vector<std::string>{});
        d.note = n.value("note", "");
        nodes.push_back(std::move(d));
    }
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges"))
        edges.push_back({e.at("from").get<int>(), e.at("to").get<int>(), kindFromString(e.at("kind").get<std::string>()),
                         e.value("note", "")});
    std::map<std::string, std::vector<int>> owners;
    if (j.contains("owners"))
        for (const auto& [field, ids] : j.at("owners").items()) owners[field] = ids.get<std::vector<int>>();
    return BigPicture(std::move(nodes), std::move(edges), std::move(owners));
}

nlohmann::json BigPicture::toJson() const {
    nlohmann::json nodes = nlohmann::json::array();
    for (const auto& n : nodes_)
        nodes.push_back({{"id", n.id},
                         {"name", n.name},
                         {"side", toString(n.side)},
                         {"xLabel", n.xLabel},
                         {"yLabel", n.yLabel},
                         {"binding", n.binding},
                         {"note", n.note}});
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : edges_)
        edges.push_back({{"from", e.from}, {"to", e.to}, {"kind", toString(e.kind)}, {"note", e.note}});
    nlohmann::json owners = nlohmann::json::object();
    for (const auto& [field, ids] : owners_) owners[field] = ids;
    return {{"nodes", std::move(nodes)}, {"edges", std::move(edges)}, {"owners", std::move(owners)}};
}

std::string_view canonicalGraphJson() { return detail::kBigPictureJson; }

const BigPicture& canonicalGraph() {
    static const BigPicture g = BigPicture::fromJson(nlohmann::json::parse(detail::kBigPictureJson));
    return g;
}

std::string exportDot(const BigPicture& g) {
    std::ostringstream os;
    os << "digraph BigPicture {\n";
    os << "  node [shape=box];\n";
    for (const auto& n : g.nodes())
        os << "  n" << n.id << " [label=\"" << dotEscape(n.name) << "\"];\n";

    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        return std::tie(a.kind, a.from, a.to) < std::tie(b.kind, b.from, b.to);
    });
    for (const auto& e : edges) {
        os << "  n" << e.from << " -> n" << e.to;
        switch (e.kind) {
            case EdgeKind::Derivation: os << " [style=solid"; break;
            case EdgeKind::PartOfComplex: os << " [style=dotted"; break;
            case EdgeKind::DualView: os << " [style=dashed, dir=both"; break;
        }
        if (!e.note.empty()) os << ", label=\"" << dotEscape(e.note) << "\"";
        os << "];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace macroatlas
