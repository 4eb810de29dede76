#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "macroatlas/curve.hpp"
#include "macroatlas/params.hpp"

namespace macroatlas {

enum class Overlay { Baseline, Current, Both };

Overlay overlayFromString(std::string_view s);
std::string_view toString(Overlay o);

// Optional overrides of the sampled range. Each panel samples along one axis;
// the matching pair applies and the other is ignored.
struct PanelRange {
    std::optional<double> xMin, xMax, yMin, yMax;
};

struct PanelPayload {
    int nodeId = 0;
    std::string name;
    std::string xLabel;
    std::string yLabel;
    std::vector<Curve> curves;
    std::optional<Point> equilibriumMarker;
    std::optional<std::string> definition;
    bool dirty = false;
};

// An economy snapshot a panel is drawn from.
struct PanelInput {
    const Params* params = nullptr;
    const EconState* state = nullptr;
};

// Curves of one diagram. Curve names get `suffix` appended; the first curve
// carries the equilibrium marker.
std::vector<Curve> panelCurves(int nodeId, const Params& p, const EconState& s, const PanelRange& range = {},
                               std::string_view suffix = "");
Point panelMarker(int nodeId, const Params& p, const EconState& s);
// Relative residual of the diagram's defining equation at `marker`.
double markerResidual(int nodeId, const Params& p, const EconState& s, Point marker);

PanelPayload buildPanel(int nodeId, PanelInput current, std::optional<PanelInput> baseline, Overlay overlay,
                        const PanelRange& range = {}, bool dirty = false);

nlohmann::json toJson(const PanelPayload& panel);

}  // namespace macroatlas
