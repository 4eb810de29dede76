#pragma once

#include <string>

#include "macroatlas/panels.hpp"

namespace macroatlas {

struct SvgStyle {
    int width = 640;
    int height = 480;
    int margin = 60;
};

// Standalone SVG of one panel: axes labeled with the panel's symbols, one
// polyline per curve (baseline curves dashed), circles at named markers.
std::string renderSvg(const PanelPayload& panel, const SvgStyle& style = {});

// Collapses whitespace runs so golden comparisons ignore formatting.
std::string normalizeSvg(const std::string& svg);

}  // namespace macroatlas
