#pragma once

#include <string>

#include "alphagon/drawing.hpp"
#include "alphagon/scene.hpp"

namespace alphagon {

struct RenderOptions {
    bool show_crossings = false;
    bool show_free_area = false;
    double width = 900;
};

// Shapes in light fill, canonical drawing edges as two-segment polylines,
// crossings marked when requested. Presentation only, not a data contract.
std::string render_scene_svg(const Scene& s, const RenderOptions& opt);

// Threshold curve over [n_min, n_max]; throws on an empty range.
std::string threshold_csv(int n_min, int n_max);
std::string threshold_svg(int n_min, int n_max);

}  // namespace alphagon
