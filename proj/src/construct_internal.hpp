#pragma once

// Shared helpers for the construction generators. Internal to src/.

#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "alphagon/constructions.hpp"
#include "alphagon/geometry.hpp"
#include "alphagon/scene.hpp"

namespace alphagon::detail {

inline constexpr double pi = 3.14159265358979323846;

// Incrementally builds a collection plus its intended contact edges.
struct SceneBuilder {
    Scene scene;
    std::set<std::pair<std::string, std::string>> intended;

    explicit SceneBuilder(const ShapeTemplate& tpl, double alpha) {
        scene.coll.tpl = tpl;
        scene.coll.alpha = alpha;
        scene.blueprint.emplace();
    }

    int add(const std::string& id, double scale, Point center) {
        scene.coll.shapes.push_back({id, scale, center});
        return static_cast<int>(scene.coll.shapes.size()) - 1;
    }

    void edge(const std::string& a, const std::string& b) {
        if (a < b) {
            intended.insert({a, b});
        } else {
            intended.insert({b, a});
        }
    }

    void finish() {
        for (const auto& [a, b] : intended) {
            scene.blueprint->intended_edges.push_back({a, b});
        }
    }
};

// Direction of an axis aligned chain step.
enum class Dir { east, west, north, south };

// Places one shape so it touches the previous one in the given direction with
// a zero area contact, template family aware. `prev`/`next` are scales; the
// returned point is the center for the next shape given the previous center.
Point chain_step(const ShapeTemplate& tpl, Point prev_center, double prev_scale,
                 double next_scale, Dir d);

// Anchor point helpers for the convex family (marked corners).
inline Point corner_world(const ShapeTemplate& tpl, double scale, Point center, int idx) {
    return center + scale * tpl.verts[idx];
}

// Center that puts the marked corner at world point p.
inline Point center_for_corner(const ShapeTemplate& tpl, double scale, Point p, int idx) {
    return p - scale * tpl.verts[idx];
}

std::string idx_id(const char* prefix, int i, int j, int t = -1);

}  // namespace alphagon::detail
