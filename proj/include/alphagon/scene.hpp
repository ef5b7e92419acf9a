#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "alphagon/geometry.hpp"
#include "alphagon/graphs.hpp"

namespace alphagon {

// One scaled translate of the collection's template.
struct Homothet {
    std::string id;
    double scale = 1.0;
    Point translate;
};

struct Collection {
    ShapeTemplate tpl;
    double alpha = 0.0;
    std::vector<Homothet> shapes;

    int index_of(const std::string& id) const;  // -1 if absent
};

ConvexPolygon realize_shape(const Collection& c, int i);

struct EdgeRef {
    std::string u, v;
};

struct CrossingRef {
    EdgeRef a, b;
};

struct GridVertexRef {
    int row = 0, col = 0;
    std::string id;
};

struct GridPathRef {
    int r1 = 0, c1 = 0, r2 = 0, c2 = 0;  // grid endpoints
    std::vector<std::string> ids;        // full shape sequence, endpoints included
};

struct CellRef {
    int row = 0, col = 0;
    std::vector<std::string> boundary;
};

// Machine-checkable construction record embedded in scene files.
struct Blueprint {
    int version = 1;
    std::map<std::string, double> parameters;
    bool exhaustive = false;  // intended_edges claim to be the whole edge set
    std::vector<EdgeRef> intended_edges;
    std::optional<EdgeRef> designated_edge;
    std::vector<CrossingRef> intended_crossings;
    std::vector<GridVertexRef> grid_map;
    std::vector<GridPathRef> grid_paths;
    std::vector<CellRef> cells;
};

struct Scene {
    Collection coll;
    std::optional<Blueprint> blueprint;
};

// Edge iff the closed shapes come within eps_contact_rel times the sum of
// their circumradii; point contacts count.
Graph intersection_graph(const Collection& c);

// 1 - (covered area of shape v) / (area of shape v), clamped to [0,1].
double free_fraction(const Collection& c, int v);

struct FreenessReport {
    std::vector<double> free;  // aligned with c.shapes
    double min_free = 1.0;
    int worst = -1;
    bool verdict = false;  // min_free >= alpha - eps_area
};

FreenessReport check_alpha_free(const Collection& c);

// Deterministic in seed; output passes check_alpha_free with margin. Shapes
// that cannot be placed after bounded rejection and shrink rounds go to a
// disjoint overflow row outside the sampling box.
Collection gen_random_collection(const ShapeTemplate& tpl, int count, double alpha,
                                 std::uint64_t seed);

}  // namespace alphagon
