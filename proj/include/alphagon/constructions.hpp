#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "alphagon/graphs.hpp"
#include "alphagon/scene.hpp"

namespace alphagon {

// Raised when a construction cannot be realized in double precision: the
// shrinking placement schedule would need sizes or clearances below the
// representable margin at the contact point.
class precision_infeasible : public std::runtime_error {
  public:
    precision_infeasible(const std::string& msg, int stage, double size)
        : std::runtime_error(msg), stage(stage), size(size) {}
    int stage = 0;    // pair or level index that failed
    double size = 0;  // offending magnitude
};

// Contact-grid scene: (k+1)^2 large shapes joined by chains of two
// subdivision shapes, all intersections zero-area contacts. The intersection
// graph is the (k+1)x(k+1) grid with every edge subdivided twice. Supported
// templates: the axis-aligned square, regular 2m-gons with vertical sides,
// validated irregular templates.
Scene gen_large_grid(const ShapeTemplate& tpl, int k, double alpha);

// Two host shapes in contact at a designated point plus k nested pairs
// (X_i, Y_i) crossing at that contact: the drawing's designated edge gains k
// independent crossings. variant selects the even-gon corner construction
// (host cap segment_area(n,4)) instead of the threshold construction.
Scene gen_crossing_gadget(int n, double alpha, int k, bool variant = false);

// Nested-grid family: a coarse contact grid whose k^2 cells each hold a
// scaled copy of the (k-1)-level contact grid, with k disjoint connecting
// paths per shared wall crossing inside a staircase of shrinking pairs. The
// blueprint certifies a k^2 x k^2 grid subdivision in the intersection
// graph while the radius stays linear in k.
Scene gen_nested_grid(const ShapeTemplate& tpl, int k, double alpha);

int k_max_for_template(const ShapeTemplate& tpl);

struct BlueprintReport {
    bool ok = false;
    std::vector<std::string> failures;
    std::map<std::string, double> metrics;
};

// Re-derives everything the blueprint claims: intended edges against the
// intersection graph (equality when exhaustive), intended crossings against
// the canonical drawing, the grid subdivision against the graph, freeness.
BlueprintReport verify_blueprint(const Scene& s);

// Grid-subdivision certificate assembled from the blueprint's grid map and
// paths, with vertex ids resolved against the collection.
GridSubdivisionCert blueprint_grid_cert(const Scene& s);

}  // namespace alphagon
