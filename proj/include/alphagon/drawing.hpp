#pragma once

#include <cstdint>
#include <vector>

#include "alphagon/geometry.hpp"
#include "alphagon/graphs.hpp"
#include "alphagon/scene.hpp"

namespace alphagon {

struct ContactResult {
    double lambda = 1.0;    // shared shrink factor
    ConvexPolygon su, sv;   // shrunken copies, interiorly disjoint
    ConvexPolygon contact;  // their (degenerate) intersection chain
    Point p;                // bend point on the contact set
};

// Scales both shapes at their own centers by the same maximal factor in
// (0,1] at which they still touch without positive shared area. The bend is
// the intersection of segment (center_u, center_v) with the contact set when
// that intersection is nonempty, else the contact set's midpoint. Throws on
// identical centers or disjoint inputs.
ContactResult shrink_to_contact(const ShapeTemplate& tpl, const Homothet& u, const Homothet& v);

struct DrawnEdge {
    int u = 0, v = 0;
    Point bend;
    ConvexPolygon su, sv;  // shrunken copies witnessing containment
};

struct Drawing {
    std::vector<Point> vertex;    // shape centers
    std::vector<DrawnEdge> edges;
    Graph graph;                  // the realized intersection graph
};

// Vertices at centers, one bend per edge at the contact point of the
// shrunken copies. A seeded jitter of 1e-6 times the local radius is applied
// only to bends involved in detected degeneracies.
Drawing canonical_drawing(const Collection& c);

struct CrossingRecord {
    int e1 = -1, e2 = -1;       // indices into Drawing::edges, e1 < e2
    std::vector<Point> points;  // transversal crossing points
    bool degenerate = false;    // touch or collinear overlap, not transversal
    bool double_cross = false;  // the pair crosses twice
};

// All transversal crossings between polylines of non-adjacent edges;
// touches and overlaps are reported with the degenerate flag instead.
std::vector<CrossingRecord> enumerate_crossings(const Drawing& d);

// Maximum number of pairwise non-adjacent edges crossing the given edge
// (a maximum matching over the crossing edge set).
int independent_crossing_number(const Drawing& d, int edge_index);
int independent_crossing_number(const Drawing& d, int edge_index,
                                const std::vector<CrossingRecord>& crossings);

// Max of independent_crossing_number over all edges.
int drawing_independence_index(const Drawing& d);

// A point lying in at least three of the four shapes behind a crossing:
// tries both bends first, then the arrangement vertices of the four shapes.
// Throws std::runtime_error when no witness is found (tolerance failure is
// surfaced, never swallowed).
Point triple_point_witness(const Collection& c, const Drawing& d, const CrossingRecord& r);

enum class HitCoveredVerdict { neither = 0, hit = 1, covered = 2, both = 3 };

// X and Y are homothets of the same regular template; p lies on the boundary
// of X and Y meets the segment from X's center to p. hit: Y contains p or a
// corner of X. covered: the fraction of Y not covered by X stays below the
// n-gon threshold (slack 1e-9).
HitCoveredVerdict check_hit_or_covered(const ShapeTemplate& tpl, const Homothet& X, Point p,
                                       const Homothet& Y);

}  // namespace alphagon
