#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace alphagon {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
double norm(Point p);

// Vertices in counterclockwise order. `degenerate` marks results whose area
// vanishes relative to their own extent (contact sets, slivers); their vertex
// chain is still meaningful as a point/segment witness.
struct ConvexPolygon {
    std::vector<Point> v;
    bool degenerate = false;
};

enum class TemplateKind { regular, convex };

// Unit-area template shape centered at its centroid. Homothetic copies are
// scale * v + t with scale > 0; no rotation ever gets applied to copies.
struct ShapeTemplate {
    TemplateKind kind = TemplateKind::regular;
    int n = 0;              // corner count
    double rotation = 0.0;  // regular kind only
    std::vector<Point> verts;
    double circumradius = 0.0;  // max vertex distance from centroid
    double area = 1.0;          // shoelace area of verts (1 up to roundoff)
    // convex kind: indices of the marked corners (bottom-left, bottom-right
    // along the bottom side, top-left along the left side)
    int i_bl = -1, i_b = -1, i_l = -1;
};

// Circumradius of the unit-area regular n-gon.
double regular_circumradius(int n);

ShapeTemplate make_regular_template(int n, double rotation);

// Accepts a strictly convex polygon with exactly one pair of orthogonal
// adjacent sides, contained in the rectangle those sides span, with no other
// side parallel to either. Canonicalizes: rotates the orthogonal sides onto
// the +x/+y axes, scales to unit area, centers the centroid at the origin.
// Throws std::invalid_argument with a reason otherwise.
ShapeTemplate validate_irregular_template(const std::vector<Point>& poly);

ConvexPolygon realize(const ShapeTemplate& tpl, double scale, Point t);

// Signed area, positive for counterclockwise. Anchored at v[0] so absolute
// coordinates do not poison the sum.
double polygon_area(const std::vector<Point>& v);
inline double polygon_area(const ConvexPolygon& p) { return polygon_area(p.v); }

Point polygon_centroid(const std::vector<Point>& v);

// Intersection of two convex polygons (Sutherland-Hodgman). Arithmetic is
// anchored near the smaller operand. Degenerate results keep their chain.
ConvexPolygon convex_clip(const ConvexPolygon& a, const ConvexPolygon& b);

// Exact area of the union via vertical decomposition: slab boundaries at
// every vertex and every pairwise edge crossing, midpoint evaluation per
// slab (the covered length is linear inside a slab, so this is exact).
double union_area(const std::vector<ConvexPolygon>& parts);

// Closed containment with an absolute slack on the signed edge distances.
bool point_in_convex(const ConvexPolygon& poly, Point p, double tol);

// Number of parts containing p (closed, same slack).
int point_depth(const std::vector<ConvexPolygon>& parts, Point p, double tol);

// 0 if the closed polygons intersect, else the min vertex/edge distance.
double polygon_distance(const ConvexPolygon& a, const ConvexPolygon& b);

double point_segment_distance(Point p, Point a, Point b);
double segment_segment_distance(Point a, Point b, Point c, Point d);

// Distance from p to the boundary of poly.
double polygon_boundary_distance(const ConvexPolygon& poly, Point p);

// First positive ray parameter t where center + t*dir leaves poly
// (poly must contain center strictly).
double ray_exit_t(const ConvexPolygon& poly, Point center, Point dir);

// Area fraction of the unit-area regular n-gon cut off by the chord through
// m consecutive corners, 1 <= m <= n+1 (m = n+1 means the whole polygon).
double segment_area(int n, int m);

struct ThresholdInfo {
    double value = 0.0;
    int m_star = 0;  // corner count of the segment realizing the value
    int branch = 0;  // n mod 4
};

ThresholdInfo threshold_info(int n);
double threshold_s(int n);

// Covered fraction of one shape in the rotationally symmetric three-shape
// contact configuration (all unit scale, centers 120 degrees apart around
// the common boundary point). Requires n > 6.
double min_triple_overlap(int n);

struct TripleOverlapReport {
    double value = 0.0;          // symmetric configuration
    double min_perturbed = 0.0;  // smallest coverage seen over perturbations
    int accepted = 0;            // perturbations evaluated
};

// Randomized local search around the symmetric configuration: jitters scales
// and centers, keeps only configurations still meeting at the common point.
TripleOverlapReport min_triple_overlap_report(int n, int perturbations, std::uint64_t seed);

// Tolerance policy. Geometric predicates that compare against construction
// data use eps_geo scaled by a local length; area verdicts use eps_area;
// contact detection uses eps_contact_rel times the sum of circumradii.
inline constexpr double eps_geo = 1e-9;
inline constexpr double eps_area = 1e-7;
inline constexpr double eps_contact_rel = 1e-9;

}  // namespace alphagon
