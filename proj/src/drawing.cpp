#include "alphagon/drawing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "alphagon/rng.hpp"

namespace alphagon {

namespace {

// Parameter interval of segment a->b inside a convex polygon, or empty.
bool segment_in_polygon_interval(const ConvexPolygon& poly, Point a, Point b, double slack,
                                 double* t0_out, double* t1_out) {
    if (poly.v.size() < 3) return false;
    double t0 = 0.0, t1 = 1.0;
    size_t n = poly.v.size();
    bool ccw = polygon_area(poly.v) >= 0;
    for (size_t i = 0; i < n; ++i) {
        Point p = poly.v[i], q = poly.v[(i + 1) % n];
        Point e = q - p;
        double d0 = cross(e, a - p);
        double d1 = cross(e, b - p);
        if (!ccw) {
            d0 = -d0;
            d1 = -d1;
        }
        d0 += slack;
        d1 += slack;
        if (d0 < 0 && d1 < 0) return false;
        if (d0 < 0) t0 = std::max(t0, d0 / (d0 - d1));
        if (d1 < 0) t1 = std::min(t1, d0 / (d0 - d1));
    }
    if (t0 > t1) return false;
    if (t0_out) *t0_out = t0;
    if (t1_out) *t1_out = t1;
    return true;
}

Point chain_midpoint(const ConvexPolygon& chain) {
    if (chain.v.empty()) return {0, 0};
    Point s{0, 0};
    for (Point p : chain.v) s = s + p;
    return (1.0 / static_cast<double>(chain.v.size())) * s;
}

}  // namespace

ContactResult shrink_to_contact(const ShapeTemplate& tpl, const Homothet& u, const Homothet& v) {
    Point cu = u.translate, cv = v.translate;
    if (cu.x == cv.x && cu.y == cv.y) {
        throw std::invalid_argument("shrink_to_contact: identical centers");
    }
    auto at = [&](double lambda, const Homothet& h) {
        return realize(tpl, lambda * h.scale, h.translate);
    };
    auto positive_overlap = [&](double lambda) {
        ConvexPolygon cl = convex_clip(at(lambda, u), at(lambda, v));
        return !cl.degenerate;
    };

    ContactResult res;
    ConvexPolygon full = convex_clip(at(1.0, u), at(1.0, v));
    if (full.degenerate) {
        if (full.v.empty()) {
            double r = tpl.circumradius * (u.scale + v.scale);
            if (polygon_distance(at(1.0, u), at(1.0, v)) > eps_contact_rel * r) {
                throw std::invalid_argument("shrink_to_contact: shapes do not intersect");
            }
        }
        res.lambda = 1.0;
        res.su = at(1.0, u);
        res.sv = at(1.0, v);
        res.contact = full;
        if (res.contact.v.empty()) {
            // Exact point contact that clipping lost to rounding: use the
            // closest feature pair midpoint via a tiny inflation.
            ConvexPolygon grown = convex_clip(at(1.0 + 1e-9, u), at(1.0 + 1e-9, v));
            res.contact = grown;
        }
    } else {
        double lo = 0.0, hi = 1.0;
        for (int it = 0; it < 60; ++it) {
            double mid = 0.5 * (lo + hi);
            if (positive_overlap(mid)) {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        res.lambda = lo;
        res.su = at(lo, u);
        res.sv = at(lo, v);
        res.contact = convex_clip(at(hi, u), at(hi, v));
        res.contact.degenerate = true;  // area is below any meaningful scale
    }

    // Bend: segment (cu, cv) against both copies, else the contact midpoint.
    double slack = 1e-12 * tpl.circumradius * (u.scale + v.scale);
    double a0, a1, b0, b1;
    if (segment_in_polygon_interval(res.su, cu, cv, slack, &a0, &a1) &&
        segment_in_polygon_interval(res.sv, cu, cv, slack, &b0, &b1)) {
        double t0 = std::max(a0, b0), t1 = std::min(a1, b1);
        if (t0 <= t1) {
            double t = 0.5 * (t0 + t1);
            res.p = {cu.x + t * (cv.x - cu.x), cu.y + t * (cv.y - cu.y)};
            return res;
        }
    }
    res.p = chain_midpoint(res.contact);
    return res;
}

Drawing canonical_drawing(const Collection& c) {
    Drawing d;
    d.graph = intersection_graph(c);
    d.vertex.reserve(c.shapes.size());
    for (const auto& h : c.shapes) d.vertex.push_back(h.translate);

    for (auto [u, v] : d.graph.edges) {
        ContactResult cr = shrink_to_contact(c.tpl, c.shapes[u], c.shapes[v]);
        DrawnEdge e;
        e.u = u;
        e.v = v;
        e.bend = cr.p;
        e.su = cr.su;
        e.sv = cr.sv;
        d.edges.push_back(std::move(e));
    }

    // Degeneracy repair: nudge offending bends inside their own copies.
    Rng rng(0xD12A5EEDULL);
    auto local_radius = [&](const DrawnEdge& e) {
        return c.tpl.circumradius *
               std::min(c.shapes[e.u].scale, c.shapes[e.v].scale);
    };
    for (int round = 0; round < 8; ++round) {
        std::vector<int> flagged;
        size_t m = d.edges.size();
        for (size_t i = 0; i < m; ++i) {
            double ri = local_radius(d.edges[i]);
            bool bad = false;
            // bend on a vertex
            for (Point w : d.vertex) {
                if (norm(d.edges[i].bend - w) <= 1e-9 * ri) bad = true;
            }
            for (size_t j = 0; j < m && !bad; ++j) {
                if (j == i) continue;
                double rj = local_radius(d.edges[j]);
                double tol = 1e-9 * std::min(ri, rj);
                // coincident bends
                if (norm(d.edges[i].bend - d.edges[j].bend) <= tol) {
                    bad = true;
                    break;
                }
                // bend sitting on a foreign polyline
                const DrawnEdge& ej = d.edges[j];
                bool adjacent = ej.u == d.edges[i].u || ej.u == d.edges[i].v ||
                                ej.v == d.edges[i].u || ej.v == d.edges[i].v;
                if (adjacent) continue;
                if (point_segment_distance(d.edges[i].bend, d.vertex[ej.u], ej.bend) <= tol ||
                    point_segment_distance(d.edges[i].bend, ej.bend, d.vertex[ej.v]) <= tol) {
                    bad = true;
                }
            }
            if (bad) flagged.push_back(static_cast<int>(i));
        }
        if (flagged.empty()) break;
        for (int idx : flagged) {
            DrawnEdge& e = d.edges[idx];
            double r = local_radius(e);
            for (int attempt = 0; attempt < 16; ++attempt) {
                double ang = rng.uniform(0.0, 6.283185307179586);
                Point cand{e.bend.x + 1e-6 * r * std::cos(ang),
                           e.bend.y + 1e-6 * r * std::sin(ang)};
                double tol = 1e-9 * r;
                if (point_in_convex(e.su, cand, tol) || point_in_convex(e.sv, cand, tol)) {
                    e.bend = cand;
                    break;
                }
            }
        }
    }
    return d;
}

namespace {

struct SegCross {
    int kind = 0;  // 0 none, 1 transversal, 2 touch, 3 overlap
    Point p;
};

SegCross segment_cross(Point a, Point b, Point c2, Point d2) {
    SegCross out;
    Point r = b - a, s = d2 - c2;
    double den = cross(r, s);
    double o1 = cross(r, c2 - a);
    double o2 = cross(r, d2 - a);
    double o3 = cross(s, a - c2);
    double o4 = cross(s, b - c2);
    if (den == 0) {
        if (o1 == 0 && o2 == 0) {
            // collinear: overlap iff projections intersect in more than a point
            double len2 = dot(r, r);
            if (len2 == 0) return out;
            double t0 = dot(c2 - a, r) / len2;
            double t1 = dot(d2 - a, r) / len2;
            if (t0 > t1) std::swap(t0, t1);
            double lo = std::max(0.0, t0), hi = std::min(1.0, t1);
            if (lo < hi) out.kind = 3;
            else if (lo == hi) out.kind = 2;
            return out;
        }
        return out;
    }
    // Solve a + t r = c2 + u s.
    double t = cross(c2 - a, s) / den;
    double uu = cross(c2 - a, r) / den;
    bool insideT = t > 0 && t < 1, insideU = uu > 0 && uu < 1;
    bool onT = t >= 0 && t <= 1, onU = uu >= 0 && uu <= 1;
    if (!onT || !onU) return out;
    out.p = {a.x + t * r.x, a.y + t * r.y};
    if (insideT && insideU && ((o1 > 0) != (o2 > 0)) && ((o3 > 0) != (o4 > 0))) {
        out.kind = 1;
    } else {
        out.kind = 2;  // endpoint touch or grazing contact
    }
    return out;
}

}  // namespace

std::vector<CrossingRecord> enumerate_crossings(const Drawing& d) {
    std::vector<CrossingRecord> out;
    size_t m = d.edges.size();
    for (size_t i = 0; i < m; ++i) {
        const DrawnEdge& a = d.edges[i];
        Point ai[3] = {d.vertex[a.u], a.bend, d.vertex[a.v]};
        for (size_t j = i + 1; j < m; ++j) {
            const DrawnEdge& b = d.edges[j];
            if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) continue;
            Point bj[3] = {d.vertex[b.u], b.bend, d.vertex[b.v]};
            CrossingRecord rec;
            rec.e1 = static_cast<int>(i);
            rec.e2 = static_cast<int>(j);
            bool touch = false;
            for (int sa = 0; sa < 2; ++sa) {
                for (int sb = 0; sb < 2; ++sb) {
                    SegCross sc = segment_cross(ai[sa], ai[sa + 1], bj[sb], bj[sb + 1]);
                    if (sc.kind == 1) {
                        rec.points.push_back(sc.p);
                    } else if (sc.kind != 0) {
                        touch = true;
                    }
                }
            }
            if (!rec.points.empty()) {
                rec.double_cross = rec.points.size() >= 2;
                out.push_back(std::move(rec));
            } else if (touch) {
                rec.degenerate = true;
                out.push_back(std::move(rec));
            }
        }
    }
    return out;
}

int independent_crossing_number(const Drawing& d, int edge_index,
                                const std::vector<CrossingRecord>& crossings) {
    if (edge_index < 0 || edge_index >= static_cast<int>(d.edges.size())) {
        throw std::invalid_argument("independent_crossing_number: unknown edge");
    }
    Graph sub(d.graph.n);
    for (const auto& r : crossings) {
        if (r.degenerate) continue;
        int other = -1;
        if (r.e1 == edge_index) other = r.e2;
        if (r.e2 == edge_index) other = r.e1;
        if (other < 0) continue;
        sub.add_edge(d.edges[other].u, d.edges[other].v);
    }
    return max_matching(sub);
}

int independent_crossing_number(const Drawing& d, int edge_index) {
    return independent_crossing_number(d, edge_index, enumerate_crossings(d));
}

int drawing_independence_index(const Drawing& d) {
    auto recs = enumerate_crossings(d);
    int best = 0;
    for (size_t e = 0; e < d.edges.size(); ++e) {
        best = std::max(best, independent_crossing_number(d, static_cast<int>(e), recs));
    }
    return best;
}

Point triple_point_witness(const Collection& c, const Drawing& d, const CrossingRecord& r) {
    if (r.e1 < 0 || r.e2 < 0 || r.e1 >= static_cast<int>(d.edges.size()) ||
        r.e2 >= static_cast<int>(d.edges.size()) || r.degenerate) {
        throw std::invalid_argument("triple_point_witness: not a crossing record");
    }
    const DrawnEdge& e1 = d.edges[r.e1];
    const DrawnEdge& e2 = d.edges[r.e2];
    int ids[4] = {e1.u, e1.v, e2.u, e2.v};
    ConvexPolygon shapes[4];
    double tol[4];
    for (int i = 0; i < 4; ++i) {
        shapes[i] = realize_shape(c, ids[i]);
        tol[i] = eps_geo * c.shapes[ids[i]].scale * c.tpl.circumradius;
    }
    auto depth_ok = [&](Point p) {
        int depth = 0;
        for (int i = 0; i < 4; ++i) {
            if (point_in_convex(shapes[i], p, tol[i])) ++depth;
        }
        return depth >= 3;
    };
    // Each bend already lies in its own two shapes; one hop into the other
    // pair's shapes gives depth three.
    if (depth_ok(e2.bend)) return e2.bend;
    if (depth_ok(e1.bend)) return e1.bend;
    // Arrangement vertices of the four shapes.
    for (int i = 0; i < 4; ++i) {
        for (Point p : shapes[i].v) {
            if (depth_ok(p)) return p;
        }
        for (int j = i + 1; j < 4; ++j) {
            size_t ni = shapes[i].v.size(), nj = shapes[j].v.size();
            for (size_t ei = 0; ei < ni; ++ei) {
                Point a = shapes[i].v[ei], b = shapes[i].v[(ei + 1) % ni];
                for (size_t ej = 0; ej < nj; ++ej) {
                    Point p = shapes[j].v[ej], q = shapes[j].v[(ej + 1) % nj];
                    SegCross sc = segment_cross(a, b, p, q);
                    if (sc.kind == 1 || sc.kind == 2) {
                        if (depth_ok(sc.p)) return sc.p;
                    }
                }
            }
        }
    }
    throw std::runtime_error("triple_point_witness: no witness found within tolerance");
}

HitCoveredVerdict check_hit_or_covered(const ShapeTemplate& tpl, const Homothet& X, Point p,
                                       const Homothet& Y) {
    if (tpl.kind != TemplateKind::regular) {
        throw std::invalid_argument("check_hit_or_covered: regular templates only");
    }
    ConvexPolygon px = realize(tpl, X.scale, X.translate);
    ConvexPolygon py = realize(tpl, Y.scale, Y.translate);
    double rx = X.scale * tpl.circumradius;
    double ry = Y.scale * tpl.circumradius;
    if (polygon_boundary_distance(px, p) > 1e-6 * rx) {
        throw std::invalid_argument("check_hit_or_covered: p is not on the boundary of X");
    }
    // Y must meet the segment from X's center to p.
    {
        Point cx = X.translate;
        double dmin = std::numeric_limits<double>::infinity();
        bool inside = point_in_convex(py, cx, 0.0) || point_in_convex(py, p, 0.0);
        size_t n = py.v.size();
        for (size_t i = 0; i < n && !inside; ++i) {
            dmin = std::min(dmin, segment_segment_distance(cx, p, py.v[i], py.v[(i + 1) % n]));
        }
        if (!inside && dmin > 1e-9 * (rx + ry)) {
            throw std::invalid_argument("check_hit_or_covered: Y misses the center-to-p segment");
        }
    }

    double tolHit = 1e-9 * ry;
    bool hit = point_in_convex(py, p, tolHit);
    for (size_t i = 0; i < px.v.size() && !hit; ++i) {
        hit = point_in_convex(py, px.v[i], tolHit);
    }

    ConvexPolygon overlap = convex_clip(py, px);
    double covered_area = overlap.degenerate ? 0.0 : std::abs(polygon_area(overlap.v));
    double areaY = std::abs(polygon_area(py.v));
    double uncovered = 1.0 - covered_area / areaY;
    bool covered = uncovered <= threshold_s(tpl.n) + 1e-9;

    if (hit && covered) return HitCoveredVerdict::both;
    if (hit) return HitCoveredVerdict::hit;
    if (covered) return HitCoveredVerdict::covered;
    return HitCoveredVerdict::neither;
}

}  // namespace alphagon
