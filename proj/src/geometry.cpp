#include "alphagon/geometry.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "alphagon/rng.hpp"

namespace alphagon {

namespace {
constexpr double kPi = std::numbers::pi;

struct BBox {
    double xmin = std::numeric_limits<double>::infinity();
    double xmax = -std::numeric_limits<double>::infinity();
    double ymin = std::numeric_limits<double>::infinity();
    double ymax = -std::numeric_limits<double>::infinity();
    void add(Point p) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
};

BBox bbox_of(const std::vector<Point>& v) {
    BBox b;
    for (Point p : v) b.add(p);
    return b;
}
}  // namespace

double norm(Point p) { return std::hypot(p.x, p.y); }

double polygon_area(const std::vector<Point>& v) {
    size_t n = v.size();
    if (n < 3) return 0.0;
    // Anchor at v[0]: all cross products act on short local vectors.
    double s = 0.0;
    Point a = v[0];
    for (size_t i = 1; i + 1 < n; ++i) {
        s += cross(v[i] - a, v[i + 1] - a);
    }
    return 0.5 * s;
}

Point polygon_centroid(const std::vector<Point>& v) {
    size_t n = v.size();
    if (n == 0) return {0, 0};
    if (n < 3) {
        Point s{0, 0};
        for (Point p : v) s = s + p;
        return (1.0 / static_cast<double>(n)) * s;
    }
    Point a = v[0];
    double area2 = 0.0;
    Point acc{0, 0};
    for (size_t i = 1; i + 1 < n; ++i) {
        Point p = v[i] - a, q = v[i + 1] - a;
        double c = cross(p, q);
        area2 += c;
        acc = acc + c * Point{p.x + q.x, p.y + q.y};
    }
    if (area2 == 0.0) {
        Point s{0, 0};
        for (Point p : v) s = s + p;
        return (1.0 / static_cast<double>(n)) * s;
    }
    return a + (1.0 / (3.0 * area2)) * acc;
}

double regular_circumradius(int n) {
    return std::sqrt(2.0 / (n * std::sin(2.0 * kPi / n)));
}

ShapeTemplate make_regular_template(int n, double rotation) {
    if (n < 3) throw std::invalid_argument("regular template needs n >= 3");
    ShapeTemplate t;
    t.kind = TemplateKind::regular;
    t.n = n;
    t.rotation = rotation;
    double r = regular_circumradius(n);
    t.verts.reserve(n);
    for (int i = 0; i < n; ++i) {
        double a = rotation + 2.0 * kPi * i / n;
        t.verts.push_back({r * std::cos(a), r * std::sin(a)});
    }
    t.circumradius = r;
    t.area = polygon_area(t.verts);
    return t;
}

ShapeTemplate validate_irregular_template(const std::vector<Point>& poly) {
    size_t n = poly.size();
    if (n < 3) throw std::invalid_argument("template needs at least 3 vertices");

    std::vector<Point> v = poly;
    double a0 = polygon_area(v);
    if (a0 == 0.0) throw std::invalid_argument("template polygon is degenerate");
    if (a0 < 0) std::reverse(v.begin(), v.end());

    BBox bb = bbox_of(v);
    double ext = std::max(bb.xmax - bb.xmin, bb.ymax - bb.ymin);
    if (!(ext > 0)) throw std::invalid_argument("template polygon is degenerate");

    // Strict convexity, no collinear corner triples.
    for (size_t i = 0; i < n; ++i) {
        Point p = v[i], q = v[(i + 1) % n], r = v[(i + 2) % n];
        double c = cross(q - p, r - q);
        if (c <= eps_geo * ext * ext) {
            throw std::invalid_argument("template must be strictly convex");
        }
    }

    // Look for the corner whose two adjacent sides are orthogonal and span a
    // rectangle containing the polygon, with no other side parallel to them.
    std::string why = "no orthogonal adjacent side pair found";
    for (size_t k = 0; k < n; ++k) {
        Point e_out = v[(k + 1) % n] - v[k];   // bottom candidate
        Point e_in = v[(k + n - 1) % n] - v[k];  // left candidate
        double lo = norm(e_out), li = norm(e_in);
        if (std::abs(dot(e_out, e_in)) > eps_geo * lo * li) continue;

        // Rotate e_out onto +x; CCW order then puts e_in on +y.
        double ca = e_out.x / lo, sa = e_out.y / lo;
        auto rot = [&](Point p) -> Point {
            Point d = p - v[k];
            return {ca * d.x + sa * d.y, -sa * d.x + ca * d.y};
        };
        std::vector<Point> w(n);
        for (size_t i = 0; i < n; ++i) w[i] = rot(v[i]);

        bool ok = true;
        double tol = eps_geo * ext;
        for (Point p : w) {
            if (p.x < -tol || p.x > lo + tol || p.y < -tol || p.y > li + tol) {
                why = "polygon leaves the rectangle spanned by the orthogonal sides";
                ok = false;
                break;
            }
        }
        if (!ok) continue;

        for (size_t i = 0; ok && i < n; ++i) {
            if (i == k || (i + 1) % n == k) continue;  // the marked sides themselves
            Point d = w[(i + 1) % n] - w[i];
            double len = norm(d);
            if (std::abs(d.y) <= eps_geo * len || std::abs(d.x) <= eps_geo * len) {
                why = "another side is parallel to a marked side";
                ok = false;
            }
        }
        if (!ok) continue;

        ShapeTemplate t;
        t.kind = TemplateKind::convex;
        t.n = static_cast<int>(n);
        double area = polygon_area(w);
        double s = 1.0 / std::sqrt(area);
        for (Point& p : w) p = s * p;
        Point c = polygon_centroid(w);
        for (Point& p : w) p = p - c;
        t.verts = w;
        t.area = polygon_area(w);
        t.i_bl = static_cast<int>(k);
        t.i_b = static_cast<int>((k + 1) % n);
        t.i_l = static_cast<int>((k + n - 1) % n);
        double rmax = 0;
        for (Point p : w) rmax = std::max(rmax, norm(p));
        t.circumradius = rmax;
        return t;
    }
    throw std::invalid_argument("template rejected: " + why);
}

ConvexPolygon realize(const ShapeTemplate& tpl, double scale, Point t) {
    ConvexPolygon p;
    p.v.reserve(tpl.verts.size());
    for (Point q : tpl.verts) p.v.push_back({scale * q.x + t.x, scale * q.y + t.y});
    return p;
}

ConvexPolygon convex_clip(const ConvexPolygon& a, const ConvexPolygon& b) {
    ConvexPolygon out;
    if (a.v.size() < 3 || b.v.size() < 3) {
        out.degenerate = true;
        return out;
    }
    // Anchor near the smaller operand; the intersection lives inside it.
    double aa = std::abs(polygon_area(a.v)), ab = std::abs(polygon_area(b.v));
    Point anchor = (ab < aa) ? b.v[0] : a.v[0];

    std::vector<Point> cur;
    cur.reserve(a.v.size() + b.v.size());
    for (Point p : a.v) cur.push_back(p - anchor);
    std::vector<Point> clipPoly;
    clipPoly.reserve(b.v.size());
    for (Point p : b.v) clipPoly.push_back(p - anchor);

    std::vector<Point> next;
    for (size_t e = 0; e < clipPoly.size() && !cur.empty(); ++e) {
        Point e0 = clipPoly[e];
        Point dir = clipPoly[(e + 1) % clipPoly.size()] - e0;
        next.clear();
        size_t m = cur.size();
        for (size_t i = 0; i < m; ++i) {
            Point P = cur[i], Q = cur[(i + 1) % m];
            double d1 = cross(dir, P - e0);
            double d2 = cross(dir, Q - e0);
            if (d1 >= 0) next.push_back(P);
            if ((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) {
                double t = d1 / (d1 - d2);
                next.push_back({P.x + t * (Q.x - P.x), P.y + t * (Q.y - P.y)});
            }
        }
        cur = next;
    }

    for (Point p : cur) out.v.push_back(p + anchor);
    if (cur.size() < 3) {
        out.degenerate = true;
        return out;
    }
    double area = std::abs(polygon_area(cur));
    BBox bb = bbox_of(cur);
    double ext = std::max(bb.xmax - bb.xmin, bb.ymax - bb.ymin);
    out.degenerate = (area <= 32 * DBL_EPSILON * ext * ext);
    return out;
}

double union_area(const std::vector<ConvexPolygon>& parts) {
    // Collect live parts in local (anchored) coordinates.
    std::vector<std::vector<Point>> ps;
    BBox global;
    for (const auto& p : parts) {
        if (p.degenerate || p.v.size() < 3) continue;
        double a = polygon_area(p.v);
        if (a == 0.0) continue;
        std::vector<Point> w = p.v;
        if (a < 0) std::reverse(w.begin(), w.end());
        for (Point q : w) global.add(q);
        ps.push_back(std::move(w));
    }
    if (ps.empty()) return 0.0;
    Point anchor{0.5 * (global.xmin + global.xmax), 0.5 * (global.ymin + global.ymax)};
    for (auto& w : ps)
        for (Point& q : w) q = q - anchor;

    std::vector<double> events;
    for (const auto& w : ps)
        for (Point q : w) events.push_back(q.x);

    // Pairwise edge crossings between different parts add slab boundaries.
    for (size_t i = 0; i < ps.size(); ++i) {
        for (size_t j = i + 1; j < ps.size(); ++j) {
            const auto& A = ps[i];
            const auto& B = ps[j];
            for (size_t ia = 0; ia < A.size(); ++ia) {
                Point p0 = A[ia], p1 = A[(ia + 1) % A.size()];
                Point r = p1 - p0;
                for (size_t ib = 0; ib < B.size(); ++ib) {
                    Point q0 = B[ib], q1 = B[(ib + 1) % B.size()];
                    Point s = q1 - q0;
                    double den = cross(r, s);
                    if (den == 0.0) continue;
                    Point d = q0 - p0;
                    double t = cross(d, s) / den;
                    double u = cross(d, r) / den;
                    if (t > 0 && t < 1 && u > 0 && u < 1) {
                        events.push_back(p0.x + t * r.x);
                    }
                }
            }
        }
    }

    std::sort(events.begin(), events.end());
    events.erase(std::unique(events.begin(), events.end()), events.end());

    std::vector<BBox> boxes(ps.size());
    for (size_t i = 0; i < ps.size(); ++i) boxes[i] = bbox_of(ps[i]);

    double total = 0.0;
    std::vector<std::pair<double, double>> iv;
    for (size_t e = 0; e + 1 < events.size(); ++e) {
        double x1 = events[e], x2 = events[e + 1];
        double w = x2 - x1;
        if (!(w > 0)) continue;
        double xm = 0.5 * (x1 + x2);
        if (!(xm > x1 && xm < x2)) continue;  // slab below representable width
        iv.clear();
        for (size_t i = 0; i < ps.size(); ++i) {
            if (xm <= boxes[i].xmin || xm >= boxes[i].xmax) continue;
            double lo = std::numeric_limits<double>::infinity();
            double hi = -lo;
            const auto& P = ps[i];
            for (size_t k = 0; k < P.size(); ++k) {
                Point a = P[k], b = P[(k + 1) % P.size()];
                if (a.x == b.x) continue;  // vertical edges sit on slab bounds
                if ((a.x - xm) * (b.x - xm) <= 0) {
                    double y = a.y + (b.y - a.y) * ((xm - a.x) / (b.x - a.x));
                    lo = std::min(lo, y);
                    hi = std::max(hi, y);
                }
            }
            if (lo <= hi) iv.emplace_back(lo, hi);
        }
        if (iv.empty()) continue;
        std::sort(iv.begin(), iv.end());
        double L = 0.0, curLo = iv[0].first, curHi = iv[0].second;
        for (size_t i = 1; i < iv.size(); ++i) {
            if (iv[i].first > curHi) {
                L += curHi - curLo;
                curLo = iv[i].first;
                curHi = iv[i].second;
            } else {
                curHi = std::max(curHi, iv[i].second);
            }
        }
        L += curHi - curLo;
        total += L * w;
    }
    return total;
}

bool point_in_convex(const ConvexPolygon& poly, Point p, double tol) {
    size_t n = poly.v.size();
    if (n < 3) return false;
    bool ccw = polygon_area(poly.v) >= 0;
    for (size_t i = 0; i < n; ++i) {
        Point a = poly.v[i], b = poly.v[(i + 1) % n];
        Point e = b - a;
        double len = norm(e);
        if (len == 0) continue;
        double d = cross(e, p - a) / len;  // signed distance, + is inside for CCW
        if (!ccw) d = -d;
        if (d < -tol) return false;
    }
    return true;
}

int point_depth(const std::vector<ConvexPolygon>& parts, Point p, double tol) {
    int c = 0;
    for (const auto& q : parts)
        if (point_in_convex(q, p, tol)) ++c;
    return c;
}

double point_segment_distance(Point p, Point a, Point b) {
    Point d = b - a;
    double L2 = dot(d, d);
    if (L2 == 0) return norm(p - a);
    double t = dot(p - a, d) / L2;
    t = std::clamp(t, 0.0, 1.0);
    return norm(p - (a + t * d));
}

double segment_segment_distance(Point a, Point b, Point c, Point d) {
    // Proper crossing means zero distance.
    auto orient = [](Point p, Point q, Point r) { return cross(q - p, r - p); };
    double o1 = orient(a, b, c), o2 = orient(a, b, d);
    double o3 = orient(c, d, a), o4 = orient(c, d, b);
    if (((o1 > 0) != (o2 > 0)) && ((o3 > 0) != (o4 > 0)) && o1 != 0 && o2 != 0 && o3 != 0 &&
        o4 != 0) {
        return 0.0;
    }
    double m = point_segment_distance(a, c, d);
    m = std::min(m, point_segment_distance(b, c, d));
    m = std::min(m, point_segment_distance(c, a, b));
    m = std::min(m, point_segment_distance(d, a, b));
    return m;
}

double polygon_distance(const ConvexPolygon& a, const ConvexPolygon& b) {
    if (a.v.size() < 3 || b.v.size() < 3) {
        // Fall back to feature distance for degenerate chains.
        double m = std::numeric_limits<double>::infinity();
        const auto& A = a.v;
        const auto& B = b.v;
        for (Point p : A)
            for (size_t i = 0; i < B.size(); ++i)
                m = std::min(m, point_segment_distance(p, B[i], B[(i + 1) % B.size()]));
        for (Point p : B)
            for (size_t i = 0; i < A.size(); ++i)
                m = std::min(m, point_segment_distance(p, A[i], A[(i + 1) % A.size()]));
        return m;
    }
    // Separating axis test over both edge normal sets.
    auto separated = [](const ConvexPolygon& P, const ConvexPolygon& Q) {
        size_t n = P.v.size();
        for (size_t i = 0; i < n; ++i) {
            Point p = P.v[i], q = P.v[(i + 1) % n];
            Point nrm{q.y - p.y, p.x - q.x};  // outward for CCW
            double best = std::numeric_limits<double>::infinity();
            for (Point w : Q.v) best = std::min(best, dot(nrm, w - p));
            if (best > 0) return true;
        }
        return false;
    };
    bool accw = polygon_area(a.v) >= 0, bccw = polygon_area(b.v) >= 0;
    ConvexPolygon A = a, B = b;
    if (!accw) std::reverse(A.v.begin(), A.v.end());
    if (!bccw) std::reverse(B.v.begin(), B.v.end());
    if (!separated(A, B) && !separated(B, A)) return 0.0;

    double m = std::numeric_limits<double>::infinity();
    size_t na = A.v.size(), nb = B.v.size();
    for (size_t i = 0; i < na; ++i)
        for (size_t j = 0; j < nb; ++j)
            m = std::min(m, segment_segment_distance(A.v[i], A.v[(i + 1) % na], B.v[j],
                                                     B.v[(j + 1) % nb]));
    return m;
}

double polygon_boundary_distance(const ConvexPolygon& poly, Point p) {
    double m = std::numeric_limits<double>::infinity();
    size_t n = poly.v.size();
    for (size_t i = 0; i < n; ++i)
        m = std::min(m, point_segment_distance(p, poly.v[i], poly.v[(i + 1) % n]));
    return m;
}

double ray_exit_t(const ConvexPolygon& poly, Point center, Point dir) {
    double best = std::numeric_limits<double>::infinity();
    size_t n = poly.v.size();
    for (size_t i = 0; i < n; ++i) {
        Point a = poly.v[i], b = poly.v[(i + 1) % n];
        Point e = b - a;
        double den = cross(e, dir);
        if (den == 0) continue;
        double t = cross(e, a - center) / den;
        if (t <= 0) continue;
        Point hit = center + t * dir;
        // Confirm the hit lies on the segment.
        double u = (std::abs(e.x) > std::abs(e.y)) ? (hit.x - a.x) / e.x : (hit.y - a.y) / e.y;
        if (u < -1e-12 || u > 1 + 1e-12) continue;
        best = std::min(best, t);
    }
    return best;
}

double segment_area(int n, int m) {
    if (n < 3) throw std::invalid_argument("segment_area: n must be at least 3");
    if (m < 1 || m > n + 1) throw std::invalid_argument("segment_area: m must be in [1, n+1]");
    if (m == n + 1) return 1.0;
    if (2 * (m - 1) == n) return 0.5;  // the chord is a diameter
    if (2 * m <= n + 2) {
        double theta = 2.0 * kPi / n;
        double k = m - 1;
        return (k * std::sin(theta) - std::sin(k * theta)) / (n * std::sin(theta));
    }
    return 1.0 - segment_area(n, n - m + 2);
}

ThresholdInfo threshold_info(int n) {
    if (n < 3) throw std::invalid_argument("threshold_s: n must be at least 3");
    ThresholdInfo info;
    info.branch = n % 4;
    switch (info.branch) {
        case 0: info.m_star = n / 2 + 2; break;
        case 1: info.m_star = (n + 3) / 2; break;
        case 2: info.m_star = n / 2 + 1; break;
        default: info.m_star = (n + 5) / 2; break;
    }
    info.value = segment_area(n, info.m_star);
    return info;
}

double threshold_s(int n) { return threshold_info(n).value; }

namespace {

struct TripleConfig {
    ShapeTemplate tpl;
    double scale[3];
    Point center[3];
};

TripleConfig symmetric_triple(int n) {
    TripleConfig c;
    c.tpl = make_regular_template(n, 0.0);
    ConvexPolygon base;
    base.v = c.tpl.verts;
    for (int i = 0; i < 3; ++i) {
        double phi = 2.0 * kPi * i / 3.0;
        Point dir{std::cos(phi), std::sin(phi)};
        double rho = ray_exit_t(base, {0, 0}, dir);
        c.scale[i] = 1.0;
        c.center[i] = {-rho * dir.x, -rho * dir.y};
    }
    return c;
}

// Covered fraction of shape i by the union of the other two.
double triple_coverage(const TripleConfig& c, int i) {
    ConvexPolygon self = realize(c.tpl, c.scale[i], c.center[i]);
    std::vector<ConvexPolygon> parts;
    for (int j = 0; j < 3; ++j) {
        if (j == i) continue;
        ConvexPolygon other = realize(c.tpl, c.scale[j], c.center[j]);
        ConvexPolygon cl = convex_clip(self, other);
        if (!cl.degenerate) parts.push_back(std::move(cl));
    }
    double denom = std::abs(polygon_area(self.v));
    if (denom == 0) return 0.0;
    return union_area(parts) / denom;
}

}  // namespace

TripleOverlapReport min_triple_overlap_report(int n, int perturbations, std::uint64_t seed) {
    if (n <= 6) throw std::invalid_argument("min_triple_overlap: n must exceed 6");
    TripleConfig sym = symmetric_triple(n);
    TripleOverlapReport rep;
    rep.value = triple_coverage(sym, 0);
    rep.min_perturbed = rep.value;

    Rng rng(seed);
    double r0 = sym.tpl.circumradius;
    double tol = eps_geo * r0;
    int accepted = 0;
    long attempts = 0;
    long cap = 400L * std::max(perturbations, 1);
    while (accepted < perturbations && attempts < cap) {
        ++attempts;
        TripleConfig c = sym;
        for (int i = 0; i < 3; ++i) {
            c.scale[i] *= std::exp(0.02 * rng.normal());
            c.center[i].x += 0.02 * r0 * rng.normal();
            c.center[i].y += 0.02 * r0 * rng.normal();
        }
        // Keep only configurations still meeting at the origin.
        bool meets = true;
        for (int i = 0; i < 3 && meets; ++i) {
            ConvexPolygon s = realize(c.tpl, c.scale[i], c.center[i]);
            meets = point_in_convex(s, {0, 0}, tol);
        }
        if (!meets) continue;
        ++accepted;
        double worst = 0.0;
        for (int i = 0; i < 3; ++i) worst = std::max(worst, triple_coverage(c, i));
        rep.min_perturbed = std::min(rep.min_perturbed, worst);
    }
    rep.accepted = accepted;
    return rep;
}

double min_triple_overlap(int n) {
    TripleOverlapReport rep = min_triple_overlap_report(n, 48, 0x5eed);
    if (rep.min_perturbed < rep.value - eps_area) {
        throw std::logic_error("min_triple_overlap: symmetric configuration is not locally minimal");
    }
    return rep.value;
}

}  // namespace alphagon
