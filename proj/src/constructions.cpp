#include "alphagon/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "alphagon/drawing.hpp"
#include "alphagon/geometry.hpp"
#include "alphagon/graphs.hpp"
#include "alphagon/scene.hpp"
#include "construct_internal.hpp"

namespace alphagon {

namespace detail {

std::string idx_id(const char* prefix, int i, int j, int t) {
    char buf[64];
    if (t < 0) {
        std::snprintf(buf, sizeof buf, "%s_%d_%d", prefix, i, j);
    } else {
        std::snprintf(buf, sizeof buf, "%s_%d_%d_%d", prefix, i, j, t);
    }
    return buf;
}

Point chain_step(const ShapeTemplate& tpl, Point prev_center, double prev_scale,
                 double next_scale, Dir dir) {
    double s = prev_scale + next_scale;
    if (tpl.kind == TemplateKind::regular) {
        int n = tpl.n;
        if (n % 2 != 0) {
            throw std::invalid_argument(
                "chain_step: a regular template needs an even corner count to "
                "stack along opposite features");
        }
        double R = tpl.circumradius;
        double w = R * std::cos(pi / n);
        switch (dir) {
            case Dir::east:
                return {prev_center.x + s * w, prev_center.y};
            case Dir::west:
                return {prev_center.x - s * w, prev_center.y};
            case Dir::north:
            case Dir::south: {
                // Vertical-side orientation: the extreme horizontal features
                // are sides when n % 4 == 0 and corners when n % 4 == 2.
                double step = (n % 4 == 0) ? s * w : s * R;
                return {prev_center.x,
                        prev_center.y + (dir == Dir::north ? step : -step)};
            }
        }
    } else {
        const Point vbl = tpl.verts[tpl.i_bl];
        const Point vb = tpl.verts[tpl.i_b];
        const Point vl = tpl.verts[tpl.i_l];
        switch (dir) {
            case Dir::east:
                return prev_center + prev_scale * vb - next_scale * vbl;
            case Dir::west:
                return prev_center + prev_scale * vbl - next_scale * vb;
            case Dir::north:
                return prev_center + prev_scale * vl - next_scale * vbl;
            case Dir::south:
                return prev_center + prev_scale * vbl - next_scale * vl;
        }
    }
    return prev_center;
}

}  // namespace detail

namespace {

using detail::Dir;
using detail::idx_id;
using detail::pi;

std::string fmt_g(double x) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

void require_grid_template(const ShapeTemplate& tpl) {
    if (tpl.kind != TemplateKind::regular) return;
    int n = tpl.n;
    if (n % 2 != 0) {
        throw std::invalid_argument(
            "grid construction: regular templates need an even corner count "
            "so opposite features line up");
    }
    double period = 2.0 * pi / n;
    double dev = std::remainder(tpl.rotation - pi / n, period);
    if (std::abs(dev) > 1e-9) {
        throw std::invalid_argument(
            "grid construction: regular template must be rotated so two sides "
            "are vertical");
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// Large grids: unit copies on a lattice, joined by two quarter-scale copies
// per lattice edge so every adjacency is a zero-area contact and every copy
// stays fully free.
// ---------------------------------------------------------------------------

Scene gen_large_grid(const ShapeTemplate& tpl, int k, double alpha) {
    if (k < 1) throw std::invalid_argument("gen_large_grid: k must be at least 1");
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        throw std::invalid_argument("gen_large_grid: alpha must lie in [0, 1]");
    }
    require_grid_template(tpl);

    constexpr double sub = 0.25;
    const int K = k + 1;

    detail::SceneBuilder b(tpl, alpha);
    Blueprint& bp = *b.scene.blueprint;

    std::vector<std::vector<Point>> bigc(K, std::vector<Point>(K));
    std::vector<std::vector<std::pair<Point, Point>>> rowc(
        K, std::vector<std::pair<Point, Point>>(k));
    std::vector<std::vector<std::pair<Point, Point>>> colc(
        k, std::vector<std::pair<Point, Point>>(K));

    if (tpl.kind == TemplateKind::regular) {
        const int n = tpl.n;
        const double R = tpl.circumradius;
        const double w = R * std::cos(pi / n);
        const double ws = sub * w;
        const double Rs = sub * R;
        const double hs = Rs * std::sin(pi / n);
        const double Dx = 2.0 * w + 4.0 * ws;
        const double Dy = (n % 4 == 0) ? Dx : 3.0 * R;

        for (int j = 0; j < K; ++j) {
            for (int i = 0; i < K; ++i) bigc[i][j] = {i * Dx, j * Dy};
        }
        for (int j = 0; j < K; ++j) {
            for (int i = 0; i < k; ++i) {
                double x0 = i * Dx, y0 = j * Dy;
                // Side contact, corner-to-corner pinch, side contact.
                rowc[j][i] = {{x0 + w + ws, y0 + hs},
                              {x0 + w + 3.0 * ws, y0 - hs}};
            }
        }
        for (int j = 0; j < k; ++j) {
            for (int i = 0; i < K; ++i) {
                double x0 = i * Dx, y0 = j * Dy;
                if (n % 4 == 2) {
                    // Corners point up/down: stack straight through them.
                    colc[j][i] = {{x0, y0 + R + Rs}, {x0, y0 + R + 3.0 * Rs}};
                } else {
                    // Sides face up/down: mirror the horizontal bridge.
                    colc[j][i] = {{x0 + hs, y0 + w + ws},
                                  {x0 - hs, y0 + w + 3.0 * ws}};
                }
            }
        }
    } else {
        // The marked bottom side is horizontal and the marked left side
        // vertical, and they are the only axis-parallel sides. The vertical
        // bridge stacks corner to corner through v_l and v_bl; the horizontal
        // bridge cannot do the same or it would meet the vertical one of the
        // diagonal neighbour in a single point, so it pokes corners into
        // sides instead: the big's bottom-right corner into the first copy's
        // left side, the second copy's bottom-left corner onto the first's
        // edge below v_l, and the second copy's bottom-right corner into the
        // next big's left side.
        const Point vbl = tpl.verts[tpl.i_bl];
        const Point vb = tpl.verts[tpl.i_b];
        const Point vl = tpl.verts[tpl.i_l];
        const Point vpre = tpl.verts[(tpl.i_l + tpl.n - 1) % tpl.n];
        const double Ll = norm(vl - vbl);

        Point r0rel = (vb - Point{0.0, 0.08 * Ll}) - sub * vbl;
        Point rest = r0rel + sub * (vl + 0.4 * (vpre - vl));
        Point r1rel = rest - sub * vbl;
        Point tip = r1rel + sub * vb;
        if (!(vbl.y < tip.y && tip.y < vl.y)) {
            throw std::logic_error("gen_large_grid: bridge tip misses the left side");
        }
        const double Dx = tip.x - vbl.x;
        const double Dy = 1.5 * Ll;

        for (int j = 0; j < K; ++j) {
            for (int i = 0; i < K; ++i) bigc[i][j] = {i * Dx, j * Dy};
        }
        for (int j = 0; j < K; ++j) {
            for (int i = 0; i < k; ++i) {
                rowc[j][i] = {bigc[i][j] + r0rel, bigc[i][j] + r1rel};
            }
        }
        for (int j = 0; j < k; ++j) {
            for (int i = 0; i < K; ++i) {
                Point c0 = detail::chain_step(tpl, bigc[i][j], 1.0, sub, Dir::north);
                Point c1 = detail::chain_step(tpl, c0, sub, sub, Dir::north);
                colc[j][i] = {c0, c1};
            }
        }
    }

    for (int j = 0; j < K; ++j) {
        for (int i = 0; i < K; ++i) b.add(idx_id("b", i, j), 1.0, bigc[i][j]);
    }
    for (int j = 0; j < K; ++j) {
        for (int i = 0; i < k; ++i) {
            b.add(idx_id("r", i, j, 0), sub, rowc[j][i].first);
            b.add(idx_id("r", i, j, 1), sub, rowc[j][i].second);
        }
    }
    for (int j = 0; j < k; ++j) {
        for (int i = 0; i < K; ++i) {
            b.add(idx_id("c", i, j, 0), sub, colc[j][i].first);
            b.add(idx_id("c", i, j, 1), sub, colc[j][i].second);
        }
    }

    bp.exhaustive = true;
    bp.parameters["k"] = k;
    bp.parameters["alpha"] = alpha;

    for (int j = 0; j < K; ++j) {
        for (int i = 0; i < k; ++i) {
            std::string a = idx_id("b", i, j), m0 = idx_id("r", i, j, 0),
                        m1 = idx_id("r", i, j, 1), z = idx_id("b", i + 1, j);
            b.edge(a, m0);
            b.edge(m0, m1);
            b.edge(m1, z);
            bp.grid_paths.push_back({j, i, j, i + 1, {a, m0, m1, z}});
        }
    }
    for (int j = 0; j < k; ++j) {
        for (int i = 0; i < K; ++i) {
            std::string a = idx_id("b", i, j), m0 = idx_id("c", i, j, 0),
                        m1 = idx_id("c", i, j, 1), z = idx_id("b", i, j + 1);
            b.edge(a, m0);
            b.edge(m0, m1);
            b.edge(m1, z);
            bp.grid_paths.push_back({j, i, j + 1, i, {a, m0, m1, z}});
        }
    }
    for (int j = 0; j < K; ++j) {
        for (int i = 0; i < K; ++i) {
            bp.grid_map.push_back({j, i, idx_id("b", i, j)});
        }
    }
    for (int j = 0; j < k; ++j) {
        for (int i = 0; i < k; ++i) {
            CellRef cell;
            cell.row = j;
            cell.col = i;
            cell.boundary = {idx_id("b", i, j),        idx_id("b", i + 1, j),
                             idx_id("b", i, j + 1),    idx_id("b", i + 1, j + 1),
                             idx_id("r", i, j, 0),     idx_id("r", i, j, 1),
                             idx_id("r", i, j + 1, 0), idx_id("r", i, j + 1, 1),
                             idx_id("c", i, j, 0),     idx_id("c", i, j, 1),
                             idx_id("c", i + 1, j, 0), idx_id("c", i + 1, j, 1)};
            bp.cells.push_back(std::move(cell));
        }
    }

    b.finish();
    return b.scene;
}

// ---------------------------------------------------------------------------
// Crossing gadget: a unit host with a contact point q on its boundary, a
// small partner touching it there from outside, and k mirror pairs whose
// members dip into the host just inside q on either side of the host-partner
// axis. Each pair's contact edge crosses the designated host-partner edge,
// and the pairs are mutually disjoint, so that edge collects k independent
// crossings. Successive dips must shrink geometrically; once the next dip
// falls below the resolvable floor the generator reports the failing stage.
// ---------------------------------------------------------------------------

namespace {

struct GadgetFrame {
    Point q;      // contact point on the host boundary
    Point u_hat;  // outward axis direction at q
    Point p_hat;  // left-of-axis perpendicular
};

double frac_covered(const ConvexPolygon& shape, const ConvexPolygon& host) {
    ConvexPolygon cl = convex_clip(shape, host);
    if (cl.degenerate || cl.v.size() < 3) return 0.0;
    return std::abs(polygon_area(cl.v)) / std::abs(polygon_area(shape.v));
}

// Largest axis coordinate at which the polygon's boundary meets the line
// {q + t * u_hat}; false if it never does.
bool axis_reach(const ConvexPolygon& poly, const GadgetFrame& f, double* t_max) {
    bool found = false;
    double best = 0.0;
    size_t m = poly.v.size();
    for (size_t a = 0; a < m; ++a) {
        Point w0 = poly.v[a], w1 = poly.v[(a + 1) % m];
        double s0 = dot(w0 - f.q, f.p_hat), s1 = dot(w1 - f.q, f.p_hat);
        double t0 = dot(w0 - f.q, f.u_hat), t1 = dot(w1 - f.q, f.u_hat);
        if (s0 == 0.0) {
            if (!found || t0 > best) best = t0;
            found = true;
        }
        if ((s0 < 0.0) != (s1 < 0.0)) {
            double t = t0 + (t1 - t0) * (s0 / (s0 - s1));
            if (!found || t > best) best = t;
            found = true;
        }
    }
    if (found) *t_max = best;
    return found;
}

}  // namespace

Scene gen_crossing_gadget(int n, double alpha, int k, bool variant) {
    if (n < 3) {
        throw std::invalid_argument("gen_crossing_gadget: need at least three corners");
    }
    if (k < 1) throw std::invalid_argument("gen_crossing_gadget: k must be at least 1");
    if (!(alpha >= 0.0 && alpha < 1.0)) {
        throw std::invalid_argument("gen_crossing_gadget: alpha must lie in [0, 1)");
    }
    if (variant && (n % 2 != 0 || n < 6)) {
        throw std::invalid_argument(
            "gen_crossing_gadget: the corner-contact variant needs an even n >= 6");
    }

    double rot = (variant && n % 4 == 2) ? pi / n : 0.0;
    ShapeTemplate tpl = make_regular_template(n, rot);
    const double R = tpl.circumradius;

    // The free fraction of a dipped copy is capped by the host geometry at q;
    // past the cap no dip depth works, however small.
    const double cap = variant ? segment_area(n, 4) : threshold_s(n);
    if (alpha >= cap - 1e-4) {
        throw std::invalid_argument(
            "gen_crossing_gadget: alpha " + fmt_g(alpha) +
            " is not achievable by the dipped copies; their free fraction "
            "cannot exceed " + fmt_g(cap));
    }

    GadgetFrame f;
    if (!variant) {
        f.q = {R, 0.0};
        f.u_hat = {1.0, 0.0};
        f.p_hat = {0.0, 1.0};
    } else {
        f.q = {0.0, 0.0};
        f.u_hat = {0.0, 1.0};
        f.p_hat = {-1.0, 0.0};
    }
    const Point host_center = f.q - R * f.u_hat;
    const ConvexPolygon host_poly = realize(tpl, 1.0, host_center);

    // Dipping corner: the template corner farthest against p_hat; ties go to
    // the one farther along u_hat so mirror images mesh across the axis.
    int pin = 0;
    {
        double eps = 1e-9 * R;
        for (int i = 1; i < n; ++i) {
            double di = -dot(tpl.verts[i], f.p_hat);
            double db = -dot(tpl.verts[pin], f.p_hat);
            if (di > db + eps ||
                (di > db - eps &&
                 dot(tpl.verts[i], f.u_hat) > dot(tpl.verts[pin], f.u_hat))) {
                pin = i;
            }
        }
    }

    const double tn = std::tan(pi / n);
    const double t_min = std::min(tn, 1.0 / tn);
    auto dip_gap = [&](double e, double sigma) {
        return std::min(0.003 * sigma, 0.2 * e * t_min);
    };

    // Pair at dip e: one copy hangs from a station just inside q offset d
    // against p_hat; the other is its mirror image across the line parallel
    // to the axis at offset -d/2, so the two kiss corner to corner there.
    auto place_pair = [&](double e, double d, double sigma, Point* xc, Point* yc) {
        Point station = f.q - e * f.u_hat - d * f.p_hat;
        *xc = station - sigma * tpl.verts[pin];
        double beta = dot(*xc - f.q, f.p_hat);
        *yc = *xc - (2.0 * beta + d) * f.p_hat;
    };
    auto pair_free = [&](double e, double sigma) {
        Point xc, yc;
        place_pair(e, dip_gap(e, sigma), sigma, &xc, &yc);
        double fx = 1.0 - frac_covered(realize(tpl, sigma, xc), host_poly);
        double fy = 1.0 - frac_covered(realize(tpl, sigma, yc), host_poly);
        return std::min(fx, fy);
    };

    const double margin = std::min(2e-4, 0.4 * (cap - alpha));
    const double target = alpha + margin;
    const double e_floor = 1e-12 * R;

    double corridor = 0.35 * R;
    if (!variant && n <= 4) {
        // With cap = 1 the host's own free budget 1 - alpha can be tiny; keep
        // the total dipped area within it.
        corridor *= std::min(1.0, std::sqrt(8.0 * (1.0 - alpha)));
    }

    struct PlacedPair {
        double sigma;
        Point xc, yc;
        ConvexPolygon px, py;
    };
    std::vector<PlacedPair> pairs;
    double e_last = 0.0;

    for (int i = 1; i <= k; ++i) {
        double sigma = corridor / 3.0;
        PlacedPair acc;
        bool ok = false;

        for (int attempt = 0; attempt < 40 && !ok; ++attempt) {
            double e_hi = std::min(0.45 * corridor, 1.5 * sigma * R);
            if (e_hi <= e_floor) break;

            if (pair_free(e_floor, sigma) < target) {
                // Even the shallowest resolvable dip covers too much, and
                // smaller copies only worsen the depth-to-size ratio.
                throw precision_infeasible(
                    "gen_crossing_gadget: stage " + std::to_string(i) +
                        " cannot keep its copies " + fmt_g(target) +
                        " free at the smallest resolvable dip",
                    i, e_floor);
            }

            double e;
            if (pair_free(e_hi, sigma) >= target) {
                e = e_hi;  // corridor cap binds before the freeness budget
            } else {
                double lo = e_floor, hi = e_hi;
                for (int it = 0; it < 80; ++it) {
                    double mid = 0.5 * (lo + hi);
                    if (pair_free(mid, sigma) >= target) lo = mid; else hi = mid;
                }
                e = lo;
            }

            double d = dip_gap(e, sigma);
            bool good = d >= 1e-8 * sigma;  // contact must stay resolvable

            Point cx{}, cy{};
            ConvexPolygon px, py;
            if (good) {
                place_pair(e, d, sigma, &cx, &cy);
                px = realize(tpl, sigma, cx);
                py = realize(tpl, sigma, cy);
                double reach = 0.0;
                good = axis_reach(px, f, &reach) && reach <= -0.1 * e &&
                       axis_reach(py, f, &reach) && reach <= -0.1 * e &&
                       !convex_clip(px, py).degenerate &&
                       !convex_clip(px, host_poly).degenerate &&
                       !convex_clip(py, host_poly).degenerate &&
                       1.0 - frac_covered(px, host_poly) >= alpha + 1e-6 &&
                       1.0 - frac_covered(py, host_poly) >= alpha + 1e-6;
            }
            for (size_t p = 0; p < pairs.size() && good; ++p) {
                double rr =
                    100.0 * eps_contact_rel * (sigma + pairs[p].sigma) * R;
                if (polygon_distance(px, pairs[p].px) <= rr ||
                    polygon_distance(px, pairs[p].py) <= rr ||
                    polygon_distance(py, pairs[p].px) <= rr ||
                    polygon_distance(py, pairs[p].py) <= rr) {
                    good = false;
                }
            }

            if (good) {
                ok = true;
                acc = {sigma, cx, cy, std::move(px), std::move(py)};
                e_last = e;
            } else {
                sigma *= 0.7;
            }
        }

        if (!ok) {
            throw precision_infeasible(
                "gen_crossing_gadget: stage " + std::to_string(i) +
                    " has no resolvable berth left between its predecessor and q",
                i, sigma);
        }

        pairs.push_back(std::move(acc));
        corridor = 2.0 * (tn * e_last / (2.0 / (3.0 * 0.45) + tn));
    }

    // Partner copy: touches the host exactly at q from outside along the axis.
    double sv = 0.3 * e_last;
    Point vcenter{};
    {
        bool placed = false;
        for (int attempt = 0; attempt <= 20 && !placed; ++attempt) {
            Point c = (n % 2 == 0)
                          ? f.q + (sv * R) * f.u_hat
                          : f.q + (sv * R * std::cos(pi / n)) * f.u_hat;
            ConvexPolygon pv = realize(tpl, sv, c);
            bool clear = true;
            for (const PlacedPair& pp : pairs) {
                double rr = 100.0 * eps_contact_rel * (sv + pp.sigma) * R;
                if (polygon_distance(pv, pp.px) <= rr ||
                    polygon_distance(pv, pp.py) <= rr) {
                    clear = false;
                    break;
                }
            }
            if (clear) {
                vcenter = c;
                placed = true;
            } else {
                sv *= 0.5;
            }
        }
        if (!placed) {
            throw precision_infeasible(
                "gen_crossing_gadget: no clear berth for the partner copy at q",
                k, sv);
        }
    }

    detail::SceneBuilder b(tpl, alpha);
    Blueprint& bp = *b.scene.blueprint;
    b.add("u", 1.0, host_center);
    b.add("v", sv, vcenter);
    for (int i = 1; i <= k; ++i) {
        char bx[24], by[24];
        std::snprintf(bx, sizeof bx, "x_%d", i);
        std::snprintf(by, sizeof by, "y_%d", i);
        b.add(bx, pairs[i - 1].sigma, pairs[i - 1].xc);
        b.add(by, pairs[i - 1].sigma, pairs[i - 1].yc);
        b.edge("u", bx);
        b.edge("u", by);
        b.edge(bx, by);
        bp.intended_crossings.push_back({{"u", "v"}, {bx, by}});
    }
    b.edge("u", "v");
    bp.exhaustive = true;
    bp.designated_edge = EdgeRef{"u", "v"};
    bp.parameters["n"] = n;
    bp.parameters["alpha"] = alpha;
    bp.parameters["k"] = k;
    bp.parameters["variant"] = variant ? 1.0 : 0.0;
    b.finish();

    // Self-check: the realized contact graph must match the plan exactly and
    // the collection must verify as alpha-free.
    {
        Graph g = intersection_graph(b.scene.coll);
        std::set<std::pair<int, int>> realized(g.edges.begin(), g.edges.end());
        std::set<std::pair<int, int>> intended;
        for (const EdgeRef& e : bp.intended_edges) {
            int u = b.scene.coll.index_of(e.u), v = b.scene.coll.index_of(e.v);
            intended.insert(std::minmax(u, v));
        }
        if (realized != intended) {
            std::string diff;
            for (const auto& e : realized) {
                if (!intended.count(e)) {
                    diff += " +" + b.scene.coll.shapes[e.first].id + "/" +
                            b.scene.coll.shapes[e.second].id;
                }
            }
            for (const auto& e : intended) {
                if (!realized.count(e)) {
                    diff += " -" + b.scene.coll.shapes[e.first].id + "/" +
                            b.scene.coll.shapes[e.second].id;
                }
            }
            throw std::logic_error(
                "gen_crossing_gadget: realized contacts diverge from the plan:" +
                diff);
        }
        FreenessReport fr = check_alpha_free(b.scene.coll);
        if (!fr.verdict) {
            throw std::logic_error(
                "gen_crossing_gadget: construction breaks its own freeness "
                "bound, min free " + fmt_g(fr.min_free));
        }
    }

    return b.scene;
}

int k_max_for_template(const ShapeTemplate& tpl) {
    if (tpl.kind == TemplateKind::convex) return 6;
    if (tpl.n % 2 != 0) {
        throw std::invalid_argument(
            "k_max_for_template: odd regular templates do not support the "
            "grid constructions");
    }
    return tpl.n == 4 ? 6 : 4;
}

// ---------------------------------------------------------------------------
// Blueprint verification.
// ---------------------------------------------------------------------------

BlueprintReport verify_blueprint(const Scene& s) {
    BlueprintReport rep;
    const Collection& c = s.coll;
    if (!s.blueprint) {
        rep.failures.push_back("scene carries no blueprint");
        return rep;
    }
    const Blueprint& bp = *s.blueprint;
    auto fail = [&rep](std::string m) { rep.failures.push_back(std::move(m)); };

    Graph g = intersection_graph(c);
    rep.metrics["n_shapes"] = static_cast<double>(c.shapes.size());
    rep.metrics["n_edges"] = static_cast<double>(g.edge_count());

    std::set<std::pair<int, int>> intended;
    for (const EdgeRef& e : bp.intended_edges) {
        int u = c.index_of(e.u), v = c.index_of(e.v);
        if (u < 0 || v < 0 || u == v) {
            fail("intended contact (" + e.u + ", " + e.v +
                 ") does not name two distinct shapes");
            continue;
        }
        intended.insert(std::minmax(u, v));
    }
    std::set<std::pair<int, int>> realized(g.edges.begin(), g.edges.end());
    int miss = 0;
    for (const auto& e : intended) {
        if (!realized.count(e) && ++miss <= 8) {
            fail("intended contact missing: " + c.shapes[e.first].id + " / " +
                 c.shapes[e.second].id);
        }
    }
    if (miss > 8) fail(std::to_string(miss - 8) + " further intended contacts missing");
    if (bp.exhaustive) {
        int extra = 0;
        for (const auto& e : realized) {
            if (!intended.count(e) && ++extra <= 8) {
                fail("unplanned contact: " + c.shapes[e.first].id + " / " +
                     c.shapes[e.second].id);
            }
        }
        if (extra > 8) fail(std::to_string(extra - 8) + " further unplanned contacts");
    }

    FreenessReport fr = check_alpha_free(c);
    rep.metrics["min_free"] = fr.min_free;
    if (!fr.verdict) {
        std::string worst =
            fr.worst >= 0 ? c.shapes[fr.worst].id : std::string("?");
        fail("free fraction " + fmt_g(fr.min_free) + " of shape " + worst +
             " falls below alpha " + fmt_g(c.alpha));
    }

    if (!bp.intended_crossings.empty() || bp.designated_edge) {
        Drawing d = canonical_drawing(c);
        std::map<std::pair<int, int>, int> eix;
        for (size_t i = 0; i < d.edges.size(); ++i) {
            eix[{d.edges[i].u, d.edges[i].v}] = static_cast<int>(i);
        }
        auto edge_index = [&](const EdgeRef& e) -> int {
            int u = c.index_of(e.u), v = c.index_of(e.v);
            if (u < 0 || v < 0) return -1;
            auto it = eix.find(std::minmax(u, v));
            return it == eix.end() ? -1 : it->second;
        };

        std::vector<CrossingRecord> recs = enumerate_crossings(d);
        std::map<std::pair<int, int>, const CrossingRecord*> by_pair;
        for (const CrossingRecord& r : recs) by_pair[{r.e1, r.e2}] = &r;

        for (const CrossingRef& cr : bp.intended_crossings) {
            int e1 = edge_index(cr.a), e2 = edge_index(cr.b);
            if (e1 < 0 || e2 < 0) {
                fail("intended crossing references a contact edge absent from "
                     "the drawing: (" + cr.a.u + "," + cr.a.v + ") x (" +
                     cr.b.u + "," + cr.b.v + ")");
                continue;
            }
            auto it = by_pair.find(std::minmax(e1, e2));
            if (it == by_pair.end() || it->second->degenerate ||
                it->second->points.empty()) {
                fail("intended crossing not realized transversally: (" +
                     cr.a.u + "," + cr.a.v + ") x (" + cr.b.u + "," + cr.b.v + ")");
            }
        }

        if (bp.designated_edge) {
            int ei = edge_index(*bp.designated_edge);
            if (ei < 0) {
                fail("designated edge (" + bp.designated_edge->u + ", " +
                     bp.designated_edge->v + ") is absent from the drawing");
            } else {
                int ind = independent_crossing_number(d, ei, recs);
                rep.metrics["independence"] = static_cast<double>(ind);
                auto it = bp.parameters.find("k");
                if (it != bp.parameters.end() &&
                    static_cast<double>(ind) + 1e-9 < it->second) {
                    fail("designated edge carries only " + std::to_string(ind) +
                         " independent crossings, fewer than the planned " +
                         fmt_g(it->second));
                }
            }
        }
    }

    int certified = 0;
    if (!bp.grid_map.empty()) {
        try {
            GridSubdivisionCert cert = blueprint_grid_cert(s);
            std::string why;
            if (!verify_grid_subdivision(g, cert, &why)) {
                fail("grid subdivision certificate rejected: " + why);
            } else {
                rep.metrics["grid_m"] = static_cast<double>(cert.m);
                if (cert.m >= 2) certified = cert.m;
            }
        } catch (const std::exception& ex) {
            fail(std::string("grid certificate: ") + ex.what());
        }
    }

    try {
        rep.metrics["radius"] = static_cast<double>(bfs_radius(g));
    } catch (const std::exception&) {
        fail("intersection graph is empty or disconnected");
    }

    if (g.n <= 2500) {
        TreewidthBounds tb = treewidth_bounds(g, certified);
        rep.metrics["tw_lower"] = static_cast<double>(tb.lower);
        rep.metrics["tw_upper"] = static_cast<double>(tb.upper);
    } else {
        // Heuristic bounds get quadratic-and-worse here; report only what the
        // certificate and connectivity already give.
        rep.metrics["tw_lower"] =
            static_cast<double>(std::max(certified, g.edge_count() > 0 ? 1 : 0));
        rep.metrics["tw_upper"] = static_cast<double>(g.n - 1);
    }

    rep.ok = rep.failures.empty();
    return rep;
}

GridSubdivisionCert blueprint_grid_cert(const Scene& s) {
    if (!s.blueprint) {
        throw std::invalid_argument("blueprint_grid_cert: scene carries no blueprint");
    }
    const Blueprint& bp = *s.blueprint;
    const Collection& c = s.coll;
    if (bp.grid_map.empty()) {
        throw std::invalid_argument("blueprint_grid_cert: blueprint has no grid map");
    }

    int m = 0;
    for (const GridVertexRef& gv : bp.grid_map) {
        if (gv.row < 0 || gv.col < 0) {
            throw std::invalid_argument(
                "blueprint_grid_cert: negative grid coordinate");
        }
        m = std::max({m, gv.row + 1, gv.col + 1});
    }
    if (static_cast<int>(bp.grid_map.size()) != m * m) {
        throw std::invalid_argument(
            "blueprint_grid_cert: grid map does not fill an m x m square");
    }

    GridSubdivisionCert cert;
    cert.m = m;
    cert.branch.assign(static_cast<size_t>(m) * m, -1);
    for (const GridVertexRef& gv : bp.grid_map) {
        int v = c.index_of(gv.id);
        if (v < 0) {
            throw std::invalid_argument("blueprint_grid_cert: unknown shape id " + gv.id);
        }
        int& slot = cert.branch[static_cast<size_t>(gv.row) * m + gv.col];
        if (slot != -1) {
            throw std::invalid_argument(
                "blueprint_grid_cert: duplicate grid cell (" +
                std::to_string(gv.row) + ", " + std::to_string(gv.col) + ")");
        }
        slot = v;
    }

    auto slot_at = [&](int r, int col) -> int {
        if (r < 0 || r >= m || col < 0 || col >= m) return -2;
        return cert.branch[static_cast<size_t>(r) * m + col];
    };
    for (const GridPathRef& p : bp.grid_paths) {
        std::vector<int> seq;
        seq.reserve(p.ids.size());
        for (const std::string& id : p.ids) {
            int v = c.index_of(id);
            if (v < 0) {
                throw std::invalid_argument(
                    "blueprint_grid_cert: unknown shape id " + id + " in a path");
            }
            seq.push_back(v);
        }
        if (seq.size() < 2) {
            throw std::invalid_argument(
                "blueprint_grid_cert: a path needs at least two vertices");
        }
        if (slot_at(p.r1, p.c1) != seq.front() || slot_at(p.r2, p.c2) != seq.back()) {
            throw std::invalid_argument(
                "blueprint_grid_cert: path endpoints disagree with the grid map");
        }
        cert.paths.push_back(std::move(seq));
    }
    return cert;
}

}  // namespace alphagon
