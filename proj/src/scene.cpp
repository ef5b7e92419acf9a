#include "alphagon/scene.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "alphagon/rng.hpp"

namespace alphagon {

int Collection::index_of(const std::string& id) const {
    for (size_t i = 0; i < shapes.size(); ++i) {
        if (shapes[i].id == id) return static_cast<int>(i);
    }
    return -1;
}

ConvexPolygon realize_shape(const Collection& c, int i) {
    if (i < 0 || i >= static_cast<int>(c.shapes.size())) {
        throw std::out_of_range("realize_shape: index out of range");
    }
    return realize(c.tpl, c.shapes[i].scale, c.shapes[i].translate);
}

namespace {

struct Cached {
    std::vector<ConvexPolygon> polys;
    std::vector<double> radius;  // realized circumradius
    std::vector<double> xmin, xmax, ymin, ymax;
};

Cached cache_shapes(const Collection& c) {
    Cached k;
    size_t n = c.shapes.size();
    k.polys.reserve(n);
    k.radius.reserve(n);
    k.xmin.resize(n);
    k.xmax.resize(n);
    k.ymin.resize(n);
    k.ymax.resize(n);
    for (size_t i = 0; i < n; ++i) {
        ConvexPolygon p = realize(c.tpl, c.shapes[i].scale, c.shapes[i].translate);
        double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
        for (Point q : p.v) {
            x0 = std::min(x0, q.x);
            x1 = std::max(x1, q.x);
            y0 = std::min(y0, q.y);
            y1 = std::max(y1, q.y);
        }
        k.xmin[i] = x0;
        k.xmax[i] = x1;
        k.ymin[i] = y0;
        k.ymax[i] = y1;
        k.radius.push_back(c.shapes[i].scale * c.tpl.circumradius);
        k.polys.push_back(std::move(p));
    }
    return k;
}

bool boxes_near(const Cached& k, size_t i, size_t j, double slack) {
    return k.xmin[i] <= k.xmax[j] + slack && k.xmin[j] <= k.xmax[i] + slack &&
           k.ymin[i] <= k.ymax[j] + slack && k.ymin[j] <= k.ymax[i] + slack;
}

double free_fraction_cached(const Collection& c, const Cached& k, size_t v) {
    std::vector<ConvexPolygon> parts;
    for (size_t u = 0; u < c.shapes.size(); ++u) {
        if (u == v || !boxes_near(k, v, u, 0.0)) continue;
        ConvexPolygon cl = convex_clip(k.polys[v], k.polys[u]);
        if (!cl.degenerate) parts.push_back(std::move(cl));
    }
    double denom = std::abs(polygon_area(k.polys[v].v));
    if (denom == 0.0) return 1.0;
    double f = 1.0 - union_area(parts) / denom;
    return std::clamp(f, 0.0, 1.0);
}

}  // namespace

Graph intersection_graph(const Collection& c) {
    Cached k = cache_shapes(c);
    size_t n = c.shapes.size();
    Graph g(static_cast<int>(n));
    g.labels.reserve(n);
    for (const auto& h : c.shapes) g.labels.push_back(h.id);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            double tol = eps_contact_rel * (k.radius[i] + k.radius[j]);
            if (!boxes_near(k, i, j, 2 * tol)) continue;
            if (polygon_distance(k.polys[i], k.polys[j]) <= tol) {
                g.add_edge(static_cast<int>(i), static_cast<int>(j));
            }
        }
    }
    return g;
}

double free_fraction(const Collection& c, int v) {
    if (v < 0 || v >= static_cast<int>(c.shapes.size())) {
        throw std::out_of_range("free_fraction: unknown shape");
    }
    Cached k = cache_shapes(c);
    return free_fraction_cached(c, k, static_cast<size_t>(v));
}

FreenessReport check_alpha_free(const Collection& c) {
    Cached k = cache_shapes(c);
    FreenessReport rep;
    rep.free.resize(c.shapes.size(), 1.0);
    for (size_t v = 0; v < c.shapes.size(); ++v) {
        double f = free_fraction_cached(c, k, v);
        rep.free[v] = f;
        if (rep.worst < 0 || f < rep.min_free) {
            rep.min_free = f;
            rep.worst = static_cast<int>(v);
        }
    }
    if (c.shapes.empty()) rep.min_free = 1.0;
    rep.verdict = rep.min_free >= c.alpha - eps_area;
    return rep;
}

Collection gen_random_collection(const ShapeTemplate& tpl, int count, double alpha,
                                 std::uint64_t seed) {
    if (count < 1) throw std::invalid_argument("gen_random_collection: count must be positive");
    if (alpha < 0.0 || alpha > 1.0) {
        throw std::invalid_argument("gen_random_collection: alpha must lie in [0,1]");
    }
    Collection c;
    c.tpl = tpl;
    c.alpha = alpha;
    Rng rng(seed);

    double margin = (alpha < 1.0) ? 1e-4 : 0.0;
    double target = std::min(alpha + margin, 1.0);
    double L = std::sqrt(static_cast<double>(count)) * (0.9 + 0.9 * alpha) *
               (1.6 * tpl.circumradius);

    // Incremental state: realized polys, bounding boxes, and each placed
    // shape's overlap pieces (so neighbour freeness updates are local).
    std::vector<ConvexPolygon> polys;
    std::vector<double> bx0, bx1, by0, by1, areas;
    std::vector<std::vector<ConvexPolygon>> parts;

    auto box_near = [&](size_t u, const ConvexPolygon& p) {
        double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
        for (Point q : p.v) {
            x0 = std::min(x0, q.x);
            x1 = std::max(x1, q.x);
            y0 = std::min(y0, q.y);
            y1 = std::max(y1, q.y);
        }
        return bx0[u] <= x1 && x0 <= bx1[u] && by0[u] <= y1 && y0 <= by1[u];
    };
    auto push_shape = [&](const ConvexPolygon& p, const std::vector<size_t>& near,
                          const std::vector<ConvexPolygon>& own,
                          const std::vector<ConvexPolygon>& theirs) {
        double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
        for (Point q : p.v) {
            x0 = std::min(x0, q.x);
            x1 = std::max(x1, q.x);
            y0 = std::min(y0, q.y);
            y1 = std::max(y1, q.y);
        }
        bx0.push_back(x0);
        bx1.push_back(x1);
        by0.push_back(y0);
        by1.push_back(y1);
        areas.push_back(std::abs(polygon_area(p.v)));
        polys.push_back(p);
        parts.push_back(own);
        for (size_t i = 0; i < near.size(); ++i) {
            if (!theirs[i].degenerate && theirs[i].v.size() >= 3) {
                parts[near[i]].push_back(theirs[i]);
            }
        }
    };

    for (int i = 0; i < count; ++i) {
        Homothet h;
        h.id = "s" + std::to_string(i);
        bool placed = false;
        double scale = rng.uniform(0.4, 1.0);
        for (int shrink = 0; shrink < 25 && !placed; ++shrink) {
            for (int attempt = 0; attempt < 200 && !placed; ++attempt) {
                h.scale = scale;
                h.translate = {rng.uniform(0.0, L), rng.uniform(0.0, L)};
                ConvexPolygon p = realize(tpl, h.scale, h.translate);

                std::vector<size_t> near;
                for (size_t u = 0; u < polys.size(); ++u) {
                    if (box_near(u, p)) near.push_back(u);
                }
                std::vector<ConvexPolygon> own, theirs;
                bool overlap_area = false;
                for (size_t u : near) {
                    ConvexPolygon mine = convex_clip(p, polys[u]);
                    ConvexPolygon other = convex_clip(polys[u], p);
                    if (!mine.degenerate) overlap_area = true;
                    own.push_back(std::move(mine));
                    theirs.push_back(std::move(other));
                }
                if (alpha >= 1.0) {
                    if (overlap_area) continue;
                    placed = true;
                    push_shape(p, near, {}, theirs);
                    break;
                }
                std::vector<ConvexPolygon> live;
                for (const auto& q : own) {
                    if (!q.degenerate && q.v.size() >= 3) live.push_back(q);
                }
                double a = std::abs(polygon_area(p.v));
                if (a <= 0) continue;
                if (1.0 - union_area(live) / a < target) continue;
                bool hurts = false;
                for (size_t idx = 0; idx < near.size() && !hurts; ++idx) {
                    const ConvexPolygon& extra = theirs[idx];
                    if (extra.degenerate || extra.v.size() < 3) continue;
                    size_t u = near[idx];
                    std::vector<ConvexPolygon> trial = parts[u];
                    trial.push_back(extra);
                    if (1.0 - union_area(trial) / areas[u] < target) hurts = true;
                }
                if (hurts) continue;
                placed = true;
                push_shape(p, near, live, theirs);
                break;
            }
            if (!placed) scale *= 0.8;
        }
        if (!placed) {
            // Overflow row, far from the box and from earlier overflow shapes.
            h.scale = scale;
            h.translate = {L + 4.0 * tpl.circumradius * (i + 1), -3.0 * L};
            push_shape(realize(tpl, h.scale, h.translate), {}, {}, {});
        }
        c.shapes.push_back(h);
    }
    return c;
}

}  // namespace alphagon
