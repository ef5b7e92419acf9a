#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "alphagon/drawing.hpp"
#include "alphagon/geometry.hpp"
#include "alphagon/rng.hpp"
#include "alphagon/scene.hpp"

using namespace alphagon;

namespace {

// ---- oracles ------------------------------------------------------------

// Exhaustive independent crossing number: max subset of pairwise vertex
// disjoint edges among the edges crossing edge e.
int independent_brute(const Drawing& d, int e, const std::vector<CrossingRecord>& recs) {
    std::vector<std::pair<int, int>> crossers;
    for (const auto& r : recs) {
        if (r.degenerate) continue;
        int other = -1;
        if (r.e1 == e) other = r.e2;
        if (r.e2 == e) other = r.e1;
        if (other >= 0) crossers.push_back({d.edges[other].u, d.edges[other].v});
    }
    int m = static_cast<int>(crossers.size());
    REQUIRE(m <= 16);
    int best = 0;
    for (std::uint32_t S = 0; S < (1u << m); ++S) {
        std::set<int> used;
        bool ok = true;
        int size = 0;
        for (int i = 0; i < m && ok; ++i) {
            if (!(S & (1u << i))) continue;
            auto [u, v] = crossers[i];
            if (used.count(u) || used.count(v)) {
                ok = false;
            } else {
                used.insert(u);
                used.insert(v);
                ++size;
            }
        }
        if (ok) best = std::max(best, size);
    }
    return best;
}

ShapeTemplate square_template() { return make_regular_template(4, 3.14159265358979323846 / 4.0); }

Collection squares_at(std::vector<std::pair<double, Point>> list, double alpha = 0.0) {
    Collection c;
    c.tpl = square_template();
    c.alpha = alpha;
    int k = 0;
    for (auto [s, t] : list) {
        c.shapes.push_back({"s" + std::to_string(k++), s, t});
    }
    return c;
}

// Uniform point inside a convex polygon by area weighted fan triangles.
Point sample_in_polygon(const ConvexPolygon& poly, Rng& rng) {
    size_t n = poly.v.size();
    std::vector<double> w(n - 2);
    double total = 0;
    for (size_t i = 1; i + 1 < n; ++i) {
        double a = std::abs(cross(poly.v[i] - poly.v[0], poly.v[i + 1] - poly.v[0])) / 2;
        total += a;
        w[i - 1] = total;
    }
    double pick = rng.uniform(0.0, total);
    size_t i = 1;
    while (i - 1 < w.size() - 1 && w[i - 1] < pick) ++i;
    double a = rng.uniform01(), b = rng.uniform01();
    if (a + b > 1) {
        a = 1 - a;
        b = 1 - b;
    }
    Point p0 = poly.v[0], p1 = poly.v[i], p2 = poly.v[i + 1];
    return p0 + a * (p1 - p0) + b * (p2 - p0);
}

}  // namespace

TEST_CASE("shrink of touching unit squares keeps them and bends at the contact") {
    auto tpl = square_template();
    ContactResult r = shrink_to_contact(tpl, {"a", 1.0, {0, 0}}, {"b", 1.0, {1, 0}});
    CHECK(r.lambda == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.p.x == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(r.p.y == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("shrink of overlapping unit squares halves them") {
    auto tpl = square_template();
    ContactResult r = shrink_to_contact(tpl, {"a", 1.0, {0, 0}}, {"b", 1.0, {0.5, 0}});
    CHECK(r.lambda == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(r.p.x == doctest::Approx(0.25).epsilon(1e-6));
    CHECK(std::abs(r.p.y) < 1e-6);
    // the copies witness interior disjointness
    CHECK(convex_clip(r.su, r.sv).degenerate);
}

TEST_CASE("shrink handles unequal scales") {
    auto tpl = square_template();
    // half widths 0.5 and 1.5 meet at lambda = 0.8 for centers 1.6 apart
    ContactResult r = shrink_to_contact(tpl, {"a", 1.0, {0, 0}}, {"b", 3.0, {1.6, 0}});
    CHECK(r.lambda == doctest::Approx(0.8).epsilon(1e-9));
    CHECK(r.p.x == doctest::Approx(0.4).epsilon(1e-6));
}

TEST_CASE("shrink of corner touching squares bends at the shared corner") {
    auto tpl = square_template();
    ContactResult r = shrink_to_contact(tpl, {"a", 1.0, {0, 0}}, {"b", 1.0, {1, 1}});
    CHECK(r.lambda == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.p.x == doctest::Approx(0.5).epsilon(1e-6));
    CHECK(r.p.y == doctest::Approx(0.5).epsilon(1e-6));
}

TEST_CASE("shrink rejects identical centers and disjoint shapes") {
    auto tpl = square_template();
    CHECK_THROWS_AS(shrink_to_contact(tpl, {"a", 1.0, {0, 0}}, {"b", 0.5, {0, 0}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(shrink_to_contact(tpl, {"a", 1.0, {0, 0}}, {"b", 1.0, {5, 0}}),
                    std::invalid_argument);
}

TEST_CASE("shrink of overlapping pentagons stays symmetric and contained") {
    auto tpl = make_regular_template(5, 0.3);
    Homothet u{"a", 1.3, {0, 0}}, v{"b", 0.7, {0.9, 0.4}};
    ContactResult r1 = shrink_to_contact(tpl, u, v);
    ContactResult r2 = shrink_to_contact(tpl, v, u);
    CHECK(r1.lambda == doctest::Approx(r2.lambda).epsilon(1e-12));
    CHECK(r1.lambda > 0.0);
    CHECK(r1.lambda < 1.0);
    double tol = 1e-6 * tpl.circumradius;
    bool in_union = point_in_convex(r1.su, r1.p, tol) || point_in_convex(r1.sv, r1.p, tol);
    CHECK(in_union);
    CHECK(convex_clip(r1.su, r1.sv).degenerate);
}

TEST_CASE("canonical drawing of a touching row has two edges with midpoint bends") {
    Collection c = squares_at({{1.0, {0, 0}}, {1.0, {1, 0}}, {1.0, {2, 0}}});
    Drawing d = canonical_drawing(c);
    REQUIRE(d.vertex.size() == 3);
    REQUIRE(d.edges.size() == 2);
    CHECK(d.graph.has_edge(0, 1));
    CHECK(d.graph.has_edge(1, 2));
    CHECK_FALSE(d.graph.has_edge(0, 2));
    for (const auto& e : d.edges) {
        double mid = 0.5 * (d.vertex[e.u].x + d.vertex[e.v].x);
        CHECK(e.bend.x == doctest::Approx(mid).epsilon(1e-6));
        CHECK(std::abs(e.bend.y) < 1e-5);
    }
    CHECK(enumerate_crossings(d).empty());
}

TEST_CASE("canonical drawing bends stay inside the union of the copies") {
    Collection c = gen_random_collection(make_regular_template(7, 0.0), 24, 0.4, 99);
    Drawing d = canonical_drawing(c);
    for (const auto& e : d.edges) {
        double r = c.tpl.circumradius * std::min(c.shapes[e.u].scale, c.shapes[e.v].scale);
        bool ok = point_in_convex(e.su, e.bend, 1e-5 * r) || point_in_convex(e.sv, e.bend, 1e-5 * r);
        CHECK(ok);
    }
}

TEST_CASE("canonical drawing is deterministic") {
    Collection c = gen_random_collection(make_regular_template(6, 0.0), 20, 0.5, 31);
    Drawing d1 = canonical_drawing(c);
    Drawing d2 = canonical_drawing(c);
    REQUIRE(d1.edges.size() == d2.edges.size());
    for (size_t i = 0; i < d1.edges.size(); ++i) {
        CHECK(d1.edges[i].bend.x == d2.edges[i].bend.x);
        CHECK(d1.edges[i].bend.y == d2.edges[i].bend.y);
    }
}

TEST_CASE("a plus pattern yields exactly one transversal crossing") {
    // Four big squares around the origin forming K4; the horizontal and the
    // vertical edge cross near the origin, the two diagonal pairs do not.
    Collection c = squares_at(
        {{2.2, {-1, 0}}, {2.2, {1, 0}}, {2.2, {0, -1}}, {2.2, {0, 1}}});
    Drawing d = canonical_drawing(c);
    REQUIRE(d.edges.size() == 6);
    auto recs = enumerate_crossings(d);
    int transversal = 0;
    for (const auto& r : recs) {
        if (!r.degenerate) {
            ++transversal;
            CHECK_FALSE(r.double_cross);
            REQUIRE(r.points.size() == 1);
            CHECK(std::abs(r.points[0].x) < 0.05);
            CHECK(std::abs(r.points[0].y) < 0.05);
            std::set<int> ends{d.edges[r.e1].u, d.edges[r.e1].v, d.edges[r.e2].u,
                               d.edges[r.e2].v};
            CHECK(ends.size() == 4);
        }
    }
    CHECK(transversal == 1);
    CHECK(drawing_independence_index(d) == 1);
}

TEST_CASE("pairwise disjoint crossers are all counted") {
    // One long horizontal edge crossed by four short vertical edges at
    // distinct abscissas; the vertical pairs share no endpoints.
    std::vector<std::pair<double, Point>> list = {{21.0, {-10, 0}}, {21.0, {10, 0}}};
    for (double x : {-6.0, -2.0, 2.0, 6.0}) {
        list.push_back({2.5, {x, 1.2}});
        list.push_back({2.5, {x, -1.2}});
    }
    Collection c = squares_at(list);
    Drawing d = canonical_drawing(c);
    int long_edge = -1;
    for (size_t i = 0; i < d.edges.size(); ++i) {
        if ((d.edges[i].u == 0 && d.edges[i].v == 1) ||
            (d.edges[i].u == 1 && d.edges[i].v == 0)) {
            long_edge = static_cast<int>(i);
        }
    }
    REQUIRE(long_edge >= 0);
    auto recs = enumerate_crossings(d);
    int got = independent_crossing_number(d, long_edge, recs);
    CHECK(got == 4);
    CHECK(got == independent_brute(d, long_edge, recs));
    CHECK(drawing_independence_index(d) >= 4);
}

TEST_CASE("matching based crossing number agrees with brute force on random scenes") {
    for (std::uint64_t seed : {11ull, 12ull, 13ull}) {
        Collection c = gen_random_collection(square_template(), 18, 0.2, seed);
        Drawing d = canonical_drawing(c);
        auto recs = enumerate_crossings(d);
        for (size_t e = 0; e < d.edges.size(); ++e) {
            int fast = independent_crossing_number(d, static_cast<int>(e), recs);
            int slow = independent_brute(d, static_cast<int>(e), recs);
            CHECK(fast == slow);
        }
    }
}

TEST_CASE("triple point witness exists for the plus pattern crossing") {
    Collection c = squares_at(
        {{2.2, {-1, 0}}, {2.2, {1, 0}}, {2.2, {0, -1}}, {2.2, {0, 1}}});
    Drawing d = canonical_drawing(c);
    auto recs = enumerate_crossings(d);
    int found = 0;
    for (const auto& r : recs) {
        if (r.degenerate) continue;
        Point w = triple_point_witness(c, d, r);
        std::vector<ConvexPolygon> four;
        for (int id : {d.edges[r.e1].u, d.edges[r.e1].v, d.edges[r.e2].u, d.edges[r.e2].v}) {
            four.push_back(realize_shape(c, id));
        }
        CHECK(point_depth(four, w, 1e-9) >= 3);
        ++found;
    }
    CHECK(found == 1);
}

TEST_CASE("triple point witness covers every crossing in random low alpha scenes") {
    for (std::uint64_t seed : {5ull, 6ull}) {
        Collection c = gen_random_collection(make_regular_template(6, 0.0), 25, 0.3, seed);
        Drawing d = canonical_drawing(c);
        for (const auto& r : enumerate_crossings(d)) {
            if (r.degenerate) continue;
            CHECK_NOTHROW(triple_point_witness(c, d, r));
        }
    }
}

TEST_CASE("hit or covered verdicts on hand built hexagon cases") {
    auto tpl = make_regular_template(6, 0.0);
    Homothet X{"x", 1.0, {0, 0}};
    ConvexPolygon px = realize(tpl, 1.0, {0, 0});
    Point corner = px.v[0];
    Point edge_mid = 0.5 * (px.v[0] + px.v[1]);

    // small copy centered at a corner of X contains p: hit
    auto v1 = check_hit_or_covered(tpl, X, corner, {"y", 0.1, corner});
    CHECK((v1 == HitCoveredVerdict::hit || v1 == HitCoveredVerdict::both));

    // the copy equal to X is fully covered and owns p: both
    auto v2 = check_hit_or_covered(tpl, X, corner, {"y", 1.0, {0, 0}});
    CHECK(v2 == HitCoveredVerdict::both);

    // a tiny copy strictly inside X on the center-to-p segment: covered only
    auto v3 = check_hit_or_covered(tpl, X, edge_mid, {"y", 0.05, 0.5 * edge_mid});
    CHECK(v3 == HitCoveredVerdict::covered);

    // preconditions
    CHECK_THROWS_AS(check_hit_or_covered(tpl, X, {0, 0}, {"y", 0.1, {0, 0}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(check_hit_or_covered(tpl, X, edge_mid, {"y", 0.1, {-5, 0}}),
                    std::invalid_argument);
}

TEST_CASE("sampled boundary probes are always hit or covered") {
    Rng rng(2718);
    for (int n : {5, 6, 13}) {
        auto tpl = make_regular_template(n, 0.0);
        Homothet X{"x", 1.0, {0, 0}};
        ConvexPolygon px = realize(tpl, 1.0, {0, 0});
        int checked = 0;
        for (int it = 0; it < 300; ++it) {
            size_t k = static_cast<size_t>(rng.uniform_int(0, n - 1));
            double t = rng.uniform01();
            Point p = px.v[k] + t * (px.v[(k + 1) % px.v.size()] - px.v[k]);
            double z = rng.uniform01();
            Point on_seg = z * p;  // between center (origin) and p
            double scale = rng.uniform(0.05, 1.5);
            ConvexPolygon unit = realize(tpl, 1.0, {0, 0});
            Point u = sample_in_polygon(unit, rng);
            Homothet Y{"y", scale, on_seg - scale * u};
            auto verdict = check_hit_or_covered(tpl, X, p, Y);
            CHECK(verdict != HitCoveredVerdict::neither);
            ++checked;
        }
        CHECK(checked == 300);
    }
}
