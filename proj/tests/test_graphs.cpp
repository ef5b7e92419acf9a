#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "alphagon/graphs.hpp"
#include "alphagon/rng.hpp"

using namespace alphagon;

namespace {

// ---- oracles ------------------------------------------------------------

// Exhaustive maximum matching over edge subsets (up to 16 edges).
int matching_brute(const Graph& g) {
    int m = g.edge_count();
    REQUIRE(m <= 16);
    int best = 0;
    for (std::uint32_t S = 0; S < (1u << m); ++S) {
        std::set<int> used;
        bool ok = true;
        int size = 0;
        for (int i = 0; i < m && ok; ++i) {
            if (!(S & (1u << i))) continue;
            auto [u, v] = g.edges[i];
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

Graph random_graph(Rng& rng, int n, int edges) {
    Graph g(n);
    for (int i = 0; i < edges; ++i) {
        int u = static_cast<int>(rng.uniform_int(0, n - 1));
        int v = static_cast<int>(rng.uniform_int(0, n - 1));
        g.add_edge(u, v);
    }
    return g;
}

Graph random_tree(Rng& rng, int n) {
    Graph g(n);
    for (int v = 1; v < n; ++v) {
        g.add_edge(v, static_cast<int>(rng.uniform_int(0, v - 1)));
    }
    return g;
}

// Grid with every edge subdivided twice, plus the matching certificate.
struct SubdividedGrid {
    Graph g;
    GridSubdivisionCert cert;
};

SubdividedGrid make_subdivided_grid(int m) {
    SubdividedGrid out;
    Graph g(m * m);
    GridSubdivisionCert cert;
    cert.m = m;
    for (int i = 0; i < m * m; ++i) cert.branch.push_back(i);
    auto subdivide = [&g, &cert](int u, int v) {
        int a = g.n, b = g.n + 1;
        g.n += 2;
        g.adj.resize(g.n);
        g.add_edge(u, a);
        g.add_edge(a, b);
        g.add_edge(b, v);
        cert.paths.push_back({u, a, b, v});
    };
    for (int r = 0; r < m; ++r) {
        for (int c = 0; c < m; ++c) {
            if (c + 1 < m) subdivide(r * m + c, r * m + c + 1);
            if (r + 1 < m) subdivide(r * m + c, (r + 1) * m + c);
        }
    }
    out.g = g;
    out.cert = cert;
    return out;
}

}  // namespace

TEST_CASE("graph basics") {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 0);  // duplicate collapses
    g.add_edge(2, 2);  // loop ignored
    CHECK(g.edge_count() == 1);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 0));
    CHECK(!g.has_edge(0, 2));
    CHECK_THROWS_AS(g.add_edge(0, 9), std::out_of_range);
}

TEST_CASE("radius and eccentricity") {
    CHECK(bfs_radius(path_graph(1)) == 0);
    CHECK(bfs_radius(path_graph(5)) == 2);
    CHECK(bfs_radius(grid_graph(5, 5)) == 4);
    CHECK(bfs_eccentricity(path_graph(5), 0) == 4);
    Graph dis(4);
    dis.add_edge(0, 1);
    dis.add_edge(2, 3);
    CHECK_THROWS_AS(bfs_radius(dis), std::invalid_argument);
}

TEST_CASE("neighborhood extraction") {
    Graph g = grid_graph(5, 5);
    CHECK(neighborhood(g, 12, 0).n == 1);
    CHECK(neighborhood(g, 12, 2).n == 13);  // diamond around the center
    CHECK(neighborhood(g, 12, 8).n == 25);
    Graph h = neighborhood(g, 12, 1);
    CHECK(h.n == 5);
    CHECK(h.edge_count() == 4);  // star, grid has no triangles
    CHECK_THROWS_AS(neighborhood(g, 99, 1), std::invalid_argument);
}

TEST_CASE("exact treewidth on known graphs") {
    Rng rng(5150);
    CHECK(treewidth_exact(random_tree(rng, 12)) == 1);
    Graph k5(5);
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) k5.add_edge(i, j);
    CHECK(treewidth_exact(k5) == 4);
    Graph c10(10);
    for (int i = 0; i < 10; ++i) c10.add_edge(i, (i + 1) % 10);
    CHECK(treewidth_exact(c10) == 2);
    CHECK(treewidth_exact(grid_graph(3, 3)) == 3);
    CHECK(treewidth_exact(grid_graph(4, 4)) == 4);
    CHECK(treewidth_exact(Graph(6)) == 0);
    CHECK_THROWS_AS(treewidth_exact(Graph(26)), std::invalid_argument);
}

TEST_CASE("treewidth bounds bracket the exact value") {
    Rng rng(90210);
    for (int it = 0; it < 50; ++it) {
        int n = 4 + static_cast<int>(rng.uniform_int(0, 6));
        Graph g = random_graph(rng, n, 2 * n);
        int exact = treewidth_exact(g);
        TreewidthBounds b = treewidth_bounds(g);
        CHECK(b.lower <= exact);
        CHECK(exact <= b.upper);
    }
    Graph c10(10);
    for (int i = 0; i < 10; ++i) c10.add_edge(i, (i + 1) % 10);
    TreewidthBounds b = treewidth_bounds(c10);
    CHECK(b.lower == 2);
    CHECK(b.upper == 2);
    // a certificate raises the lower bound
    CHECK(treewidth_bounds(c10, 7).lower == 7);
}

TEST_CASE("maximum matching agrees with the brute oracle") {
    Rng rng(1234);
    for (int it = 0; it < 80; ++it) {
        int n = 3 + static_cast<int>(rng.uniform_int(0, 7));
        Graph g = random_graph(rng, n, static_cast<int>(rng.uniform_int(0, 10)));
        if (g.edge_count() > 16) continue;
        CHECK(max_matching(g) == matching_brute(g));
    }
    // odd cycles force blossoms
    for (int len : {3, 5, 7, 9}) {
        Graph c(len);
        for (int i = 0; i < len; ++i) c.add_edge(i, (i + 1) % len);
        CHECK(max_matching(c) == len / 2);
    }
    // Petersen graph has a perfect matching
    Graph pet(10);
    for (int i = 0; i < 5; ++i) {
        pet.add_edge(i, (i + 1) % 5);
        pet.add_edge(5 + i, 5 + (i + 2) % 5);
        pet.add_edge(i, 5 + i);
    }
    CHECK(max_matching(pet) == 5);
}

TEST_CASE("strong product structure") {
    Graph h = path_graph(3);
    Graph p1 = strong_product(h, 1);
    CHECK(p1.n == 3);
    CHECK(p1.edge_count() == 2);

    Graph k1(1);
    Graph p2k1 = strong_product(k1, 2);
    CHECK(p2k1.n == 2);
    CHECK(p2k1.edge_count() == 1);

    Graph p2p2 = strong_product(path_graph(2), 2);
    CHECK(p2p2.n == 4);
    CHECK(p2p2.edge_count() == 6);  // complete graph on four vertices

    Graph p3p3 = strong_product(path_graph(3), 3);
    CHECK(p3p3.n == 9);
    CHECK(p3p3.labels[4] == "1:1");
    CHECK(subgraph_embeds(grid_graph(3, 3), p3p3));
}

TEST_CASE("product certificate verification") {
    Graph g = grid_graph(3, 3);
    ProductCertificate cert;
    cert.host = path_graph(3);
    cert.rows = 3;
    cert.t = 1;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) cert.placement.emplace_back(r, c);

    std::string why;
    CHECK(verify_product_certificate(g, cert, &why));

    ProductCertificate bad = cert;
    bad.t = 0;
    CHECK(!verify_product_certificate(g, bad, &why));

    bad = cert;
    bad.placement[0] = {2, 0};  // vertex (0,0) jumps two rows away from (0,1)
    CHECK(!verify_product_certificate(g, bad, &why));

    bad = cert;
    bad.placement[0] = bad.placement[1];  // collision
    CHECK(!verify_product_certificate(g, bad, &why));

    bad = cert;
    bad.host = Graph(3);  // host lost its edges
    CHECK(!verify_product_certificate(g, bad, &why));

    ProductCertificate k3host = cert;
    k3host.host = Graph(3);
    k3host.host.add_edge(0, 1);
    k3host.host.add_edge(1, 2);
    k3host.host.add_edge(0, 2);
    k3host.t = 1;  // triangle has treewidth 2
    CHECK(!verify_product_certificate(g, k3host, &why));
}

TEST_CASE("grid subdivision certificates") {
    SubdividedGrid sg = make_subdivided_grid(3);
    std::string why;
    CHECK_MESSAGE(verify_grid_subdivision(sg.g, sg.cert, &why), why);

    // missing edge in the realized graph
    SubdividedGrid broken = make_subdivided_grid(3);
    broken.g.edges.pop_back();
    // rebuild adjacency after surgery
    {
        Graph re(broken.g.n);
        for (auto [u, v] : broken.g.edges) re.add_edge(u, v);
        broken.g = re;
    }
    CHECK(!verify_grid_subdivision(broken.g, broken.cert, &why));

    // interior vertex shared between two paths
    SubdividedGrid shared = make_subdivided_grid(3);
    shared.cert.paths[1][1] = shared.cert.paths[0][1];
    CHECK(!verify_grid_subdivision(shared.g, shared.cert, &why));

    // wrong branch list size
    SubdividedGrid wrong = make_subdivided_grid(3);
    wrong.cert.branch.pop_back();
    CHECK(!verify_grid_subdivision(wrong.g, wrong.cert, &why));

    // duplicate branch vertex
    SubdividedGrid dup = make_subdivided_grid(3);
    dup.cert.branch[1] = dup.cert.branch[0];
    CHECK(!verify_grid_subdivision(dup.g, dup.cert, &why));
}

TEST_CASE("local treewidth profile on a path") {
    Graph p = path_graph(9);
    auto prof = local_treewidth_profile(p, 4, 3);
    REQUIRE(prof.size() == 4);
    CHECK(prof[0].lower == 0);
    CHECK(prof[0].upper == 0);
    for (int k = 1; k <= 3; ++k) {
        CHECK(prof[k].lower == 1);
        CHECK(prof[k].upper == 1);
    }
}

TEST_CASE("subgraph embedding search") {
    Graph tri(3);
    tri.add_edge(0, 1);
    tri.add_edge(1, 2);
    tri.add_edge(0, 2);
    Graph k4(4);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) k4.add_edge(i, j);
    CHECK(subgraph_embeds(tri, k4));
    CHECK(!subgraph_embeds(tri, grid_graph(2, 3)));  // bipartite host
    CHECK(subgraph_embeds(path_graph(4), grid_graph(2, 2)));
    CHECK(!subgraph_embeds(k4, grid_graph(3, 3)));
    CHECK_THROWS_AS(subgraph_embeds(grid_graph(4, 4), grid_graph(4, 4)),
                    std::invalid_argument);
}
