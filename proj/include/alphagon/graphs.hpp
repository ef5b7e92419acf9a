#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace alphagon {

// Undirected simple graph on vertices 0..n-1. Optional labels carry shape or
// product coordinates for reports.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // stored with u < v
    std::vector<std::vector<int>> adj;
    std::vector<std::string> labels;  // empty or size n

    explicit Graph(int n = 0) : n(n), adj(n) {}
    void add_edge(int u, int v);  // ignores loops and duplicates
    bool has_edge(int u, int v) const;
    int edge_count() const { return static_cast<int>(edges.size()); }
};

Graph path_graph(int n);
Graph grid_graph(int rows, int cols);

// Exact radius; throws std::invalid_argument on disconnected or empty input.
int bfs_radius(const Graph& g);
int bfs_eccentricity(const Graph& g, int v);

// Induced subgraph on the k-th closed neighborhood of v. Labels follow.
Graph neighborhood(const Graph& g, int v, int k);

// Exact treewidth by elimination-order DP over vertex subsets; capped at 25
// vertices (memory 2^n), throws std::invalid_argument beyond.
int treewidth_exact(const Graph& g);

struct TreewidthBounds {
    int lower = 0;
    int upper = 0;
};

// lower = max(max clique - 1, contraction min-degree, certified_lower);
// upper = min-fill elimination width.
TreewidthBounds treewidth_bounds(const Graph& g, int certified_lower = 0);

// Exact maximum matching (blossom algorithm).
int max_matching(const Graph& g);

// Product of a path on m rows with h: vertices (row, v), adjacent when both
// coordinates are equal or adjacent and the pair differs. Labels "row:v".
Graph strong_product(const Graph& h, int m);

struct ProductCertificate {
    Graph host;
    int rows = 0;
    std::vector<std::pair<int, int>> placement;  // vertex -> (row, host vertex)
    int t = 0;                                   // claimed treewidth bound for host
};

// Accepts iff placement is total and injective, every edge lands on a strong
// product edge, and the host's treewidth is certified <= t.
bool verify_product_certificate(const Graph& g, const ProductCertificate& cert,
                                std::string* why = nullptr);

struct GridSubdivisionCert {
    int m = 0;
    std::vector<int> branch;              // m*m vertices, row-major
    std::vector<std::vector<int>> paths;  // full vertex sequences, branch endpoints
};

// Accepts iff the branch vertices are distinct, every grid edge is realized by
// exactly one path of adjacent vertices, and path interiors are disjoint from
// each other and from the branch set. A valid certificate for m >= 2 implies
// treewidth >= m.
bool verify_grid_subdivision(const Graph& g, const GridSubdivisionCert& cert,
                             std::string* why = nullptr);

struct LocalTreewidthEntry {
    int k = 0;
    int lower = 0;
    int upper = 0;
};

std::vector<LocalTreewidthEntry> local_treewidth_profile(const Graph& g, int v, int k_max);

// Exhaustive injective subgraph embedding search; pattern capped at 12
// vertices (throws beyond).
bool subgraph_embeds(const Graph& pattern, const Graph& host);

}  // namespace alphagon
