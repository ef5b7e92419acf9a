#include "alphagon/graphs.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

namespace alphagon {

void Graph::add_edge(int u, int v) {
    if (u == v) return;
    if (u < 0 || v < 0 || u >= n || v >= n) {
        throw std::out_of_range("add_edge: vertex out of range");
    }
    if (u > v) std::swap(u, v);
    if (has_edge(u, v)) return;
    edges.emplace_back(u, v);
    adj[u].push_back(v);
    adj[v].push_back(u);
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) return false;
    const auto& shorter = (adj[u].size() <= adj[v].size()) ? adj[u] : adj[v];
    int other = (adj[u].size() <= adj[v].size()) ? v : u;
    return std::find(shorter.begin(), shorter.end(), other) != shorter.end();
}

Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph grid_graph(int rows, int cols) {
    Graph g(rows * cols);
    auto id = [cols](int r, int c) { return r * cols + c; };
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) g.add_edge(id(r, c), id(r, c + 1));
            if (r + 1 < rows) g.add_edge(id(r, c), id(r + 1, c));
        }
    }
    return g;
}

namespace {
std::vector<int> bfs_dist(const Graph& g, int v) {
    std::vector<int> dist(g.n, -1);
    std::queue<int> q;
    dist[v] = 0;
    q.push(v);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : g.adj[u]) {
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
        }
    }
    return dist;
}
}  // namespace

int bfs_eccentricity(const Graph& g, int v) {
    if (v < 0 || v >= g.n) throw std::invalid_argument("bfs_eccentricity: unknown vertex");
    auto dist = bfs_dist(g, v);
    int e = 0;
    for (int d : dist) {
        if (d < 0) throw std::invalid_argument("bfs_eccentricity: graph is disconnected");
        e = std::max(e, d);
    }
    return e;
}

int bfs_radius(const Graph& g) {
    if (g.n == 0) throw std::invalid_argument("bfs_radius: empty graph");
    int r = g.n;
    for (int v = 0; v < g.n; ++v) r = std::min(r, bfs_eccentricity(g, v));
    return r;
}

Graph neighborhood(const Graph& g, int v, int k) {
    if (v < 0 || v >= g.n) throw std::invalid_argument("neighborhood: unknown vertex");
    auto dist = bfs_dist(g, v);
    std::vector<int> keep;
    for (int u = 0; u < g.n; ++u) {
        if (dist[u] >= 0 && dist[u] <= k) keep.push_back(u);
    }
    std::vector<int> pos(g.n, -1);
    for (size_t i = 0; i < keep.size(); ++i) pos[keep[i]] = static_cast<int>(i);
    Graph h(static_cast<int>(keep.size()));
    if (!g.labels.empty()) {
        h.labels.reserve(keep.size());
        for (int u : keep) h.labels.push_back(g.labels[u]);
    }
    for (auto [a, b] : g.edges) {
        if (pos[a] >= 0 && pos[b] >= 0) h.add_edge(pos[a], pos[b]);
    }
    return h;
}

int treewidth_exact(const Graph& g) {
    int n = g.n;
    if (n > 25) throw std::invalid_argument("treewidth_exact: capped at 25 vertices");
    if (n == 0) return 0;
    std::vector<std::uint32_t> am(n, 0);
    for (auto [u, v] : g.edges) {
        am[u] |= 1u << v;
        am[v] |= 1u << u;
    }
    std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
    std::vector<std::uint8_t> dp(std::size_t(1) << n, 255);
    dp[0] = 0;
    for (std::uint32_t S = 1; S <= full; ++S) {
        std::uint8_t best = 255;
        for (std::uint32_t rem = S; rem; rem &= rem - 1) {
            int v = std::countr_zero(rem);
            std::uint32_t Sp = S & ~(1u << v);
            std::uint8_t prev = dp[Sp];
            // Eliminating v after Sp costs the number of outside vertices
            // adjacent to v's component inside Sp | {v}.
            std::uint32_t inside = S;
            std::uint32_t comp = 1u << v;
            std::uint32_t frontier = comp;
            std::uint32_t nb = 0;
            while (frontier) {
                std::uint32_t next = 0;
                for (std::uint32_t f = frontier; f; f &= f - 1) {
                    next |= am[std::countr_zero(f)];
                }
                nb |= next;
                frontier = next & inside & ~comp;
                comp |= frontier;
            }
            auto q = static_cast<std::uint8_t>(std::popcount(nb & ~inside));
            best = std::min<std::uint8_t>(best, std::max(prev, q));
        }
        dp[S] = best;
    }
    return dp[full];
}

namespace {

// Contraction min-degree bound: repeatedly contract a minimum-degree vertex
// into its smallest-degree neighbor; the max of the minima is a treewidth
// lower bound.
int contraction_min_degree(const Graph& g) {
    std::vector<std::set<int>> a(g.n);
    for (auto [u, v] : g.edges) {
        a[u].insert(v);
        a[v].insert(u);
    }
    std::vector<char> alive(g.n, 1);
    int remaining = g.n;
    int bound = 0;
    while (remaining > 1) {
        int v = -1;
        size_t dmin = static_cast<size_t>(-1);
        for (int i = 0; i < g.n; ++i) {
            if (alive[i] && a[i].size() < dmin) {
                dmin = a[i].size();
                v = i;
            }
        }
        if (v < 0) break;
        bound = std::max(bound, static_cast<int>(a[v].size()));
        if (a[v].empty()) {
            alive[v] = 0;
            --remaining;
            continue;
        }
        int u = -1;
        size_t best = static_cast<size_t>(-1);
        for (int w : a[v]) {
            if (a[w].size() < best) {
                best = a[w].size();
                u = w;
            }
        }
        for (int w : a[v]) {
            a[w].erase(v);
            if (w != u) {
                a[u].insert(w);
                a[w].insert(u);
            }
        }
        a[v].clear();
        alive[v] = 0;
        --remaining;
    }
    return bound;
}

// Exact max clique via degeneracy ordering: every clique is contained in
// some vertex's right-neighborhood, which is small in sparse graphs.
int max_clique(const Graph& g) {
    int n = g.n;
    if (n == 0) return 0;
    std::vector<std::set<int>> a(n);
    for (auto [u, v] : g.edges) {
        a[u].insert(v);
        a[v].insert(u);
    }
    std::vector<int> order;
    order.reserve(n);
    {
        std::vector<std::set<int>> tmp = a;
        std::vector<char> alive(n, 1);
        for (int step = 0; step < n; ++step) {
            int v = -1;
            size_t dmin = static_cast<size_t>(-1);
            for (int i = 0; i < n; ++i) {
                if (alive[i] && tmp[i].size() < dmin) {
                    dmin = tmp[i].size();
                    v = i;
                }
            }
            order.push_back(v);
            alive[v] = 0;
            for (int w : tmp[v]) tmp[w].erase(v);
            tmp[v].clear();
        }
    }
    std::vector<int> rank(n);
    for (int i = 0; i < n; ++i) rank[order[i]] = i;
    int best = 1;
    for (int v : order) {
        std::vector<int> cand;
        for (int w : a[v]) {
            if (rank[w] > rank[v]) cand.push_back(w);
        }
        int m = static_cast<int>(cand.size());
        if (m + 1 <= best) continue;
        if (m > 20) continue;  // outside the sparse regime this bound serves
        std::vector<std::uint32_t> cm(m, 0);
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < m; ++j) {
                if (i != j && a[cand[i]].count(cand[j])) cm[i] |= 1u << j;
            }
        }
        for (std::uint32_t S = 0; S < (1u << m); ++S) {
            int sz = std::popcount(S);
            if (sz + 1 <= best) continue;
            bool clique = true;
            for (std::uint32_t rem = S; rem && clique; rem &= rem - 1) {
                int i = std::countr_zero(rem);
                if ((cm[i] & S) != (S & ~(1u << i))) clique = false;
            }
            if (clique) best = std::max(best, sz + 1);
        }
    }
    return best;
}

// Min-fill elimination; returns the max degree met along the way.
int min_fill_width(const Graph& g) {
    int n = g.n;
    if (n == 0) return 0;
    std::vector<std::set<int>> a(n);
    for (auto [u, v] : g.edges) {
        a[u].insert(v);
        a[v].insert(u);
    }
    std::vector<char> alive(n, 1);
    int width = 0;
    for (int step = 0; step < n; ++step) {
        int v = -1;
        long bestFill = -1;
        for (int i = 0; i < n; ++i) {
            if (!alive[i]) continue;
            long fill = 0;
            for (auto it = a[i].begin(); it != a[i].end(); ++it) {
                auto jt = it;
                for (++jt; jt != a[i].end(); ++jt) {
                    if (!a[*it].count(*jt)) ++fill;
                }
            }
            if (bestFill < 0 || fill < bestFill ||
                (fill == bestFill && a[i].size() < a[v].size())) {
                bestFill = fill;
                v = i;
            }
        }
        width = std::max(width, static_cast<int>(a[v].size()));
        std::vector<int> nb(a[v].begin(), a[v].end());
        for (size_t i = 0; i < nb.size(); ++i) {
            for (size_t j = i + 1; j < nb.size(); ++j) {
                a[nb[i]].insert(nb[j]);
                a[nb[j]].insert(nb[i]);
            }
        }
        for (int w : nb) a[w].erase(v);
        a[v].clear();
        alive[v] = 0;
    }
    return width;
}

}  // namespace

TreewidthBounds treewidth_bounds(const Graph& g, int certified_lower) {
    TreewidthBounds b;
    b.lower = std::max({max_clique(g) - 1, contraction_min_degree(g), certified_lower, 0});
    b.upper = std::max(min_fill_width(g), b.lower);
    return b;
}

int max_matching(const Graph& g) {
    int n = g.n;
    std::vector<int> match(n, -1), parent(n, -1), base(n);
    std::vector<char> used(n, 0), blossom(n, 0);

    auto lca = [&](int a, int b) {
        std::vector<char> seen(n, 0);
        for (;;) {
            a = base[a];
            seen[a] = 1;
            if (match[a] == -1) break;
            a = parent[match[a]];
        }
        for (;;) {
            b = base[b];
            if (seen[b]) return b;
            b = parent[match[b]];
        }
    };
    auto mark_path = [&](int v, int b, int child) {
        while (base[v] != b) {
            blossom[base[v]] = 1;
            blossom[base[match[v]]] = 1;
            parent[v] = child;
            child = match[v];
            v = parent[match[v]];
        }
    };
    auto find_path = [&](int root) -> bool {
        std::fill(used.begin(), used.end(), 0);
        std::fill(parent.begin(), parent.end(), -1);
        std::iota(base.begin(), base.end(), 0);
        used[root] = 1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to : g.adj[v]) {
                if (base[v] == base[to] || match[v] == to) continue;
                if (to == root || (match[to] != -1 && parent[match[to]] != -1)) {
                    int cur = lca(v, to);
                    std::fill(blossom.begin(), blossom.end(), 0);
                    mark_path(v, cur, to);
                    mark_path(to, cur, v);
                    for (int i = 0; i < n; ++i) {
                        if (blossom[base[i]]) {
                            base[i] = cur;
                            if (!used[i]) {
                                used[i] = 1;
                                q.push(i);
                            }
                        }
                    }
                } else if (parent[to] == -1) {
                    parent[to] = v;
                    if (match[to] == -1) {
                        int u = to;
                        while (u != -1) {
                            int pv = parent[u], ppv = match[pv];
                            match[u] = pv;
                            match[pv] = u;
                            u = ppv;
                        }
                        return true;
                    }
                    used[match[to]] = 1;
                    q.push(match[to]);
                }
            }
        }
        return false;
    };

    int res = 0;
    for (int v = 0; v < n; ++v) {
        if (match[v] == -1 && find_path(v)) ++res;
    }
    return res;
}

Graph strong_product(const Graph& h, int m) {
    if (m < 1) throw std::invalid_argument("strong_product: need at least one row");
    Graph g(m * h.n);
    g.labels.resize(g.n);
    auto id = [&](int r, int i) { return r * h.n + i; };
    for (int r = 0; r < m; ++r) {
        for (int i = 0; i < h.n; ++i) {
            std::string hv = h.labels.empty() ? std::to_string(i) : h.labels[i];
            g.labels[id(r, i)] = std::to_string(r) + ":" + hv;
        }
    }
    for (int r = 0; r < m; ++r) {
        for (auto [i, j] : h.edges) g.add_edge(id(r, i), id(r, j));
        if (r + 1 < m) {
            for (int i = 0; i < h.n; ++i) g.add_edge(id(r, i), id(r + 1, i));
            for (auto [i, j] : h.edges) {
                g.add_edge(id(r, i), id(r + 1, j));
                g.add_edge(id(r, j), id(r + 1, i));
            }
        }
    }
    return g;
}

bool verify_product_certificate(const Graph& g, const ProductCertificate& cert,
                                std::string* why) {
    auto fail = [&](const std::string& s) {
        if (why) *why = s;
        return false;
    };
    if (cert.rows < 1) return fail("row count must be positive");
    if (static_cast<int>(cert.placement.size()) != g.n) {
        return fail("placement must cover every vertex");
    }
    std::set<std::pair<int, int>> seen;
    for (auto [r, hv] : cert.placement) {
        if (r < 0 || r >= cert.rows) return fail("row index out of range");
        if (hv < 0 || hv >= cert.host.n) return fail("host vertex out of range");
        if (!seen.insert({r, hv}).second) return fail("placement is not injective");
    }
    for (auto [u, v] : g.edges) {
        auto [ru, hu] = cert.placement[u];
        auto [rv, hv] = cert.placement[v];
        if (std::abs(ru - rv) > 1) return fail("edge spans non-adjacent rows");
        if (hu != hv && !cert.host.has_edge(hu, hv)) {
            return fail("edge lands on non-adjacent host vertices");
        }
        // ru == rv && hu == hv is impossible: placement is injective.
    }
    int tw;
    if (cert.host.n <= 25) {
        tw = treewidth_exact(cert.host);
    } else {
        tw = treewidth_bounds(cert.host).upper;
    }
    if (tw > cert.t) return fail("host treewidth exceeds the claimed bound");
    return true;
}

bool verify_grid_subdivision(const Graph& g, const GridSubdivisionCert& cert, std::string* why) {
    auto fail = [&](const std::string& s) {
        if (why) *why = s;
        return false;
    };
    int m = cert.m;
    if (m < 1) return fail("grid side must be positive");
    if (static_cast<int>(cert.branch.size()) != m * m) return fail("branch list size mismatch");
    std::vector<char> is_branch(g.n, 0);
    std::vector<int> cell_of(g.n, -1);
    for (int i = 0; i < m * m; ++i) {
        int v = cert.branch[i];
        if (v < 0 || v >= g.n) return fail("branch vertex out of range");
        if (is_branch[v]) return fail("duplicate branch vertex");
        is_branch[v] = 1;
        cell_of[v] = i;
    }
    std::set<std::pair<int, int>> need;
    for (int r = 0; r < m; ++r) {
        for (int c = 0; c < m; ++c) {
            if (c + 1 < m) need.insert({r * m + c, r * m + c + 1});
            if (r + 1 < m) need.insert({r * m + c, (r + 1) * m + c});
        }
    }
    std::vector<char> used_internal(g.n, 0);
    for (const auto& path : cert.paths) {
        if (path.size() < 2) return fail("path too short");
        for (int v : path) {
            if (v < 0 || v >= g.n) return fail("path vertex out of range");
        }
        for (size_t i = 0; i + 1 < path.size(); ++i) {
            if (!g.has_edge(path[i], path[i + 1])) return fail("path step is not an edge");
        }
        int a = cell_of[path.front()], b = cell_of[path.back()];
        if (a < 0 || b < 0) return fail("path endpoint is not a branch vertex");
        if (a > b) std::swap(a, b);
        auto key = std::make_pair(a, b);
        if (!need.count(key)) return fail("path does not realize a missing grid edge");
        need.erase(key);
        for (size_t i = 1; i + 1 < path.size(); ++i) {
            int v = path[i];
            if (is_branch[v]) return fail("path interior touches a branch vertex");
            if (used_internal[v]) return fail("path interiors overlap");
            used_internal[v] = 1;
        }
    }
    if (!need.empty()) return fail("grid edges left unrealized");
    return true;
}

std::vector<LocalTreewidthEntry> local_treewidth_profile(const Graph& g, int v, int k_max) {
    std::vector<LocalTreewidthEntry> out;
    for (int k = 0; k <= k_max; ++k) {
        Graph h = neighborhood(g, v, k);
        LocalTreewidthEntry e;
        e.k = k;
        if (h.n <= 25) {
            e.lower = e.upper = treewidth_exact(h);
        } else {
            TreewidthBounds b = treewidth_bounds(h);
            e.lower = b.lower;
            e.upper = b.upper;
        }
        out.push_back(e);
    }
    return out;
}

bool subgraph_embeds(const Graph& pattern, const Graph& host) {
    if (pattern.n > 12) throw std::invalid_argument("subgraph_embeds: pattern capped at 12");
    if (pattern.n > host.n || pattern.edge_count() > host.edge_count()) return false;
    if (pattern.n == 0) return true;

    // Order pattern vertices so each one attaches to already-placed ones.
    std::vector<int> order;
    std::vector<char> placed(pattern.n, 0);
    std::vector<int> deg(pattern.n, 0);
    for (auto [u, v] : pattern.edges) {
        ++deg[u];
        ++deg[v];
    }
    while (static_cast<int>(order.size()) < pattern.n) {
        int best = -1, bestScore = -1;
        for (int v = 0; v < pattern.n; ++v) {
            if (placed[v]) continue;
            int score = 0;
            for (int w : pattern.adj[v]) {
                if (placed[w]) score += 100;
            }
            score += deg[v];
            if (score > bestScore) {
                bestScore = score;
                best = v;
            }
        }
        order.push_back(best);
        placed[best] = 1;
    }

    std::vector<int> map(pattern.n, -1);
    std::vector<char> used(host.n, 0);
    std::vector<int> hostDeg(host.n, 0);
    for (auto [u, v] : host.edges) {
        ++hostDeg[u];
        ++hostDeg[v];
    }

    auto dfs = [&](auto&& self, size_t idx) -> bool {
        if (idx == order.size()) return true;
        int pv = order[idx];
        for (int hv = 0; hv < host.n; ++hv) {
            if (used[hv] || hostDeg[hv] < deg[pv]) continue;
            bool ok = true;
            for (int w : pattern.adj[pv]) {
                if (map[w] >= 0 && !host.has_edge(hv, map[w])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            map[pv] = hv;
            used[hv] = 1;
            if (self(self, idx + 1)) return true;
            map[pv] = -1;
            used[hv] = 0;
        }
        return false;
    };
    return dfs(dfs, 0);
}

}  // namespace alphagon
