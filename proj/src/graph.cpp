#include "hygirth/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>

#include "hygirth/error.hpp"

namespace hygirth {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges)
    : n_(n), edges_(std::move(edges)) {
    if (n_ < 0) fail("InvalidParams", "negative vertex count");
    std::set<std::pair<int, int>> seen;
    for (auto& [u, v] : edges_) {
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= n_) fail("IndexOutOfRange", "edge endpoint out of range");
        if (u == v) fail("InvalidParams", "loops are not allowed");
        if (!seen.insert({u, v}).second) fail("DuplicateEdge", "multi-edges are not allowed");
    }
    adj_.assign(n_, {});
    inc_.assign(n_, {});
    for (int ei = 0; ei < m(); ++ei) {
        auto [u, v] = edges_[ei];
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        inc_[u].push_back(ei);
        inc_[v].push_back(ei);
    }
}

bool Graph::is_regular(int k) const {
    for (int v = 0; v < n_; ++v)
        if (degree(v) != k) return false;
    return true;
}

std::optional<int> graph_girth(const Graph& g) {
    const int inf = std::numeric_limits<int>::max();
    int best = inf;
    std::vector<int> dist(g.n()), parent(g.n());
    for (int s = 0; s < g.n(); ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        parent[s] = -1;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            if (best != inf && 2 * dist[u] >= best) break;
            for (int w : g.neighbors(u)) {
                if (dist[w] == -1) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if (w != parent[u]) {
                    best = std::min(best, dist[u] + dist[w] + 1);
                }
            }
        }
        if (best == 3) break;
    }
    if (best == inf) return std::nullopt;
    return best;
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
    std::vector<int> color(g.n(), -1);
    for (int s = 0; s < g.n(); ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int w : g.neighbors(u)) {
                if (color[w] == -1) {
                    color[w] = 1 - color[u];
                    queue.push_back(w);
                } else if (color[w] == color[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

namespace {

// Hopcroft-Karp over a residual subset of the graph's edges. `left` maps the
// bipartition side; returns matched edge index per left vertex, or -1.
struct HopcroftKarp {
    const Graph& g;
    const std::vector<int>& color;
    const std::vector<char>& edge_alive;
    std::vector<int> match_edge_of;  // per vertex: matched edge index or -1
    std::vector<int> level;

    HopcroftKarp(const Graph& gr, const std::vector<int>& col, const std::vector<char>& alive)
        : g(gr), color(col), edge_alive(alive), match_edge_of(gr.n(), -1), level(gr.n()) {}

    int mate(int v) const {
        int e = match_edge_of[v];
        if (e == -1) return -1;
        auto [a, b] = g.edges()[e];
        return a == v ? b : a;
    }

    bool bfs() {
        std::deque<int> queue;
        std::fill(level.begin(), level.end(), -1);
        for (int v = 0; v < g.n(); ++v)
            if (color[v] == 0 && match_edge_of[v] == -1) {
                level[v] = 0;
                queue.push_back(v);
            }
        bool reachable_free = false;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int e : g.incident_edges(u)) {
                if (!edge_alive[e]) continue;
                auto [a, b] = g.edges()[e];
                int w = a == u ? b : a;
                if (level[w] != -1) continue;
                level[w] = level[u] + 1;
                int wm = mate(w);
                if (wm == -1) {
                    reachable_free = true;
                } else if (level[wm] == -1) {
                    level[wm] = level[w] + 1;
                    queue.push_back(wm);
                }
            }
        }
        return reachable_free;
    }

    bool dfs(int u) {
        for (int e : g.incident_edges(u)) {
            if (!edge_alive[e]) continue;
            auto [a, b] = g.edges()[e];
            int w = a == u ? b : a;
            if (level[w] != level[u] + 1) continue;
            level[w] = -1;
            int wm = mate(w);
            if (wm == -1 || (level[wm] == level[u] + 2 && dfs(wm))) {
                match_edge_of[u] = e;
                match_edge_of[w] = e;
                return true;
            }
        }
        return false;
    }

    void run() {
        while (bfs())
            for (int v = 0; v < g.n(); ++v)
                if (color[v] == 0 && match_edge_of[v] == -1) dfs(v);
    }
};

}  // namespace

std::vector<std::vector<int>> bipartite_1_factorization(const Graph& g) {
    auto color = bipartition(g);
    if (!color) fail("NotBipartiteRegular", "graph is not bipartite");
    int left = static_cast<int>(std::count(color->begin(), color->end(), 0));
    if (2 * left != g.n()) fail("NotBipartiteRegular", "bipartition sides are unequal");
    if (g.n() == 0) return {};
    const int k = g.degree(0);
    if (k == 0 || !g.is_regular(k)) fail("NotBipartiteRegular", "graph is not k-regular, k >= 1");

    std::vector<char> alive(g.m(), 1);
    std::vector<std::vector<int>> matchings;
    for (int round = 0; round < k; ++round) {
        HopcroftKarp hk(g, *color, alive);
        hk.run();
        std::vector<int> matching;
        for (int v = 0; v < g.n(); ++v) {
            if ((*color)[v] != 0) continue;
            int e = hk.match_edge_of[v];
            if (e == -1) fail("NotBipartiteRegular", "residual matching is not perfect");
            matching.push_back(e);
            alive[e] = 0;
        }
        std::sort(matching.begin(), matching.end());
        matchings.push_back(std::move(matching));
    }
    return matchings;
}

}  // namespace hygirth
