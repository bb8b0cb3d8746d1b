#include "hygirth/girth.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <set>

#include "hygirth/error.hpp"

namespace hygirth {

namespace {

int default_cap(const Hypergraph& h) { return std::min(h.n(), h.m()); }

// Rotates an incidence-graph cycle (alternating node list, even length) so
// that it starts at an edge-node, and converts it to a CycleWitness.
CycleWitness incidence_cycle_to_witness(const Hypergraph& h, std::vector<int> nodes) {
    std::size_t start = 0;
    while (nodes[start] < h.n()) ++start;
    std::rotate(nodes.begin(), nodes.begin() + static_cast<std::ptrdiff_t>(start), nodes.end());
    CycleWitness w;
    for (std::size_t i = 0; i < nodes.size(); i += 2) {
        w.edge_indices.push_back(nodes[i] - h.n());
        w.witness_vertices.push_back(nodes[i + 1]);
    }
    return w;
}

}  // namespace

bool validate_cycle(const Hypergraph& h, const CycleWitness& w) {
    const int l = w.length();
    if (l < 2 || static_cast<int>(w.witness_vertices.size()) != l) return false;
    std::set<int> edges(w.edge_indices.begin(), w.edge_indices.end());
    if (static_cast<int>(edges.size()) != l) return false;
    std::set<int> verts(w.witness_vertices.begin(), w.witness_vertices.end());
    if (static_cast<int>(verts.size()) != l) return false;
    for (int e : w.edge_indices)
        if (e < 0 || e >= h.m()) return false;
    for (int i = 0; i < l; ++i) {
        int v = w.witness_vertices[i];
        if (v < 0 || v >= h.n()) return false;
        const auto& e = h.edge(w.edge_indices[i]);
        const auto& f = h.edge(w.edge_indices[(i + 1) % l]);
        if (!std::binary_search(e.begin(), e.end(), v)) return false;
        if (!std::binary_search(f.begin(), f.end(), v)) return false;
    }
    return true;
}

GirthResult berge_girth(const Hypergraph& h, std::optional<int> cap) {
    const int search_cap = cap.value_or(default_cap(h));
    const bool exhaustive = search_cap >= default_cap(h);
    const IncidenceGraph g = incidence_graph(h);
    const int nn = g.node_count();
    const int cap_inc = 2 * search_cap;

    int best_len = cap_inc + 1;  // incidence cycle length upper sentinel
    std::vector<int> best_cycle;

    std::vector<int> dist(nn), parent(nn);
    std::deque<int> queue;

    auto path_to_root = [&](int x) {
        std::vector<int> p;
        for (; x != -1; x = parent[x]) p.push_back(x);
        return p;  // [x, ..., source]
    };

    for (int s = h.n(); s < nn; ++s) {  // every cycle contains an edge-node
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        parent[s] = -1;
        queue.assign(1, s);
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            if (2 * (dist[u] + 1) > best_len) break;
            for (int w : g.adj[u]) {
                if (dist[w] == -1) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    if (2 * dist[w] < best_len) queue.push_back(w);
                    continue;
                }
                if (w == parent[u]) continue;
                const int candidate = dist[u] + dist[w] + 1;
                if (candidate >= best_len || candidate > cap_inc) continue;
                // Candidate cycle: tree paths u->s and w->s plus the edge
                // (u, w). Accept only when the paths meet at s alone; a source
                // on a shortest cycle always yields such a candidate.
                std::vector<int> pu = path_to_root(u);
                std::vector<int> pw = path_to_root(w);
                std::set<int> seen(pu.begin(), pu.end());
                bool simple = true;
                for (std::size_t i = 0; i + 1 < pw.size(); ++i)
                    if (seen.count(pw[i])) { simple = false; break; }
                if (!simple) continue;
                std::vector<int> cycle(pu.rbegin(), pu.rend());  // s .. u
                cycle.insert(cycle.end(), pw.begin(), pw.end() - 1);  // w .. child of s
                best_len = candidate;
                best_cycle = std::move(cycle);
            }
        }
        if (best_len == 4) break;  // nothing shorter exists
    }

    if (!best_cycle.empty()) {
        CycleWitness w = incidence_cycle_to_witness(h, best_cycle);
        assert(validate_cycle(h, w));
        return GirthResult::finite_result(best_len / 2, std::move(w));
    }
    return exhaustive ? GirthResult::infinite_result()
                      : GirthResult::truncated_result(search_cap);
}

namespace {

struct OracleSearch {
    const Hypergraph& h;
    long long budget;
    int target_len = 0;
    std::vector<char> edge_used;
    std::vector<char> vertex_used;
    std::vector<int> seq_edges;
    std::vector<int> seq_vertices;

    explicit OracleSearch(const Hypergraph& hg, long long b)
        : h(hg), budget(b), edge_used(hg.m(), 0), vertex_used(hg.n(), 0) {}

    void spend() {
        if (--budget < 0) fail("BudgetExceeded", "girth oracle enumeration budget exhausted");
    }

    // Extends the sequence past edge seq_edges.back(); first edge of the
    // cycle is the minimum edge index present, cutting rotations.
    bool extend() {
        spend();
        const int k = static_cast<int>(seq_edges.size());
        const int first = seq_edges.front();
        const int last = seq_edges.back();
        if (k == target_len) {
            for (int v : h.edge(last)) {
                if (vertex_used[v]) continue;
                if (std::binary_search(h.edge(first).begin(), h.edge(first).end(), v)) {
                    seq_vertices.push_back(v);
                    return true;
                }
            }
            return false;
        }
        for (int v : h.edge(last)) {
            if (vertex_used[v]) continue;
            for (int f : h.incident(v)) {
                if (f <= first || edge_used[f]) continue;
                edge_used[f] = 1;
                vertex_used[v] = 1;
                seq_edges.push_back(f);
                seq_vertices.push_back(v);
                if (extend()) return true;
                seq_edges.pop_back();
                seq_vertices.pop_back();
                edge_used[f] = 0;
                vertex_used[v] = 0;
            }
        }
        return false;
    }

    std::optional<CycleWitness> find(int l) {
        target_len = l;
        for (int e0 = 0; e0 < h.m(); ++e0) {
            edge_used[e0] = 1;
            seq_edges.assign(1, e0);
            seq_vertices.clear();
            if (extend()) {
                CycleWitness w{seq_edges, seq_vertices};
                edge_used[e0] = 0;
                return w;
            }
            edge_used[e0] = 0;
        }
        return std::nullopt;
    }
};

}  // namespace

GirthResult berge_girth_oracle(const Hypergraph& h, int cap, long long budget) {
    OracleSearch search(h, budget);
    const int max_l = std::min(cap, default_cap(h));
    for (int l = 2; l <= max_l; ++l) {
        if (auto w = search.find(l)) {
            assert(validate_cycle(h, *w));
            return GirthResult::finite_result(l, std::move(*w));
        }
    }
    return cap >= default_cap(h) ? GirthResult::infinite_result()
                                 : GirthResult::truncated_result(cap);
}

std::optional<int> distance(const Hypergraph& h, int u, int v) {
    if (u < 0 || u >= h.n() || v < 0 || v >= h.n())
        fail("IndexOutOfRange", "distance endpoint out of range");
    if (u == v) return 0;
    const IncidenceGraph g = incidence_graph(h);
    std::vector<int> dist(g.node_count(), -1);
    std::deque<int> queue{u};
    dist[u] = 0;
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (int y : g.adj[x]) {
            if (dist[y] != -1) continue;
            dist[y] = dist[x] + 1;
            if (y == v) return dist[y] / 2;
            queue.push_back(y);
        }
    }
    return std::nullopt;
}

std::optional<int> diameter(const Hypergraph& h) {
    if (h.n() <= 1) return 0;
    const IncidenceGraph g = incidence_graph(h);
    int diam = 0;
    std::vector<int> dist(g.node_count());
    for (int u = 0; u < h.n(); ++u) {
        std::fill(dist.begin(), dist.end(), -1);
        std::deque<int> queue{u};
        dist[u] = 0;
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            for (int y : g.adj[x]) {
                if (dist[y] != -1) continue;
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
        for (int v = 0; v < h.n(); ++v) {
            if (dist[v] == -1) return std::nullopt;
            diam = std::max(diam, dist[v] / 2);
        }
    }
    return diam;
}

namespace {

// DFS enumeration of simple cycles of fixed length through start node s,
// restricted to nodes > s; each found cycle is stored as a sorted node set.
struct CycleCounter {
    const IncidenceGraph& g;
    int target_len;
    long long budget;
    std::set<std::vector<int>> found;
    std::vector<char> on_path;
    std::vector<int> path;
    std::vector<int> dist_to_start;

    CycleCounter(const IncidenceGraph& gr, int len, long long b)
        : g(gr), target_len(len), budget(b), on_path(gr.node_count(), 0) {}

    void spend() {
        if (--budget < 0) fail("BudgetExceeded", "cycle counting budget exhausted");
    }

    void dfs(int u, int start) {
        spend();
        const int depth = static_cast<int>(path.size());
        for (int w : g.adj[u]) {
            if (w == start && depth == target_len) {
                std::vector<int> key = path;
                std::sort(key.begin(), key.end());
                found.insert(std::move(key));
                continue;
            }
            if (w <= start || on_path[w] || depth >= target_len) continue;
            if (dist_to_start[w] > target_len - depth) continue;
            on_path[w] = 1;
            path.push_back(w);
            dfs(w, start);
            path.pop_back();
            on_path[w] = 0;
        }
    }

    void run() {
        const int nn = g.node_count();
        std::vector<int> dist(nn);
        for (int s = 0; s < nn; ++s) {
            // Distances to s over nodes > s, for pruning.
            std::fill(dist.begin(), dist.end(), nn + 1);
            dist[s] = 0;
            std::deque<int> queue{s};
            while (!queue.empty()) {
                int x = queue.front();
                queue.pop_front();
                if (dist[x] >= target_len) continue;
                for (int y : g.adj[x])
                    if (y > s && dist[y] > dist[x] + 1) {
                        dist[y] = dist[x] + 1;
                        queue.push_back(y);
                    }
            }
            dist_to_start = dist;
            on_path[s] = 1;
            path.assign(1, s);
            dfs(s, s);
            path.clear();
            on_path[s] = 0;
        }
    }
};

}  // namespace

long long count_cycles(const Hypergraph& h, int l, long long budget) {
    if (l < 2) fail("InvalidParams", "cycle length must be >= 2");
    const IncidenceGraph g = incidence_graph(h);
    CycleCounter counter(g, 2 * l, budget);
    counter.run();
    return static_cast<long long>(counter.found.size());
}

}  // namespace hygirth
