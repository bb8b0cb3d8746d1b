#include "hygirth/constructions.hpp"

#include <algorithm>
#include <deque>
#include <ostream>
#include <set>
#include <string>

#include "hygirth/error.hpp"
#include "hygirth/girth.hpp"

namespace hygirth {

namespace {

// Girth >= g check without computing the full girth: a capped search at g-1
// must come back empty.
bool girth_at_least(const Hypergraph& h, int g) {
    return !berge_girth(h, g - 1).finite();
}

Hypergraph build_cover(const Hypergraph& h, const std::vector<std::vector<std::uint8_t>>& coins) {
    const int n = h.n();
    std::vector<std::vector<int>> edges;
    edges.reserve(2 * h.m());
    for (int ei = 0; ei < h.m(); ++ei) {
        const auto& e = h.edge(ei);
        for (int side = 0; side < 2; ++side) {
            std::vector<int> lifted;
            lifted.reserve(e.size());
            for (std::size_t j = 0; j < e.size(); ++j) {
                const int bit = j == 0 ? side : side ^ coins[ei][j - 1];
                lifted.push_back(e[j] + bit * n);
            }
            edges.push_back(std::move(lifted));
        }
    }
    return Hypergraph(2 * n, std::move(edges));
}

}  // namespace

Hypergraph grid_hypergraph(int r, int d, long long max_vertices) {
    if (r < 3 || d < 2) fail("InvalidParams", "need r >= 3, d >= 2");
    long long size = 1;
    for (int i = 0; i < d; ++i) {
        size *= r;
        if (size > max_vertices) fail("SizeBudgetExceeded", "r^d exceeds the vertex budget");
    }
    std::vector<std::vector<int>> edges;
    long long stride = 1;
    for (int axis = 0; axis < d; ++axis) {
        for (long long x = 0; x < size; ++x) {
            if ((x / stride) % r != 0) continue;  // axis coordinate must be 0
            std::vector<int> line;
            line.reserve(r);
            for (int t = 0; t < r; ++t) line.push_back(static_cast<int>(x + t * stride));
            edges.push_back(std::move(line));
        }
        stride *= r;
    }
    return Hypergraph(static_cast<int>(size), std::move(edges));
}

CoverMap random_two_cover(const Hypergraph& h, Rng& rng) {
    std::vector<std::vector<std::uint8_t>> coins(h.m());
    std::uniform_int_distribution<int> coin(0, 1);
    for (int ei = 0; ei < h.m(); ++ei) {
        coins[ei].resize(h.edge(ei).size() > 0 ? h.edge(ei).size() - 1 : 0);
        for (auto& c : coins[ei]) c = static_cast<std::uint8_t>(coin(rng));
    }
    Hypergraph cover = build_cover(h, coins);
    return CoverMap{h, std::move(cover), std::move(coins)};
}

CoverMap trivial_cover(const Hypergraph& h) {
    std::vector<std::vector<std::uint8_t>> coins(h.m());
    for (int ei = 0; ei < h.m(); ++ei)
        coins[ei].assign(h.edge(ei).size() > 0 ? h.edge(ei).size() - 1 : 0, 0);
    Hypergraph cover = build_cover(h, coins);
    return CoverMap{h, std::move(cover), std::move(coins)};
}

Hypergraph lift_to_girth(const Hypergraph& h, int g, Rng& rng, LiftOptions opts) {
    const auto r = h.uniformity();
    if (!r || !h.is_linear()) fail("InvariantViolation", "lift requires a linear uniform hypergraph");

    Hypergraph current = h;
    GirthResult base_girth = berge_girth(current);
    if (!base_girth.finite()) return current;  // acyclic: girth already >= g

    for (int target = base_girth.value + 1; target <= g; ++target) {
        long long short_cycles = count_cycles(current, target - 1);
        if (opts.log)
            *opts.log << "lift: target " << target << " short_cycles " << short_cycles
                      << " vertices " << current.n() << '\n';
        while (short_cycles > 0) {
            bool improved = false;
            for (int attempt = 0; attempt < opts.attempts_per_round; ++attempt) {
                CoverMap cm = random_two_cover(current, rng);
                long long cover_count = count_cycles(cm.cover, target - 1);
                if (cover_count < short_cycles) {
                    current = std::move(cm.cover);
                    short_cycles = cover_count;
                    improved = true;
                    break;
                }
            }
            if (!improved)
                fail("BudgetExceeded", "no improving 2-cover found within " +
                                           std::to_string(opts.attempts_per_round) + " attempts");
            if (opts.log)
                *opts.log << "lift: target " << target << " short_cycles " << short_cycles
                          << " vertices " << current.n() << '\n';
        }
    }
    return current;
}

std::vector<int> find_scattered(const Hypergraph& h, int g, int k) {
    const IncidenceGraph ig = incidence_graph(h);
    std::vector<std::vector<int>> chosen_dist;
    std::vector<int> chosen;
    for (int v = 0; v < h.n() && static_cast<int>(chosen.size()) < k; ++v) {
        bool ok = true;
        for (const auto& dist : chosen_dist) {
            // dist values are incidence-graph distances; -1 means infinite.
            if (dist[v] != -1 && dist[v] / 2 <= g) { ok = false; break; }
        }
        if (!ok) continue;
        std::vector<int> dist(ig.node_count(), -1);
        dist[v] = 0;
        std::deque<int> queue{v};
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            for (int y : ig.adj[x])
                if (dist[y] == -1) {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
        }
        chosen.push_back(v);
        chosen_dist.push_back(std::move(dist));
    }
    return chosen;
}

std::optional<Hypergraph> surgery_step(const Hypergraph& h, int g) {
    const auto ru = h.uniformity();
    if (!ru) fail("InvariantViolation", "surgery requires a uniform hypergraph");
    const int r = *ru;
    const int d = h.n() > 0 ? h.degree(0) : 0;
    if (d < 1 || !h.is_regular(d)) fail("InvariantViolation", "surgery requires a regular hypergraph");
    if (!h.is_linear()) fail("InvariantViolation", "surgery requires a linear hypergraph");
    if (!girth_at_least(h, g)) fail("InvariantViolation", "surgery requires girth >= g");

    const std::vector<int> centers = find_scattered(h, g, r);
    if (static_cast<int>(centers.size()) < r) return std::nullopt;

    std::vector<char> vertex_deleted(h.n(), 0);
    std::vector<char> edge_deleted(h.m(), 0);
    for (int v : centers) vertex_deleted[v] = 1;
    int deleted_edges = 0;
    for (int v : centers)
        for (int e : h.incident(v)) {
            if (edge_deleted[e]) fail("InvariantViolation", "scattered centers share an edge");
            edge_deleted[e] = 1;
            ++deleted_edges;
        }
    if (deleted_edges != d * r) fail("InvariantViolation", "unexpected incident edge count");

    // Boundary sets W_i, each of size d(r-1), listed ascending.
    std::vector<std::vector<int>> boundary(r);
    for (int i = 0; i < r; ++i) {
        for (int e : h.incident(centers[i]))
            for (int u : h.edge(e))
                if (u != centers[i]) boundary[i].push_back(u);
        std::sort(boundary[i].begin(), boundary[i].end());
        if (std::adjacent_find(boundary[i].begin(), boundary[i].end()) != boundary[i].end() ||
            static_cast<int>(boundary[i].size()) != d * (r - 1))
            fail("InvariantViolation", "boundary set is not d(r-1) distinct vertices");
    }

    // Canonical transversal matching: new edge t takes the t-th element of
    // each W_i.
    std::set<std::vector<int>> old_edges(h.edges().begin(), h.edges().end());
    std::vector<std::vector<int>> new_edges;
    for (int t = 0; t < d * (r - 1); ++t) {
        std::vector<int> e;
        for (int i = 0; i < r; ++i) e.push_back(boundary[i][t]);
        std::sort(e.begin(), e.end());
        if (old_edges.count(e)) fail("InvariantViolation", "transversal edge already present");
        new_edges.push_back(std::move(e));
    }

    // Dense relabeling of the surviving vertices.
    std::vector<int> relabel(h.n(), -1);
    int next = 0;
    for (int v = 0; v < h.n(); ++v)
        if (!vertex_deleted[v]) relabel[v] = next++;

    std::vector<std::vector<int>> edges;
    for (int e = 0; e < h.m(); ++e) {
        if (edge_deleted[e]) continue;
        std::vector<int> mapped;
        for (int v : h.edge(e)) mapped.push_back(relabel[v]);
        edges.push_back(std::move(mapped));
    }
    for (const auto& e : new_edges) {
        std::vector<int> mapped;
        for (int v : e) mapped.push_back(relabel[v]);
        edges.push_back(std::move(mapped));
    }

    Hypergraph result(next, std::move(edges));
    if (result.n() != h.n() - r || !result.is_regular(d) || !result.is_linear() ||
        !girth_at_least(result, g))
        fail("InvariantViolation", "surgery output failed its postconditions");
    return result;
}

SurgeryLog surgery_minimize(const Hypergraph& h, int g, std::ostream* log) {
    SurgeryLog out{h, 0};
    while (auto next = surgery_step(out.result, g)) {
        out.result = std::move(*next);
        ++out.steps;
        if (log)
            *log << "surgery: step " << out.steps << " vertices " << out.result.n() << '\n';
    }
    return out;
}

Hypergraph midpoint_construction(const Graph& g) {
    if (!g.is_regular(3)) fail("NotCubic", "midpoint construction needs a 3-regular graph");
    std::vector<std::vector<int>> edges;
    edges.reserve(g.n());
    for (int w = 0; w < g.n(); ++w) edges.push_back(g.incident_edges(w));
    return Hypergraph(g.m(), std::move(edges));
}

Hypergraph star_partition_construction(const Graph& g, int r, int s) {
    if (r < 3 || s < 1) fail("ParamMismatch", "need r >= 3, s >= 1");
    const auto color = bipartition(g);
    if (!color) fail("ParamMismatch", "graph is not bipartite");
    const int left = static_cast<int>(std::count(color->begin(), color->end(), 0));
    if (2 * left != g.n()) fail("ParamMismatch", "bipartition sides are unequal");
    const int k = 2 * (r - 1) * s;
    if (!g.is_regular(k))
        fail("ParamMismatch", "graph degree must be exactly 2(r-1)s = " + std::to_string(k));

    const auto matchings = bipartite_1_factorization(g);

    // Partner lookup per matching.
    auto partners = [&](const std::vector<int>& matching) {
        std::vector<int> partner(g.n(), -1);
        for (int e : matching) {
            auto [u, v] = g.edges()[e];
            partner[u] = v;
            partner[v] = u;
        }
        return partner;
    };

    std::vector<std::vector<int>> hyperedges;
    int used = 0;
    for (int rep = 0; rep < s; ++rep) {
        for (int side = 0; side < 2; ++side) {
            std::vector<std::vector<int>> group;
            for (int j = 0; j < r - 1; ++j) group.push_back(partners(matchings[used++]));
            for (int c = 0; c < g.n(); ++c) {
                if ((*color)[c] != side) continue;
                std::vector<int> star{c};
                for (const auto& partner : group) star.push_back(partner[c]);
                hyperedges.push_back(std::move(star));
            }
        }
    }
    return Hypergraph(g.n(), std::move(hyperedges));
}

}  // namespace hygirth
