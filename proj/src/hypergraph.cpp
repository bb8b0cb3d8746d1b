#include "hygirth/hypergraph.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "hygirth/error.hpp"

namespace hygirth {

Hypergraph::Hypergraph(int n, std::vector<std::vector<int>> raw_edges)
    : n_(n), edges_(std::move(raw_edges)) {
    if (n_ < 0) fail("InvalidParams", "negative vertex count");
    for (auto& e : edges_) {
        if (e.empty()) fail("EmptyEdge", "edges must be non-empty");
        std::sort(e.begin(), e.end());
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] < 0 || e[i] >= n_)
                fail("IndexOutOfRange",
                     "vertex " + std::to_string(e[i]) + " outside [0," + std::to_string(n_) + ")");
            if (i > 0 && e[i] == e[i - 1])
                fail("RepeatedVertexInEdge", "vertex " + std::to_string(e[i]) + " repeated");
        }
    }
    std::set<std::vector<int>> seen;
    for (const auto& e : edges_)
        if (!seen.insert(e).second) fail("DuplicateEdge", "two edges are equal as sets");

    incidence_.assign(n_, {});
    for (int ei = 0; ei < m(); ++ei)
        for (int v : edges_[ei]) incidence_[v].push_back(ei);
}

bool Hypergraph::is_uniform(int r) const {
    for (const auto& e : edges_)
        if (static_cast<int>(e.size()) != r) return false;
    return true;
}

bool Hypergraph::is_regular(int d) const {
    for (int v = 0; v < n_; ++v)
        if (degree(v) != d) return false;
    return true;
}

bool Hypergraph::is_linear() const {
    // Pairwise check through the incidence index: edges meeting twice share
    // two vertices, so they appear together in two incidence lists.
    for (int v = 0; v < n_; ++v) {
        const auto& inc = incidence_[v];
        for (std::size_t a = 0; a < inc.size(); ++a)
            for (std::size_t b = a + 1; b < inc.size(); ++b) {
                const auto& e = edges_[inc[a]];
                const auto& f = edges_[inc[b]];
                int common = 0;
                std::size_t i = 0, j = 0;
                while (i < e.size() && j < f.size()) {
                    if (e[i] == f[j]) { ++common; ++i; ++j; }
                    else if (e[i] < f[j]) ++i;
                    else ++j;
                }
                if (common >= 2) return false;
            }
    }
    return true;
}

std::optional<int> Hypergraph::uniformity() const {
    if (edges_.empty()) return std::nullopt;
    int r = static_cast<int>(edges_[0].size());
    return is_uniform(r) ? std::optional<int>(r) : std::nullopt;
}

MultiHypergraph::MultiHypergraph(int n, std::vector<std::vector<int>> raw_edges)
    : n_(n), edges_(std::move(raw_edges)) {
    if (n_ < 0) fail("InvalidParams", "negative vertex count");
    for (auto& e : edges_) {
        if (e.empty()) fail("EmptyEdge", "edges must be non-empty");
        std::sort(e.begin(), e.end());
        for (int v : e)
            if (v < 0 || v >= n_) fail("IndexOutOfRange", "vertex index out of range");
    }
}

bool MultiHypergraph::has_repeated_vertex() const {
    for (const auto& e : edges_)
        for (std::size_t i = 1; i < e.size(); ++i)
            if (e[i] == e[i - 1]) return true;
    return false;
}

bool MultiHypergraph::has_heavy_pair() const {
    for (std::size_t a = 0; a < edges_.size(); ++a)
        for (std::size_t b = a + 1; b < edges_.size(); ++b) {
            const auto& e = edges_[a];
            const auto& f = edges_[b];
            int common = 0;
            std::size_t i = 0, j = 0;
            while (i < e.size() && j < f.size()) {
                if (e[i] == f[j]) { ++common; ++i; ++j; }
                else if (e[i] < f[j]) ++i;
                else ++j;
            }
            if (common >= 2) return true;
        }
    return false;
}

Hypergraph MultiHypergraph::to_hypergraph() const {
    if (!is_simple_linear())
        fail("InvariantViolation", "multihypergraph is not simple and linear");
    return Hypergraph(n_, edges_);
}

IncidenceGraph incidence_graph(const Hypergraph& h) {
    IncidenceGraph g;
    g.n_vertices = h.n();
    g.n_edges = h.m();
    g.adj.assign(g.node_count(), {});
    for (int v = 0; v < h.n(); ++v)
        for (int e : h.incident(v)) g.adj[v].push_back(h.n() + e);
    for (int e = 0; e < h.m(); ++e)
        for (int v : h.edge(e)) g.adj[h.n() + e].push_back(v);
    return g;
}

}  // namespace hygirth
