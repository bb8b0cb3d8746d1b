#pragma once

#include <optional>
#include <vector>

namespace hygirth {

// Simple hypergraph on vertices 0..n-1. Edges are strictly sorted vertex
// sets, pairwise distinct; the per-vertex incidence index is built once at
// construction. Immutable afterwards, safe to share across threads.
class Hypergraph {
public:
    Hypergraph(int n, std::vector<std::vector<int>> raw_edges);

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::vector<int>>& edges() const { return edges_; }
    const std::vector<int>& edge(int e) const { return edges_[e]; }
    // Edge indices incident to vertex v.
    const std::vector<int>& incident(int v) const { return incidence_[v]; }
    int degree(int v) const { return static_cast<int>(incidence_[v].size()); }

    bool is_uniform(int r) const;
    bool is_regular(int d) const;
    bool is_linear() const;
    // Common edge size if uniform, nullopt otherwise (nullopt for m = 0 too).
    std::optional<int> uniformity() const;

    bool operator==(const Hypergraph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<std::vector<int>> edges_;
    std::vector<std::vector<int>> incidence_;
};

// Configuration-model output: edges are sorted multisets, duplicates allowed.
class MultiHypergraph {
public:
    MultiHypergraph(int n, std::vector<std::vector<int>> raw_edges);

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::vector<int>>& edges() const { return edges_; }

    // Any edge with a repeated vertex (a length-1 degeneracy).
    bool has_repeated_vertex() const;
    // Some pair of edges shares >= 2 points counting multiplicity (this
    // includes duplicate edges); together with has_repeated_vertex these are
    // exactly the "cycle of length <= 2" degeneracies.
    bool has_heavy_pair() const;
    bool is_simple_linear() const { return !has_repeated_vertex() && !has_heavy_pair(); }

    // Valid only when is_simple_linear().
    Hypergraph to_hypergraph() const;

private:
    int n_ = 0;
    std::vector<std::vector<int>> edges_;
};

// Bipartite incidence encoding: nodes 0..n-1 are vertex-nodes, n..n+m-1 are
// edge-nodes; vertex-node u is adjacent to edge-node n+e iff u is in edge e.
struct IncidenceGraph {
    int n_vertices = 0;
    int n_edges = 0;
    std::vector<std::vector<int>> adj;

    int node_count() const { return n_vertices + n_edges; }
    bool is_edge_node(int node) const { return node >= n_vertices; }
    int edge_index(int node) const { return node - n_vertices; }
};

IncidenceGraph incidence_graph(const Hypergraph& h);

}  // namespace hygirth
