#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace hygirth {

// Simple undirected graph; edges stored as (u, v) with u < v.
class Graph {
public:
    Graph(int n, std::vector<std::pair<int, int>> edges);

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    // Edge indices incident to v.
    const std::vector<int>& incident_edges(int v) const { return inc_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    bool is_regular(int k) const;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::vector<int>> inc_;
};

// Exact graph girth (BFS from every vertex); nullopt if acyclic.
std::optional<int> graph_girth(const Graph& g);

// Two-coloring; nullopt if the graph is not bipartite. color[v] in {0, 1};
// isolated vertices get color 0.
std::optional<std::vector<int>> bipartition(const Graph& g);

// Edge-disjoint perfect matchings covering E(G), for a k-regular bipartite
// graph with equal sides (each matching is a list of edge indices). Repeated
// Hopcroft-Karp on the residual graph; Hall guarantees each round perfects.
std::vector<std::vector<int>> bipartite_1_factorization(const Graph& g);

}  // namespace hygirth
