#pragma once

#include <optional>
#include <vector>

#include "hygirth/hypergraph.hpp"

namespace hygirth {

// Berge cycle certificate: distinct edges e_1..e_l and distinct vertices
// v_1..v_l with v_i in e_i n e_{i+1} (indices cyclic).
struct CycleWitness {
    std::vector<int> edge_indices;
    std::vector<int> witness_vertices;

    int length() const { return static_cast<int>(edge_indices.size()); }
};

struct GirthResult {
    enum class Kind { Finite, Infinite, Truncated };

    Kind kind = Kind::Infinite;
    // Finite: the girth. Truncated: the search cap (no cycle of length <= cap
    // exists; girth > cap).
    int value = 0;
    std::optional<CycleWitness> witness;

    bool finite() const { return kind == Kind::Finite; }
    bool infinite() const { return kind == Kind::Infinite; }

    static GirthResult finite_result(int g, CycleWitness w) {
        return {Kind::Finite, g, std::move(w)};
    }
    static GirthResult infinite_result() { return {Kind::Infinite, 0, std::nullopt}; }
    static GirthResult truncated_result(int cap) { return {Kind::Truncated, cap, std::nullopt}; }
};

bool validate_cycle(const Hypergraph& h, const CycleWitness& w);

// Exact Berge girth via BFS on the incidence graph (a Berge l-cycle is a
// simple 2l-cycle there). Without a cap the search is exhaustive up to
// min(n, m), the longest possible Berge cycle, so Infinite is decidable.
GirthResult berge_girth(const Hypergraph& h, std::optional<int> cap = std::nullopt);

// Independent test oracle: iterative-deepening enumeration of edge sequences
// with explicit witness-vertex assignment; no incidence-graph shortcut.
// Throws BudgetExceeded when the enumeration exceeds `budget` search nodes.
GirthResult berge_girth_oracle(const Hypergraph& h, int cap,
                               long long budget = 50'000'000);

// Minimum number of edges in a u-v path; nullopt if unreachable.
std::optional<int> distance(const Hypergraph& h, int u, int v);
// Max pairwise distance; nullopt means disconnected (Infinite).
std::optional<int> diameter(const Hypergraph& h);

// Number of distinct simple 2l-cycles in the incidence graph, each counted
// once as a node set. This is the canonical Berge-l-cycle count.
long long count_cycles(const Hypergraph& h, int l, long long budget = 500'000'000);

}  // namespace hygirth
