#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "hygirth/graph.hpp"
#include "hygirth/hypergraph.hpp"
#include "hygirth/rng.hpp"

namespace hygirth {

// A 2-cover of `base`: cover vertex (v, bit) is encoded as v + bit * base.n().
// coins[e][j] is the bit attached to the (j+1)-th vertex of base edge e (the
// edge's vertices taken in ascending order; the first vertex carries no coin).
struct CoverMap {
    Hypergraph base;
    Hypergraph cover;
    std::vector<std::vector<std::uint8_t>> coins;

    int project(int cover_vertex) const { return cover_vertex % base.n(); }
    int bit(int cover_vertex) const { return cover_vertex / base.n(); }
};

// Vertex set Z_r^d (mixed-radix encoded), edges = all axis-parallel lines.
// Linear, r-uniform, d-regular, with d * r^(d-1) edges.
Hypergraph grid_hypergraph(int r, int d, long long max_vertices = 2'000'000);

CoverMap random_two_cover(const Hypergraph& h, Rng& rng);
// All coins zero: two vertex-disjoint copies of the base.
CoverMap trivial_cover(const Hypergraph& h);

struct LiftOptions {
    int attempts_per_round = 200;
    std::ostream* log = nullptr;  // one line per round when set
};

// Repeated random 2-covers until the girth reaches at least g, descending on
// short-cycle counts; vertex count doubles once per accepted cover.
Hypergraph lift_to_girth(const Hypergraph& h, int g, Rng& rng, LiftOptions opts = {});

// Greedy (ascending vertex order) set of vertices with pairwise distance > g,
// truncated at k.
std::vector<int> find_scattered(const Hypergraph& h, int g, int k);

// One Erdos-Sachs surgery step: removes r pairwise-far vertices with their
// incident edges and rewires the boundary with d(r-1) disjoint transversal
// edges; nullopt when no scattered r-set exists. Preserves linearity,
// d-regularity and girth >= g; |V| shrinks by r.
std::optional<Hypergraph> surgery_step(const Hypergraph& h, int g);

struct SurgeryLog {
    Hypergraph result;
    int steps = 0;
};

SurgeryLog surgery_minimize(const Hypergraph& h, int g, std::ostream* log = nullptr);

// 3-regular graph -> 3-uniform 2-regular hypergraph on E(G) with equal girth.
Hypergraph midpoint_construction(const Graph& g);

// Bipartite 2(r-1)s-regular graph with equal sides -> r-uniform rs-regular
// hypergraph of girth >= girth(G)/2, via a star partition of E(G).
Hypergraph star_partition_construction(const Graph& g, int r, int s);

}  // namespace hygirth
