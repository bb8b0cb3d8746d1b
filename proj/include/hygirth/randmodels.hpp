#pragma once

#include <cstdint>
#include <vector>

#include "hygirth/bounds.hpp"
#include "hygirth/girth.hpp"
#include "hygirth/hypergraph.hpp"
#include "hygirth/permutation.hpp"
#include "hygirth/rng.hpp"

namespace hygirth {

// Generators for a random Cayley hypergraph on S_n: d permutations from
// X(n, r), the permutations made of n/r disjoint r-cycles.
struct CayleySpec {
    int n = 0;
    int r = 0;
    std::vector<Permutation> taus;

    int d() const { return static_cast<int>(taus.size()); }
};

// Uniform over X(n, r): shuffle 0..n-1, cut into n/r blocks, close each block
// into an r-cycle in shuffle order.
Permutation sample_X(int n, int r, Rng& rng);

// |X(n, r)| = n! / ((n/r)! r^(n/r)), exactly.
BigInt x_size(int n, int r);

CayleySpec sample_cayley_spec(int n, int r, int d, Rng& rng);

// tau_i^k != tau_j^l for all distinct i, j and k, l in [r-1].
bool check_condition6(const CayleySpec& spec);

// Materializes the hypergraph on all of S_n (vertices by lexicographic rank);
// edges are the left cosets of each <tau_i>.
Hypergraph cayley_hypergraph(const CayleySpec& spec, std::uint64_t max_vertices = 40320);

// Exact girth without materializing S_n: BFS over irreducible coset walks
// rooted at the identity (vertex-transitivity puts a shortest cycle there).
GirthResult cayley_girth(const CayleySpec& spec, int cap);

// Configuration model: n*d points, d per vertex, uniformly grouped into
// r-sets; requires r | n*d.
MultiHypergraph sample_config_model(int n, int r, int d, Rng& rng);

// Poisson intensity of length-i cycles: ((r-1)(d-1))^i / (2i).
double lambda_value(int r, int d, int i);

// exp(-sum_{l=1}^{g-1} lambda_l) / (1 - exp(-(lambda_1 + lambda_2))).
double girth_prob_paper(int r, int d, int g);
// exp(-sum_{l=3}^{g-1} lambda_l): independent-Poisson heuristic for
// Prob{girth >= g | linear}.
double girth_prob_poisson(int r, int d, int g);

}  // namespace hygirth
