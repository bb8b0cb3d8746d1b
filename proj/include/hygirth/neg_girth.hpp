#pragma once

#include <optional>
#include <vector>

#include "hygirth/hypergraph.hpp"

namespace hygirth {

// (-k)-girth search outcome: the smallest qualifying vertex-set size, or
// nullopt when no set of size <= cap qualifies. The witness is a vertex set
// of size g spanning at least g - k edges.
struct NegGirthResult {
    int k = 0;
    int cap = 0;
    std::optional<int> g;
    std::vector<int> witness;
    int spanned_edges = 0;

    bool found() const { return g.has_value(); }
};

// Smallest g in [floor_k, cap] such that some g vertices span >= g - k edges
// of the 3-uniform hypergraph h ("span" = the edge lies inside the set).
// Floors: 4 for k = 1 and k = 2, 6 for k = 3. cap <= 14.
NegGirthResult minus_k_girth(const Hypergraph& h, int k, int cap);

}  // namespace hygirth
