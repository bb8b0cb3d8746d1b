#include "hygirth/neg_girth.hpp"

#include <algorithm>

#include "hygirth/error.hpp"

namespace hygirth {

namespace {

int floor_for(int k) {
    switch (k) {
        case 1: return 4;  // documented choice; 3 vertices can never span 2 distinct 3-edges
        case 2: return 4;
        case 3: return 6;
        default: fail("InvalidParams", "offset k must be 1, 2 or 3");
    }
}

struct Search {
    const Hypergraph& h;
    int k, cap, floor;
    std::vector<char> in_union;
    std::vector<int> union_vertices;
    int best = -1;
    std::vector<int> best_witness;
    int best_spanned = 0;

    Search(const Hypergraph& hg, int kk, int c)
        : h(hg), k(kk), cap(c), floor(floor_for(kk)), in_union(hg.n(), 0) {}

    int spanned_edges() const {
        int count = 0;
        for (const auto& e : h.edges()) {
            bool inside = true;
            for (int v : e)
                if (!in_union[v]) { inside = false; break; }
            if (inside) ++count;
        }
        return count;
    }

    // Candidate from the current union: pad to g = max(|union|, floor) with
    // arbitrary outside vertices; qualifies when >= g - k edges are spanned.
    void check_candidate() {
        const int u = static_cast<int>(union_vertices.size());
        if (u == 0) return;
        const int g = std::max(u, floor);
        if (g > cap || g > h.n()) return;
        if (best != -1 && g >= best) return;
        const int spanned = spanned_edges();
        if (spanned < g - k) return;
        best = g;
        best_witness = union_vertices;
        for (int v = 0; v < h.n() && static_cast<int>(best_witness.size()) < g; ++v)
            if (!in_union[v]) best_witness.push_back(v);
        std::sort(best_witness.begin(), best_witness.end());
        // Recount over the padded set; padding can only add spanned edges.
        std::vector<char> in_set(h.n(), 0);
        for (int v : best_witness) in_set[v] = 1;
        best_spanned = 0;
        for (const auto& e : h.edges()) {
            bool inside = true;
            for (int v : e)
                if (!in_set[v]) { inside = false; break; }
            if (inside) ++best_spanned;
        }
    }

    void dfs(int from_edge) {
        check_candidate();
        if (best == floor) return;  // nothing smaller can exist
        for (int e = from_edge; e < h.m(); ++e) {
            const auto& edge = h.edge(e);
            int added = 0;
            for (int v : edge)
                if (!in_union[v]) ++added;
            if (added == 0) continue;  // already spanned, does not change the union
            if (static_cast<int>(union_vertices.size()) + added > cap) continue;
            for (int v : edge)
                if (!in_union[v]) {
                    in_union[v] = 1;
                    union_vertices.push_back(v);
                }
            dfs(e + 1);
            for (int i = 0; i < added; ++i) {
                in_union[union_vertices.back()] = 0;
                union_vertices.pop_back();
            }
            if (best == floor) return;
        }
    }
};

}  // namespace

NegGirthResult minus_k_girth(const Hypergraph& h, int k, int cap) {
    if (!h.is_uniform(3)) fail("NotThreeUniform", "(-k)-girth is defined for 3-uniform hypergraphs");
    if (cap > 14) fail("CapTooLarge", "cap must be <= 14 (exponential search)");
    Search search(h, k, cap);
    search.dfs(0);
    NegGirthResult result;
    result.k = k;
    result.cap = cap;
    if (search.best != -1) {
        result.g = search.best;
        result.witness = search.best_witness;
        result.spanned_edges = search.best_spanned;
    }
    return result;
}

}  // namespace hygirth
