#include "hygirth/randmodels.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <unordered_map>

#include "hygirth/error.hpp"

namespace hygirth {

Permutation sample_X(int n, int r, Rng& rng) {
    if (r < 2 || n < r || n % r != 0) fail("InvalidParams", "need r >= 2 and r | n");
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<int> img(n);
    for (int b = 0; b < n / r; ++b)
        for (int i = 0; i < r; ++i)
            img[order[b * r + i]] = order[b * r + (i + 1) % r];
    return Permutation(std::move(img));
}

BigInt x_size(int n, int r) {
    if (r < 2 || n < r || n % r != 0) fail("InvalidParams", "need r >= 2 and r | n");
    BigInt num = 1;
    for (int i = 2; i <= n; ++i) num *= i;
    BigInt denom = 1;
    for (int i = 2; i <= n / r; ++i) denom *= i;
    for (int i = 0; i < n / r; ++i) denom *= r;
    return num / denom;
}

CayleySpec sample_cayley_spec(int n, int r, int d, Rng& rng) {
    if (d < 2) fail("InvalidParams", "need at least two generators");
    CayleySpec spec;
    spec.n = n;
    spec.r = r;
    for (int i = 0; i < d; ++i) spec.taus.push_back(sample_X(n, r, rng));
    return spec;
}

namespace {

std::vector<std::vector<Permutation>> generator_powers(const CayleySpec& spec) {
    std::vector<std::vector<Permutation>> powers(spec.d());
    for (int i = 0; i < spec.d(); ++i) {
        Permutation p = Permutation::identity(spec.n);
        for (int k = 1; k <= spec.r - 1; ++k) {
            p = perm_compose(p, spec.taus[i]);
            powers[i].push_back(p);
        }
    }
    return powers;
}

}  // namespace

bool check_condition6(const CayleySpec& spec) {
    const auto powers = generator_powers(spec);
    for (int i = 0; i < spec.d(); ++i)
        for (int j = i + 1; j < spec.d(); ++j)
            for (const auto& pi : powers[i])
                for (const auto& pj : powers[j])
                    if (pi == pj) return false;
    return true;
}

Hypergraph cayley_hypergraph(const CayleySpec& spec, std::uint64_t max_vertices) {
    const std::uint64_t order = factorial_u64(spec.n);
    if (order > max_vertices) fail("BudgetExceeded", "n! exceeds the vertex budget");
    if (!check_condition6(spec)) fail("Condition6Violated", "generators share a nontrivial power");

    const auto count = static_cast<std::size_t>(order);
    std::vector<std::vector<int>> edges;
    edges.reserve(count / spec.r * spec.d());
    std::vector<char> visited(count);
    for (int i = 0; i < spec.d(); ++i) {
        std::fill(visited.begin(), visited.end(), 0);
        for (std::size_t rank = 0; rank < count; ++rank) {
            if (visited[rank]) continue;
            std::vector<int> coset;
            Permutation sigma = perm_unrank(spec.n, rank);
            for (int k = 0; k < spec.r; ++k) {
                const auto member = static_cast<std::size_t>(perm_rank(sigma));
                visited[member] = 1;
                coset.push_back(static_cast<int>(member));
                sigma = perm_compose(sigma, spec.taus[i]);
            }
            edges.push_back(std::move(coset));
        }
    }
    return Hypergraph(static_cast<int>(count), std::move(edges));
}

namespace {

struct VecHash {
    std::size_t operator()(const std::vector<int>& v) const {
        std::size_t h = 1469598103934665603ULL;
        for (int x : v) {
            h ^= static_cast<std::size_t>(x) + 0x9E3779B9;
            h *= 1099511628211ULL;
        }
        return h;
    }
};

}  // namespace

GirthResult cayley_girth(const CayleySpec& spec, int cap) {
    if (!check_condition6(spec)) fail("Condition6Violated", "generators share a nontrivial power");
    const auto powers = generator_powers(spec);
    const Permutation id = Permutation::identity(spec.n);
    const int d = spec.d();
    int best = cap + 1;

    struct State {
        Permutation sigma;
        int last;
        int depth;
    };

    // One BFS per choice of the first generator in the closed walk; states
    // carry the last generator used so the walk stays irreducible, and the
    // cyclic constraint j_l != j_1 is enforced at closure.
    for (int j0 = 0; j0 < d; ++j0) {
        std::unordered_map<std::vector<int>, unsigned, VecHash> visited;
        std::deque<State> queue;
        for (const auto& p : powers[j0]) {
            visited[p.image()] |= 1u << j0;
            queue.push_back({p, j0, 1});
        }
        while (!queue.empty()) {
            State st = std::move(queue.front());
            queue.pop_front();
            if (st.depth + 1 >= best) continue;
            for (int j = 0; j < d; ++j) {
                if (j == st.last) continue;
                for (const auto& p : powers[j]) {
                    Permutation next = perm_compose(st.sigma, p);
                    if (next == id) {
                        if (j != j0) best = std::min(best, st.depth + 1);
                        continue;
                    }
                    auto& mask = visited[next.image()];
                    if (mask & (1u << j)) continue;
                    mask |= 1u << j;
                    if (st.depth + 1 < best) queue.push_back({std::move(next), j, st.depth + 1});
                }
            }
        }
    }

    if (best <= cap) return {GirthResult::Kind::Finite, best, std::nullopt};
    return GirthResult::truncated_result(cap);
}

MultiHypergraph sample_config_model(int n, int r, int d, Rng& rng) {
    if (n < 1 || r < 2 || d < 1 || (static_cast<long long>(n) * d) % r != 0)
        fail("InvalidParams", "need r | n*d");
    std::vector<int> points(static_cast<std::size_t>(n) * d);
    for (std::size_t p = 0; p < points.size(); ++p) points[p] = static_cast<int>(p) / d;
    std::shuffle(points.begin(), points.end(), rng);
    std::vector<std::vector<int>> edges;
    for (std::size_t at = 0; at < points.size(); at += r)
        edges.emplace_back(points.begin() + static_cast<std::ptrdiff_t>(at),
                           points.begin() + static_cast<std::ptrdiff_t>(at + r));
    return MultiHypergraph(n, std::move(edges));
}

double lambda_value(int r, int d, int i) {
    if (i < 1 || r < 2 || d < 1) fail("InvalidParams", "need i >= 1, r >= 2, d >= 1");
    return std::pow(static_cast<double>((r - 1) * (d - 1)), i) / (2.0 * i);
}

double girth_prob_paper(int r, int d, int g) {
    if (g < 3) fail("InvalidParams", "need g >= 3");
    double sum = 0.0;
    for (int l = 1; l <= g - 1; ++l) sum += lambda_value(r, d, l);
    const double conditioning = 1.0 - std::exp(-(lambda_value(r, d, 1) + lambda_value(r, d, 2)));
    return std::exp(-sum) / conditioning;
}

double girth_prob_poisson(int r, int d, int g) {
    if (g < 3) fail("InvalidParams", "need g >= 3");
    double sum = 0.0;
    for (int l = 3; l <= g - 1; ++l) sum += lambda_value(r, d, l);
    return std::exp(-sum);
}

}  // namespace hygirth
