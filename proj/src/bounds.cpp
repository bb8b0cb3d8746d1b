#include "hygirth/bounds.hpp"

#include <cmath>

#include "hygirth/error.hpp"

namespace hygirth {

namespace {

BigInt bigpow(BigInt base, int exp) {
    BigInt acc = 1;
    while (exp > 0) {
        if (exp & 1) acc *= base;
        base *= base;
        exp >>= 1;
    }
    return acc;
}

// Geometric sum 1 + q + ... + q^(k-1) with q = (d-1)(r-1).
BigInt geom_sum(int r, int d, int k) {
    const BigInt q = BigInt(d - 1) * (r - 1);
    if (q == 1) return k;
    return (bigpow(q, k) - 1) / (q - 1);
}

}  // namespace

BigInt moore_min_vertices(int r, int d, int g) {
    if (d < 2 || r < 3 || g < 3) fail("InvalidParams", "need d >= 2, r >= 3, g >= 3");
    if (g % 2 == 1) {
        const int k = (g - 1) / 2;
        return 1 + BigInt(d) * (r - 1) * geom_sum(r, d, k);
    }
    const int k = g / 2;
    return BigInt(r) * geom_sum(r, d, k);
}

double girth_upper_bound(long long n, int r, int d) {
    if (n < 1 || r < 3 || d < 2) fail("InvalidParams", "need n >= 1, r >= 3, d >= 2");
    const double denom = std::log(static_cast<double>(r - 1)) + std::log(static_cast<double>(d - 1));
    if (denom <= 0.0) fail("InvalidParams", "(r-1)(d-1) must exceed 1");
    return 2.0 * std::log(static_cast<double>(n)) / denom + 2.0;
}

double girth_lower_bound_existential(long long n, int r, int d) {
    if (n < 1 || r < 3 || d < 2) fail("InvalidParams", "need n >= 1, r >= 3, d >= 2");
    const double denom = std::log(static_cast<double>(d - 1)) + std::log(static_cast<double>(r - 1));
    if (denom <= 0.0) fail("InvalidParams", "(r-1)(d-1) must exceed 1");
    return (std::log(static_cast<double>(n)) - std::log(4.0)) / denom - 1.0;
}

EsVertexBound es_vertex_upper(int r, int d, int g) {
    if (d < 2 || r < 3 || g < 3) fail("InvalidParams", "need d >= 2, r >= 3, g >= 3");
    EsVertexBound b;
    b.exact = BigInt(r - 1) * (1 + BigInt(d) * (r - 1) * geom_sum(r, d, g));
    b.crude = 4 * bigpow(BigInt(d - 1) * (r - 1), g + 1);
    if (b.exact >= b.crude) fail("InvalidParams", "exact existence bound not below crude bound");
    return b;
}

double cayley_girth_bound(long long n, int r, int d, double c0) {
    if (r < 3 || n % r != 0 || d < 2) fail("InvalidParams", "need r >= 3, r | n, d >= 2");
    if (c0 < 0.0 || c0 >= 0.5) fail("InvalidParams", "need 0 <= c0 < 1/2");
    const double denom = static_cast<double>(r) * (r - 1) *
                         (std::log(static_cast<double>(d - 1)) + std::log(static_cast<double>(r - 1)));
    if (denom <= 0.0) fail("InvalidParams", "log(d-1) + log(r-1) must be positive");
    const double nn = static_cast<double>(n);
    return c0 * std::sqrt(nn * std::log(nn) / denom);
}

BigInt graph_moore_bound(int d, int g) {
    if (d < 3 || g < 3) fail("InvalidParams", "need d >= 3, g >= 3");
    const BigInt q = d - 1;
    if (g % 2 == 1) {
        const int k = (g - 1) / 2;
        return 1 + BigInt(d) * (bigpow(q, k) - 1) / (q - 1);
    }
    const int k = g / 2;
    return 2 * (bigpow(q, k) - 1) / (q - 1);
}

BoundsReport bounds_report(long long n, int r, int d, int g_max, double c0) {
    BoundsReport rep;
    rep.n = n;
    rep.r = r;
    rep.d = d;
    for (int g = 3; g <= g_max; ++g) {
        rep.moore_table.emplace_back(g, moore_min_vertices(r, d, g));
        rep.es_table.emplace_back(g, es_vertex_upper(r, d, g));
    }
    rep.girth_upper = girth_upper_bound(n, r, d);
    rep.girth_lower_exist = girth_lower_bound_existential(n, r, d);
    rep.cayley_bound_c0 = c0;
    rep.cayley_bound = (n % r == 0) ? cayley_girth_bound(n, r, d, c0) : 0.0;
    return rep;
}

}  // namespace hygirth
