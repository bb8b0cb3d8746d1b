#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace hygirth {

using BigInt = boost::multiprecision::cpp_int;

// Minimum vertex count of a linear r-uniform d-regular hypergraph of girth g
// (ball-counting bound); exact integer arithmetic.
BigInt moore_min_vertices(int r, int d, int g);

// g <= 2 log n / (log(r-1) + log(d-1)) + 2.
double girth_upper_bound(long long n, int r, int d);

// g > (log n - log 4) / (log(d-1) + log(r-1)) - 1 for the vertex-minimal
// hypergraph of girth >= g.
double girth_lower_bound_existential(long long n, int r, int d);

struct EsVertexBound {
    BigInt exact;  // (r-1)(1 + d(r-1)((d-1)^g(r-1)^g - 1)/((d-1)(r-1) - 1))
    BigInt crude;  // 4((d-1)(r-1))^(g+1); always strictly larger
};

EsVertexBound es_vertex_upper(int r, int d, int g);

// c0 sqrt(n log n / (r(r-1)(log(d-1) + log(r-1)))).
double cayley_girth_bound(long long n, int r, int d, double c0);

// Classic graph Moore bound n_0(g, d).
BigInt graph_moore_bound(int d, int g);

struct BoundsReport {
    long long n = 0;
    int r = 0, d = 0;
    std::vector<std::pair<int, BigInt>> moore_table;  // g -> moore_min_vertices
    double girth_upper = 0.0;
    double girth_lower_exist = 0.0;
    std::vector<std::pair<int, EsVertexBound>> es_table;  // g -> existence bound
    double cayley_bound_c0 = 0.0;
    double cayley_bound = 0.0;  // only when r | n
};

// Evaluates every bound for (n, r, d); the tables cover g in [3, g_max].
BoundsReport bounds_report(long long n, int r, int d, int g_max, double c0 = 0.4);

}  // namespace hygirth
