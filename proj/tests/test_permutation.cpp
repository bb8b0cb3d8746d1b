#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "hygirth/error.hpp"
#include "hygirth/permutation.hpp"
#include "hygirth/rng.hpp"

using namespace hygirth;

TEST_CASE("identity and validation") {
    auto id = Permutation::identity(4);
    CHECK(id.size() == 4);
    CHECK(id.image() == std::vector<int>{0, 1, 2, 3});
    CHECK_THROWS_AS(Permutation({0, 0, 1}), Error);
    CHECK_THROWS_AS(Permutation({0, 3, 1}), Error);
}

TEST_CASE("compose applies right then left") {
    // p = (0 1), q = (1 2); (p*q)(x) = p(q(x)).
    Permutation p({1, 0, 2});
    Permutation q({0, 2, 1});
    Permutation pq = perm_compose(p, q);
    CHECK(pq.image() == std::vector<int>{1, 2, 0});
    Permutation qp = perm_compose(q, p);
    CHECK(qp.image() == std::vector<int>{2, 0, 1});
}

TEST_CASE("inverse and power") {
    Permutation c({1, 2, 3, 0});  // 4-cycle
    CHECK(perm_compose(c, perm_inverse(c)) == Permutation::identity(4));
    CHECK(perm_power(c, 0) == Permutation::identity(4));
    CHECK(perm_power(c, 4) == Permutation::identity(4));
    CHECK(perm_power(c, 2).image() == std::vector<int>{2, 3, 0, 1});
    CHECK(perm_power(c, -1) == perm_inverse(c));
    CHECK(perm_power(c, -3) == c);
    CHECK(perm_power(c, 103) == perm_power(c, 3));
}

TEST_CASE("cycle type") {
    CHECK(cycle_type(Permutation::identity(5)) ==
          std::vector<int>{1, 1, 1, 1, 1});
    CHECK(cycle_type(Permutation({1, 2, 0, 4, 3})) == std::vector<int>{2, 3});
    CHECK(cycle_type(Permutation({1, 0, 3, 2})) == std::vector<int>{2, 2});
}

TEST_CASE("rank/unrank round trip is lexicographic") {
    CHECK(perm_rank(Permutation::identity(4)) == 0);
    CHECK(perm_unrank(4, 0) == Permutation::identity(4));
    // Last permutation in lex order is the reversal.
    CHECK(perm_unrank(4, 23).image() == std::vector<int>{3, 2, 1, 0});
    std::uint64_t prev_rank = 0;
    for (std::uint64_t k = 0; k < 120; ++k) {
        Permutation p = perm_unrank(5, k);
        CHECK(perm_rank(p) == k);
        if (k > 0) CHECK(k == prev_rank + 1);
        prev_rank = k;
    }
    CHECK(factorial_u64(5) == 120);
    CHECK(factorial_u64(0) == 1);
    CHECK(factorial_u64(12) == 479001600ULL);
}

TEST_CASE("powers commute with rank round trips") {
    Rng rng = make_rng(7);
    for (int t = 0; t < 50; ++t) {
        Permutation p = perm_unrank(6, rng() % factorial_u64(6));
        Permutation q = perm_unrank(6, rng() % factorial_u64(6));
        CHECK(perm_inverse(perm_compose(p, q)) ==
              perm_compose(perm_inverse(q), perm_inverse(p)));
        CHECK(perm_power(p, 6) ==
              perm_compose(perm_power(p, 4), perm_power(p, 2)));
    }
}
