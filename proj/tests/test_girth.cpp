#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hygirth/constructions.hpp"
#include "hygirth/girth.hpp"
#include "hygirth/randmodels.hpp"
#include "hygirth/rng.hpp"
#include "test_util.hpp"

using namespace hygirth;

TEST_CASE("fano girth is 3 with a valid witness") {
    GirthResult g = berge_girth(fixtures::fano());
    REQUIRE(g.finite());
    CHECK(g.value == 3);
    REQUIRE(g.witness);
    CHECK(g.witness->length() == 3);
    CHECK(validate_cycle(fixtures::fano(), *g.witness));
}

TEST_CASE("heavy pair is a 2-cycle") {
    GirthResult g = berge_girth(fixtures::heavy_pair());
    REQUIRE(g.finite());
    CHECK(g.value == 2);
    CHECK(validate_cycle(fixtures::heavy_pair(), *g.witness));
}

TEST_CASE("acyclic and truncated outcomes") {
    Hypergraph path(5, {{0, 1, 2}, {2, 3, 4}});
    CHECK(berge_girth(path).infinite());

    GirthResult capped = berge_girth(fixtures::loose_pentagon(), 4);
    CHECK(capped.kind == GirthResult::Kind::Truncated);
    CHECK(capped.value == 4);
    GirthResult full = berge_girth(fixtures::loose_pentagon());
    REQUIRE(full.finite());
    CHECK(full.value == 5);
}

TEST_CASE("grid girth and cycle counts") {
    Hypergraph g32 = grid_hypergraph(3, 2);
    GirthResult g = berge_girth(g32);
    REQUIRE(g.finite());
    CHECK(g.value == 4);
    CHECK(count_cycles(g32, 3) == 0);
    CHECK(count_cycles(g32, 4) == 9);
}

TEST_CASE("validate_cycle rejects malformed witnesses") {
    Hypergraph f = fixtures::fano();
    // Repeated edge.
    CHECK_FALSE(validate_cycle(f, {{0, 0, 1}, {0, 1, 3}}));
    // Repeated vertex.
    CHECK_FALSE(validate_cycle(f, {{0, 1, 3}, {0, 0, 1}}));
    // Vertex not in the right intersection: v_1 must be in e_1 and e_2.
    CHECK_FALSE(validate_cycle(f, {{0, 1, 3}, {5, 1, 0}}));
    // Too short.
    CHECK_FALSE(validate_cycle(f, {{0}, {1}}));
    // A genuine triangle: edges {0,1,2},{0,3,4},{1,3,5} via 0, 3, 1.
    CHECK(validate_cycle(f, {{0, 1, 3}, {0, 3, 1}}));
}

TEST_CASE("distance and diameter") {
    Hypergraph f = fixtures::fano();
    CHECK(distance(f, 0, 0) == 0);
    CHECK(distance(f, 0, 6) == 1);
    CHECK(diameter(f) == 1);

    Hypergraph path(7, {{0, 1, 2}, {2, 3, 4}, {4, 5, 6}});
    CHECK(distance(path, 0, 6) == 3);
    CHECK(distance(path, 1, 3) == 2);
    CHECK(diameter(path) == 3);

    Hypergraph split(4, {{0, 1}});
    CHECK(distance(split, 0, 3) == std::nullopt);
    CHECK(diameter(split) == std::nullopt);
}

TEST_CASE("oracle agrees with BFS girth on a mixed corpus") {
    // Fixed instances plus configuration-model samples; frozen seed.
    std::vector<Hypergraph> corpus = {
        fixtures::fano(),
        fixtures::heavy_pair(),
        fixtures::loose_pentagon(),
        grid_hypergraph(3, 2),
        grid_hypergraph(4, 2),
        grid_hypergraph(3, 3),
    };
    Rng rng = make_rng(2024);
    int made = 0;
    while (made < 60) {
        MultiHypergraph s = sample_config_model(12, 3, 2, rng);
        if (!s.has_repeated_vertex()) {
            std::vector<std::vector<int>> dedup;
            for (const auto& e : s.edges())
                if (std::find(dedup.begin(), dedup.end(), e) == dedup.end())
                    dedup.push_back(e);
            corpus.emplace_back(s.n(), dedup);
            ++made;
        }
    }
    for (const Hypergraph& h : corpus) {
        GirthResult fast = berge_girth(h);
        GirthResult slow = berge_girth_oracle(h, std::min(h.n(), h.m()));
        CHECK(fast.kind == slow.kind);
        if (fast.finite()) {
            CHECK(fast.value == slow.value);
            CHECK(validate_cycle(h, *fast.witness));
            CHECK(validate_cycle(h, *slow.witness));
        }
    }
}

TEST_CASE("count_cycles matches hand counts on small graphs-as-hypergraphs") {
    // K_4 as a 2-uniform hypergraph: 4 triangles, 3 four-cycles.
    Hypergraph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(count_cycles(k4, 3) == 4);
    CHECK(count_cycles(k4, 4) == 3);
    // Fano: each pair of lines meets, and each of the 7*6*4/6... frozen: 28.
    CHECK(count_cycles(fixtures::fano(), 3) == 28);
}
