#include "doctest.h"

#include "chromkit/chromatic.hpp"
#include "oracles.hpp"

using namespace chromkit;

TEST_CASE("vertex colorings validate their range") {
    CHECK_THROWS_AS(VertexColoring({0, 3}, 3), std::invalid_argument);
    CHECK(VertexColoring::from_values({0, 4, 1}).num_colors() == 5);
    CHECK(VertexColoring::from_values({}).num_colors() == 0);
}

TEST_CASE("properness reports the first violating edge") {
    const auto g = path_graph(4);
    CHECK(is_proper(g, VertexColoring::from_values({0, 1, 0, 1})).proper);
    const auto bad = is_proper(g, VertexColoring::from_values({0, 1, 1, 0}));
    CHECK_FALSE(bad.proper);
    CHECK(bad.violating_edge == 1u);
    CHECK_THROWS_AS(is_proper(g, VertexColoring::from_values({0, 1})), GraphError);
}

TEST_CASE("edge colorings") {
    const auto g = path_graph(3);
    CHECK(is_proper_edge_coloring(g, {{0, 1}, 2}).proper);
    CHECK_FALSE(is_proper_edge_coloring(g, {{1, 1}, 2}).proper);
}

TEST_CASE("n_colorable matches exhaustive search on random small graphs") {
    Rng rng(7);
    for (int t = 0; t < 250; ++t) {
        const std::size_t n = 1 + rng.below(9);
        const auto g = oracle::random_simple(n, 0.2 + 0.6 * rng.uniform(), rng);
        for (std::size_t k = 1; k <= 4; ++k) {
            const auto r = n_colorable(g, k);
            REQUIRE(r.decision != Decision::unknown);
            CHECK((r.decision == Decision::yes) == oracle::colorable(g, k));
            if (r.witness) {
                CHECK(r.witness->num_colors() == k);
                CHECK(oracle::proper(g, {r.witness->values().begin(), r.witness->values().end()}));
            }
        }
    }
}

TEST_CASE("known chromatic numbers") {
    CHECK(chromatic_number(petersen_graph()).upper == 3);
    CHECK(chromatic_number(petersen_graph()).exact());
    CHECK(chromatic_number(complete_graph(6)).lower == 6);
    CHECK(chromatic_number(cycle_graph(7)).upper == 3);
    CHECK(chromatic_number(cycle_graph(8)).upper == 2);
    CHECK(chromatic_number(LabeledMultigraph(3, {})).upper == 1);
    const auto r = chromatic_number(complete_graph(5));
    CHECK(is_proper(complete_graph(5), r.best).proper);
}

TEST_CASE("parallel edges do not change colorability") {
    LabeledMultigraph g(3, {{0, 1, 0}, {0, 1, 1}, {1, 2, 0}, {0, 2, 2}, {0, 2, 2}});
    CHECK(n_colorable(g, 2).decision == Decision::no);
    CHECK(n_colorable(g, 3).decision == Decision::yes);
}

TEST_CASE("Grotzsch graph and budget exhaustion") {
    // Grotzsch graph (Mycielskian of C5): triangle-free with chromatic number 4,
    // so refuting 3 colors needs real search.
    std::vector<Edge> e;
    for (Vertex i = 0; i < 5; ++i) {
        e.push_back({i, (i + 1) % 5, 0});
        e.push_back({static_cast<Vertex>(5 + i), (i + 1) % 5, 0});
        e.push_back({static_cast<Vertex>(5 + (i + 1) % 5), i, 0});
        e.push_back({static_cast<Vertex>(5 + i), 10, 0});
    }
    const LabeledMultigraph grotzsch(11, e);
    CHECK(n_colorable(grotzsch, 3).decision == Decision::no);
    CHECK(n_colorable(grotzsch, 4).decision == Decision::yes);
    CHECK(n_colorable(grotzsch, 3, 1).decision == Decision::unknown);
    CHECK(girth(grotzsch) == 4u);
}

TEST_CASE("enumeration counts match the cycle chromatic polynomial") {
    // P(C_k, n) = (n-1)^k + (-1)^k (n-1)
    for (std::size_t k = 3; k <= 8; ++k) {
        for (std::size_t n = 2; n <= 4; ++n) {
            const auto expected = static_cast<std::int64_t>(std::pow(n - 1, k)) + (k % 2 ? -1 : 1) * (std::int64_t)(n - 1);
            bool capped = true;
            const auto all = enumerate_proper_colorings(cycle_graph(k), n, 1'000'000, &capped);
            CHECK_FALSE(capped);
            CHECK(static_cast<std::int64_t>(all.size()) == expected);
        }
    }
}

TEST_CASE("enumeration agrees with exhaustive counting and respects the cap") {
    Rng rng(9);
    for (int t = 0; t < 60; ++t) {
        const std::size_t n = 1 + rng.below(8);
        const auto g = oracle::random_multigraph(n, rng.below(2 * n), 1, rng);
        std::uint64_t seen = 0;
        const auto r = for_each_proper_coloring(g, 3, 1'000'000, [&](std::span<const Color> c) {
            ++seen;
            CHECK(oracle::proper(g, {c.begin(), c.end()}));
        });
        CHECK(r.count == seen);
        CHECK(r.count == oracle::count_colorings(g, 3));
    }
    const auto r = for_each_proper_coloring(LabeledMultigraph(4, {}), 2, 5, [](std::span<const Color>) {});
    CHECK(r.capped);
    CHECK(r.count == 5);
}

TEST_CASE("greedy colorings and cliques") {
    const auto g = petersen_graph();
    const auto c = greedy_coloring(g);
    CHECK(is_proper(g, c).proper);
    CHECK(c.num_colors() <= g.max_degree() + 1);
    CHECK(greedy_clique(complete_graph(5)).size() == 5);
    CHECK(greedy_clique(petersen_graph()).size() == 2);
    const std::vector<Vertex> bad{0, 0, 1};
    CHECK_THROWS_AS(greedy_coloring(path_graph(3), bad), GraphError);
}
