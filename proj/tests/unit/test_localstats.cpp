#include "doctest.h"

#include "chromkit/localstats.hpp"
#include "chromkit/rrg.hpp"
#include "oracles.hpp"

using namespace chromkit;

namespace {

VertexColoring constant(std::size_t n, std::size_t s = 1) { return {std::vector<Color>(n, 0), s}; }

}  // namespace

TEST_CASE("radius 0 with a constant assignment is a point mass") {
    const auto s = ball_statistic(petersen_graph(), constant(10), 0);
    REQUIRE(s.counts.size() == 1);
    CHECK(s.total == 10);
    CHECK(s.exact_probability(s.counts.begin()->first) == Rational(1, 1));
}

TEST_CASE("alternating colors on C6 give two balls of mass 1/2") {
    const VertexColoring alt({0, 1, 0, 1, 0, 1}, 2);
    const auto s = ball_statistic(cycle_graph(6), alt, 1);
    REQUIRE(s.counts.size() == 2);
    for (const auto& [code, count] : s.counts) CHECK(s.exact_probability(code) == Rational(1, 2));
    // r=0 against a constant 2-color assignment: 1/2 (|1/2 - 1| + |1/2 - 0|) = 1/2
    const auto a = ball_statistic(cycle_graph(6), alt, 0);
    const auto b = ball_statistic(cycle_graph(6), constant(6, 2), 0);
    CHECK(tv_distance_exact(a, b) == Rational(1, 2));
}

TEST_CASE("total variation edge cases") {
    const auto a = ball_statistic(cycle_graph(6), constant(6), 1);
    CHECK(tv_distance(a, a) == 0.0);
    const auto b = ball_statistic(complete_graph(4), constant(4), 1);
    CHECK(tv_distance(a, b) == 1.0);
    const auto c = ball_statistic(cycle_graph(6), constant(6), 2);
    CHECK_THROWS_AS(tv_distance(a, c), std::invalid_argument);
    const auto d = ball_statistic(cycle_graph(6), constant(6, 2), 1);
    CHECK_THROWS_AS(tv_distance(a, d), std::invalid_argument);
}

TEST_CASE("tree ball references") {
    const auto single = decode_code(tree_ball_reference(3, 0));
    CHECK(single.num_vertices == 1);
    CHECK(single.edges.empty());
    // The 2-regular tree is the line: its r-ball is a path with 2r+1 vertices rooted in the middle.
    const auto line = cycle_graph(20);
    for (std::size_t r = 0; r <= 4; ++r) {
        CHECK(tree_ball_reference(2, r) == canonical_code(rooted_ball(line, 7, r, constant(20).values())));
    }
    const auto t32 = decode_code(tree_ball_reference(3, 2));
    CHECK(t32.num_vertices == 10);
    CHECK(t32.edges.size() == 9);
    CHECK_THROWS(tree_ball_reference(0, 1));
}

TEST_CASE("high-girth samples see only tree balls") {
    std::uint64_t seed = 0;
    LabeledMultigraph g;
    do {
        g = sample_labeled_union({400, 3, 1, seed++});
    } while (girth(g).value_or(100) <= 3);  // girth > 2r + 1 for r = 1
    const auto s = ball_statistic(g, constant(400), 1);
    REQUIRE(s.counts.size() == 1);
    CHECK(s.counts.begin()->first == tree_ball_reference(3, 1));
}

TEST_CASE("Monte-Carlo statistics are seeded") {
    const auto g = sample_labeled_union({200, 3, 1, 1});
    const auto a = sample_ball_statistic(g, constant(200), 2, 500, 9);
    const auto b = sample_ball_statistic(g, constant(200), 2, 500, 9);
    CHECK(a.counts == b.counts);
    CHECK(a.total == 500);
    CHECK(a.mode == SampleMode::monte_carlo);
    const auto exact = ball_statistic(g, constant(200), 2);
    CHECK(tv_distance(a, exact) < 0.1);
}

TEST_CASE("subset encoding") {
    const std::vector<Vertex> none;
    const std::vector<Vertex> all{0, 1, 2, 3};
    const auto empty = encode_subsets_as_assignment(4, none, none);
    for (Vertex v = 0; v < 4; ++v) CHECK(empty[v] == kNeither);
    const auto full = encode_subsets_as_assignment(4, all, none);
    for (Vertex v = 0; v < 4; ++v) CHECK(full[v] == kOnlyB);
    const std::vector<Vertex> b{0, 1}, bp{1, 2};
    const auto mixed = encode_subsets_as_assignment(4, b, bp);
    CHECK(mixed[0] == kOnlyB);
    CHECK(mixed[1] == kBoth);
    CHECK(mixed[2] == kOnlyBPrime);
    CHECK(mixed[3] == kNeither);
    CHECK(mixed.num_colors() == 4);
    const std::vector<Vertex> out_of_range{4};
    CHECK_THROWS(encode_subsets_as_assignment(4, out_of_range, none));
}

TEST_CASE("densities and edge witnesses are read off the r=1 statistic") {
    Rng rng(21);
    for (int t = 0; t < 50; ++t) {
        const std::size_t l = 2 * (3 + rng.below(15));
        const auto g = sample_labeled_union({l, 1 + rng.below(3), 2, rng.next()});
        std::vector<Vertex> b, bp;
        for (Vertex v = 0; v < l; ++v) {
            if (rng.below(3) == 0) b.push_back(v);
            if (rng.below(2) == 0) bp.push_back(v);
        }
        const auto cells = encode_subsets_as_assignment(l, b, bp);
        for (std::size_t r : {1u, 2u}) {
            const auto s = ball_statistic(g, cells, r);
            CHECK(b_density_from_statistic(s) == Rational(b.size(), l));
            CHECK(b_prime_density_from_statistic(s) == Rational(bp.size(), l));
            for (Label j : {0u, 1u}) {
                // Direct count, independent of the library helper.
                std::int64_t direct = 0;
                for (Vertex x : b) {
                    bool hit = false;
                    for (const auto& e : g.edges()) {
                        if (e.label != j) continue;
                        const Vertex other = e.u == x ? e.v : e.v == x ? e.u : x;
                        if (other != x && std::binary_search(bp.begin(), bp.end(), other)) hit = true;
                    }
                    direct += hit;
                }
                CHECK(static_cast<std::int64_t>(edge_witness_count(g, cells, j)) == direct);
                CHECK(edge_witness_from_statistic(s, j) == Rational(direct, l));
            }
        }
    }
    const auto s0 = ball_statistic(cycle_graph(4), encode_subsets_as_assignment(4, {}, {}), 0);
    CHECK_THROWS(edge_witness_from_statistic(s0, 0));
}

TEST_CASE("statistics JSON round trip") {
    const auto g = sample_labeled_union({30, 3, 1, 2});
    const auto s = ball_statistic(g, constant(30), 2);
    const auto j = statistic_to_json(s);
    const auto back = statistic_from_json(j);
    CHECK(back.counts == s.counts);
    CHECK(back.total == s.total);
    double sum = 0;
    for (const auto& [code, p] : j["distribution"].items()) sum += p.get<double>();
    CHECK(std::abs(sum - 1) < 1e-12);
    auto bad = j;
    bad["total"] = s.total + 1;
    CHECK_THROWS_AS(statistic_from_json(bad), FormatError);
}
