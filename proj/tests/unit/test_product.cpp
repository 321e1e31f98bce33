#include "doctest.h"

#include "chromkit/product.hpp"
#include "chromkit/rrg.hpp"
#include "oracles.hpp"

using namespace chromkit;

namespace {

// Three label classes on 4 vertices: the three perfect matchings of K4.
LabeledMultigraph k4_factors() { return one_factorize_complete(4); }

}  // namespace

TEST_CASE("greedy edge coloring is proper with at most 2*Delta - 1 colors") {
    Rng rng(4);
    for (int t = 0; t < 100; ++t) {
        const auto g = oracle::random_simple(2 + rng.below(12), rng.uniform(), rng);
        const auto e = greedy_edge_coloring(g);
        CHECK(is_proper_edge_coloring(g, e).proper);
        if (g.num_edges()) CHECK(e.num_colors <= 2 * g.max_degree() - 1);
    }
    const auto k4 = greedy_edge_coloring(complete_graph(4));
    CHECK(k4.num_colors == 3);
    CHECK_THROWS_AS(greedy_edge_coloring(LabeledMultigraph(2, {{0, 1, 0}, {0, 1, 0}})), GraphError);
}

TEST_CASE("product vertices and edges") {
    const auto left = complete_graph(4);
    const auto e = greedy_edge_coloring(left);
    const auto right = k4_factors();
    const auto p = build_product(left, e, right);
    CHECK(p.graph.num_vertices() == 16);
    // Each left edge of color j meets |E(G_j)| = 2 right edges, two product edges each.
    CHECK(p.graph.num_edges() == left.num_edges() * 2 * 2);
    CHECK(p.vertex(2, 3) == 11);
    CHECK(p.decode(11) == std::pair<Vertex, Vertex>{2, 3});

    // Independent check of the adjacency rule.
    for (Vertex a = 0; a < 16; ++a) {
        for (Vertex b = a + 1; b < 16; ++b) {
            const auto [x, y] = p.decode(a);
            const auto [x2, y2] = p.decode(b);
            std::size_t expected = 0;
            for (std::size_t i = 0; i < left.num_edges(); ++i) {
                const auto& le = left.edge(i);
                if (!((le.u == x && le.v == x2) || (le.u == x2 && le.v == x))) continue;
                for (const auto& re : right.edges()) {
                    if (re.label == e.values[i] && ((re.u == y && re.v == y2) || (re.u == y2 && re.v == y))) ++expected;
                }
            }
            std::size_t actual = 0;
            for (const auto& inc : p.graph.incident(a)) actual += inc.neighbor == b;
            CHECK(actual == expected);
        }
    }
}

TEST_CASE("product input validation") {
    const auto left = complete_graph(4);
    const auto e = greedy_edge_coloring(left);
    EdgeColoring bad = e;
    bad.values[0] = bad.values[1];
    CHECK_THROWS_AS(build_product(left, bad, k4_factors()), std::invalid_argument);
    // Only two label classes for three colors.
    CHECK_THROWS_AS(build_product(left, e, group_matchings(k4_factors(), 2, GroupMode::spread)), std::invalid_argument);
    // Classes sharing a pair.
    CHECK_THROWS_AS(build_product(left, e, LabeledMultigraph(2, {{0, 1, 0}, {0, 1, 1}, {0, 1, 2}})),
                    std::invalid_argument);
    // Surplus classes are ignored.
    const auto extra = one_factorize_complete(6);  // 5 classes
    CHECK(build_product(left, e, extra).graph.labels().size() == 3);
}

TEST_CASE("majority extraction uses the exact threshold") {
    const auto left = path_graph(2);
    const EdgeColoring e{{0}, 1};
    const auto right = one_factorize_complete(6).label_class(0);
    const auto p = build_product(left, e, right);
    // x = 0: colors {2,2,1,1,0,0} -> 2/6 * 3 >= 1 for every colour, least is 0.
    // x = 1: colors {1,1,1,1,2,2} -> 1 qualifies (4 * 3 >= 6), 0 does not.
    const auto c = VertexColoring({2, 2, 1, 1, 0, 0, 1, 1, 1, 1, 2, 2}, 3);
    const auto m = majority_extract(p, c, 3);
    CHECK(m.coloring[0] == 0);
    CHECK(m.coloring[1] == 1);
    CHECK(m.proper);
    CHECK_THROWS_AS(majority_extract(p, VertexColoring({3, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}, 4), 3),
                    std::invalid_argument);
}

TEST_CASE("lifted colorings are proper and extraction inverts the lift") {
    const auto left = petersen_graph();
    const auto e = greedy_edge_coloring(left);
    const auto right = group_matchings(one_factorize_complete(2 * e.num_colors + 2), e.num_colors, GroupMode::spread);
    const auto p = build_product(left, e, right);
    const auto c = chromatic_number(left).best;
    const auto lifted = lift_product_coloring(p, c);
    CHECK(is_proper(p.graph, lifted).proper);
    const auto m = majority_extract(p, lifted, c.num_colors());
    CHECK(m.coloring == c);
    CHECK_THROWS_AS(lift_product_coloring(p, VertexColoring(std::vector<Color>(10, 0), 1)), std::invalid_argument);
}

TEST_CASE("girth preservation on random instances") {
    Rng rng(6);
    for (int t = 0; t < 40; ++t) {
        const auto left = oracle::random_simple(3 + rng.below(5), 0.6, rng);
        const auto e = greedy_edge_coloring(left);
        if (e.num_colors == 0) continue;
        const auto right = group_matchings(one_factorize_complete(2 * (e.num_colors + rng.below(3))), e.num_colors,
                                           GroupMode::spread);
        const auto p = build_product(left, e, right);
        const auto gc = girth_preservation_check(p);
        CHECK(gc.holds);
        CHECK(gc.product_girth == girth(p.graph));
    }
    // A forest on the right gives an acyclic product.
    const auto left = complete_graph(4);
    const auto e = greedy_edge_coloring(left);
    const LabeledMultigraph forest(5, {{0, 1, 0}, {1, 2, 1}, {2, 3, 2}, {3, 4, 0}});
    const auto p = build_product(left, e, forest);
    CHECK(is_acyclic(p.graph));
    CHECK(girth_preservation_check(p).holds);
}

TEST_CASE("product bundles round trip") {
    const auto left = cycle_graph(5);
    const auto p = build_product(left, greedy_edge_coloring(left), one_factorize_complete(4));
    const auto j = product_to_json(p);
    const auto back = product_from_json(j);
    CHECK(back.graph == p.graph);
    CHECK(back.coloring.values == p.coloring.values);
    CHECK(graph_from_json(j) == p.graph);
    auto tampered = j;
    tampered["edges"].erase(0);
    CHECK_THROWS_AS(product_from_json(tampered), FormatError);
}
