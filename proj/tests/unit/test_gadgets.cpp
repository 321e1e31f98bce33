#include "doctest.h"

#include "chromkit/gadgets.hpp"
#include "oracles.hpp"

using namespace chromkit;

namespace {

std::uint64_t factorial(std::uint64_t k) { return k <= 1 ? 1 : k * factorial(k - 1); }

}  // namespace

TEST_CASE("gadget sizes") {
    CHECK(gadget_size(3, 1) == 1);
    CHECK(gadget_size(3, 2) == 4);
    CHECK(gadget_size(4, 3) == 9);
    CHECK(gadget_size(5, 5) == 21);
    CHECK_THROWS_AS(build_gadget(2, 3), std::invalid_argument);
    CHECK_THROWS_AS(build_gadget(3, 0), std::invalid_argument);
}

TEST_CASE("F(3,2) has six proper 3-colorings, all constant on the tuple") {
    const auto g = build_gadget(3, 2);
    CHECK(oracle::count_colorings(g.graph, 3) == 6);
    const auto r = verify_gadget(g);
    CHECK(r.passed());
    CHECK(r.proper_colorings == 6);
    CHECK(r.distinct_tuple_values == 3);
}

TEST_CASE("forcing holds under exhaustive assignment search for small gadgets") {
    for (std::size_t n = 3; n <= 4; ++n) {
        for (std::size_t d = 1; d <= 3; ++d) {
            const auto g = build_gadget(n, d);
            // n^l assignments; keep l small.
            if (std::pow(n, g.l) > 3e6) continue;
            std::vector<Color> c(g.l, 0);
            std::uint64_t proper = 0;
            bool all_constant = true;
            while (true) {
                if (oracle::proper(g.graph, c)) {
                    ++proper;
                    for (std::size_t i = 1; i < d; ++i) all_constant = all_constant && c[i] == c[0];
                }
                std::size_t i = 0;
                while (i < c.size() && ++c[i] == n) c[i++] = 0;
                if (i == c.size()) break;
            }
            CAPTURE(n);
            CAPTURE(d);
            CHECK(all_constant);
            CHECK(proper == verify_gadget(g).proper_colorings);
        }
    }
}

TEST_CASE("coloring counts follow n ((n-1)!)^(d-1)") {
    for (std::size_t n = 3; n <= 5; ++n) {
        for (std::size_t d = 1; d <= 5; ++d) {
            const auto r = verify_gadget(build_gadget(n, d));
            std::uint64_t expected = n;
            for (std::size_t i = 1; i < d; ++i) expected *= factorial(n - 1);
            CAPTURE(n);
            CAPTURE(d);
            CHECK(r.passed());
            CHECK(r.proper_colorings == expected);
            CHECK(r.max_degree <= 2 * (n - 1));
        }
    }
}

TEST_CASE("canonical coloring is proper and zero on the tuple") {
    const auto g = build_gadget(4, 4);
    CHECK(is_proper(g.graph, g.canonical_coloring).proper);
    for (std::size_t i = 0; i < 4; ++i) CHECK(g.canonical_coloring[i] == 0);
    CHECK(g.canonical_coloring.num_colors() == 4);
}

TEST_CASE("a broken gadget is reported, not thrown") {
    auto g = build_gadget(3, 3);
    std::vector<Edge> edges(g.graph.edges().begin(), g.graph.edges().end());
    // Drop every edge at tuple vertex 2 so it is free.
    std::erase_if(edges, [](const Edge& e) { return e.u == 2 || e.v == 2; });
    g.graph = LabeledMultigraph(g.l, edges);
    const auto r = verify_gadget(g);
    CHECK_FALSE(r.forcing);
    CHECK_FALSE(r.passed());
    REQUIRE(r.counterexample.has_value());
    CHECK(oracle::proper(g.graph, *r.counterexample));
}
