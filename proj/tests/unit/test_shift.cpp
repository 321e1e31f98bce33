#include "doctest.h"

#include <algorithm>

#include "chromkit/gadgets.hpp"
#include "chromkit/shift.hpp"
#include "oracles.hpp"

using namespace chromkit;

namespace {

std::size_t binom(std::size_t m, std::size_t k) {
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (m - k + i) / i;
    return r;
}

}  // namespace

TEST_CASE("shift degree and image") {
    const FiniteSet x{2, 5, 7};
    CHECK(shift_degree(x) == 3);
    CHECK(shift_image(x) == FiniteSet{5, 7});
    CHECK(shift_degree(FiniteSet{0}) == 1);
    CHECK_THROWS(shift_degree(FiniteSet{}));
}

TEST_CASE("fragment sizes and edges follow binomial counts") {
    for (std::size_t m = 1; m <= 7; ++m) {
        for (std::size_t lo = 1; lo <= m; ++lo) {
            for (std::size_t hi = lo; hi <= m; ++hi) {
                const auto f = build_fragment(m, lo, hi);
                std::size_t sets = 0, edges = 0;
                for (std::size_t k = lo; k <= hi; ++k) sets += binom(m, k);
                for (std::size_t k = lo + 1; k <= hi; ++k) edges += binom(m, k);
                CHECK(f.sets.size() == sets);
                CHECK(f.graph.num_edges() == edges);
                // Every vertex has at most one successor, so fragments are forests.
                CHECK(is_acyclic(f.graph));
            }
        }
    }
    CHECK_THROWS_AS(build_fragment(3, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(build_fragment(3, 0, 1), std::invalid_argument);
}

TEST_CASE("explicit fragments validate their sets") {
    CHECK_THROWS_AS(make_fragment({{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(make_fragment({{1, 2}, {2, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(make_fragment({{}}), std::invalid_argument);
    const auto f = make_fragment({{3, 1}, {3}});
    CHECK(f.sets[0] == FiniteSet{1, 3});
    CHECK(f.graph.num_edges() == 1);
}

TEST_CASE("H' layout uses the intrinsic shift degree") {
    const auto f = build_fragment(4, 1, 4);
    const auto h = build_hprime(f, 3);
    std::size_t total = 0;
    for (const auto& s : f.sets) total += gadget_size(3, 1 + s.front());
    CHECK(h.graph.num_vertices() == total);
    for (Vertex v = 0; v < h.graph.num_vertices(); ++v) {
        const auto [x, i] = h.decode(v);
        CHECK(h.vertex(x, i) == v);
    }
    CHECK(h.graph.label_class(kShiftEdge).num_edges() == f.graph.num_edges());
    CHECK_THROWS_AS(build_hprime(f, 2), std::invalid_argument);
}

TEST_CASE("interior flags") {
    const auto f = build_fragment(3, 1, 3);
    const auto h = build_hprime(f, 3);
    CHECK_FALSE(h.interior[*f.index_of({2})]);         // no successor in the fragment
    CHECK(h.interior[*f.index_of({0, 1, 2})]);         // no predecessor needed
    CHECK(h.interior[*f.index_of({1, 2})]);            // successor {2}, predecessor {0,1,2}
    CHECK_FALSE(h.interior[*f.index_of({1})]);
}

TEST_CASE("lift then project is the identity") {
    for (std::size_t n = 3; n <= 5; ++n) {
        const auto f = build_fragment(5, 1, 5);
        const auto h = build_hprime(f, n);
        const auto c = greedy_coloring(f.graph);
        REQUIRE(c.num_colors() <= 2);
        const auto lifted = lift_coloring(h, c);
        CHECK(is_proper(h.graph, lifted).proper);
        const auto p = project_coloring(h, lifted);
        CHECK(p.all_tuple_constant);
        CHECK(p.proper_on_all);
        CHECK(std::ranges::equal(p.coloring.values(), c.values()));
        CHECK(p.coloring.num_colors() == n);
    }
}

TEST_CASE("lift rejects improper or out-of-range base colorings") {
    const auto f = build_fragment(3, 1, 2);
    const auto h = build_hprime(f, 4);
    std::vector<Color> same(f.sets.size(), 0);
    CHECK_THROWS_AS(lift_coloring(h, VertexColoring(same, 1)), std::invalid_argument);
    auto c = greedy_coloring(f.graph);
    std::vector<Color> shifted(c.values().begin(), c.values().end());
    for (auto& v : shifted) v += 2;  // a 2-coloring using {2, 3}
    CHECK_THROWS_AS(lift_coloring(h, VertexColoring::from_values(shifted)), std::invalid_argument);
    CHECK_THROWS_AS(project_coloring(h, VertexColoring(std::vector<Color>(h.graph.num_vertices(), 0), 4)),
                    std::invalid_argument);
}

TEST_CASE("tuple constancy agrees with brute force on tiny H'") {
    for (const auto& f : {make_fragment({{0, 1}, {1}}), make_fragment({{1, 2}, {2}, {0, 2}}), build_fragment(3, 2, 3)}) {
        const auto h = build_hprime(f, 3);
        REQUIRE(h.graph.num_vertices() <= 13);
        std::uint64_t proper = 0, constant = 0;
        std::vector<Color> c(h.graph.num_vertices(), 0);
        while (true) {
            if (oracle::proper(h.graph, c)) {
                ++proper;
                bool ok = true;
                for (Vertex x = 0; x < f.sets.size(); ++x)
                    for (std::size_t i = 1; i < h.base_degree[x]; ++i) ok = ok && c[h.vertex(x, i)] == c[h.vertex(x, 0)];
                constant += ok;
            }
            std::size_t i = 0;
            while (i < c.size() && ++c[i] == 3) c[i++] = 0;
            if (i == c.size()) break;
        }
        CHECK(proper == constant);
        const auto r = enumerate_tuple_constancy(h, 1'000'000);
        CHECK(r.complete);
        CHECK(r.non_constant == 0);
        // Per-component counts multiply to the whole-graph count.
        const auto comps = connected_components(h.graph);
        if (comps.count == 1) CHECK(r.colorings == proper);
    }
}

TEST_CASE("fragment JSON round trip") {
    const auto f = build_fragment(5, 2, 3);
    const auto back = fragment_from_json(fragment_to_json(f));
    CHECK(back.sets == f.sets);
    CHECK(back.graph == f.graph);
    CHECK(back.m == 5);
    auto j = fragment_to_json(f);
    j["edges"].erase(0);
    CHECK_THROWS_AS(fragment_from_json(j), FormatError);
    const auto hj = hprime_to_json(build_hprime(f, 3));
    CHECK(graph_from_json(hj).num_vertices() == build_hprime(f, 3).graph.num_vertices());
}
