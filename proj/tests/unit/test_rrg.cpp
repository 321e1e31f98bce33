#include "doctest.h"

#include <map>
#include <set>

#include "chromkit/rrg.hpp"
#include "oracles.hpp"

using namespace chromkit;

TEST_CASE("generator outputs are reproducible") {
    Rng a(42), b(42);
    for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
    // Reference values of the standard mt19937_64 for the default seed.
    Rng std_seed(5489);
    std::uint64_t x = 0;
    for (int i = 0; i < 10000; ++i) x = std_seed.next();
    CHECK(x == 9981545732273789042ull);
}

TEST_CASE("bounded draws stay in range and cover it") {
    Rng rng(1);
    std::vector<int> hits(7, 0);
    for (int i = 0; i < 7000; ++i) {
        const auto v = rng.below(7);
        REQUIRE(v < 7);
        ++hits[v];
    }
    for (int h : hits) CHECK(h > 800);
    for (int i = 0; i < 1000; ++i) {
        const double u = rng.uniform();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
}

TEST_CASE("sampled unions are d-regular per label") {
    const auto g = sample_labeled_union({40, 3, 2, 5});
    CHECK(g.num_vertices() == 40);
    CHECK(g.num_edges() == 40 / 2 * 3 * 2);
    CHECK(regular_degree(g) == 6u);
    for (Label j : {0u, 1u}) CHECK(regular_degree(g.label_class(j)) == 3u);
    CHECK(sample_labeled_union({40, 3, 2, 5}) == g);
    CHECK_FALSE(sample_labeled_union({40, 3, 2, 6}) == g);
}

TEST_CASE("sample spec validation") {
    CHECK_THROWS_AS(sample_labeled_union({7, 1, 1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(sample_labeled_union({8, 0, 1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(sample_labeled_union({8, 1, 0, 0}), std::invalid_argument);
    Rng rng(0);
    CHECK_THROWS_AS(sample_matching(5, rng), std::invalid_argument);
}

TEST_CASE("matchings of K4 are uniform (chi-square, 2 d.o.f.)") {
    // K4 has exactly three perfect matchings, identified by vertex 0's partner.
    Rng rng(2024);
    constexpr int kTrials = 100000;
    std::map<std::set<std::pair<Vertex, Vertex>>, int> freq;
    for (int t = 0; t < kTrials; ++t) {
        const auto m = sample_matching(4, rng);
        std::set<std::pair<Vertex, Vertex>> key;
        for (const auto& e : m.edges()) key.insert({e.u, e.v});
        ++freq[key];
    }
    REQUIRE(freq.size() == 3);
    double chi2 = 0;
    for (const auto& [key, count] : freq) {
        const double expected = kTrials / 3.0;
        chi2 += (count - expected) * (count - expected) / expected;
        CHECK(std::abs(count / double(kTrials) - 1.0 / 3) < 0.02);
    }
    CHECK(chi2 < 13.816);  // 0.999 quantile of chi-square with 2 d.o.f.
}

TEST_CASE("short cycles of G(1000, 3) occur at the Poisson rate") {
    // P(no double edge, no triangle) -> exp(-3/2 - 1) ~ 0.082.
    int ok = 0;
    for (int s = 0; s < 200; ++s) {
        const auto g = sample_labeled_union({1000, 3, 1, stream_seed(31337, s)});
        const auto gi = girth(g);
        ok += !gi || *gi >= 4;
    }
    const double freq = ok / 200.0;
    CHECK(freq > 0.03);
    CHECK(freq < 0.15);
}

TEST_CASE("round-robin 1-factorization covers every pair once") {
    for (std::size_t l : {2u, 4u, 6u, 12u, 16u}) {
        const auto f = one_factorize_complete(l);
        CHECK(f.num_edges() == l * (l - 1) / 2);
        CHECK(f.labels().size() == l - 1);
        std::set<std::pair<Vertex, Vertex>> pairs;
        for (const auto& e : f.edges()) pairs.insert({e.u, e.v});
        CHECK(pairs.size() == l * (l - 1) / 2);
        for (Label r : f.labels()) CHECK(regular_degree(f.label_class(r)) == 1u);
    }
    CHECK_THROWS_AS(one_factorize_complete(5), std::invalid_argument);
}

TEST_CASE("grouping rounds into labels") {
    const auto f = one_factorize_complete(12);  // 11 rounds
    const auto spread = group_matchings(f, 3, GroupMode::spread);
    CHECK(spread.num_edges() == f.num_edges());
    CHECK(regular_degree(spread.label_class(0)) == 4u);
    CHECK(regular_degree(spread.label_class(1)) == 4u);
    CHECK(regular_degree(spread.label_class(2)) == 3u);
    const auto equal = group_matchings(f, 3, GroupMode::equal);
    CHECK(equal.num_edges() == 12 / 2 * 9);
    for (Label j = 0; j < 3; ++j) CHECK(regular_degree(equal.label_class(j)) == 3u);
    CHECK(label_classes_disjoint(equal));
    CHECK_THROWS_AS(group_matchings(f, 12, GroupMode::equal), std::invalid_argument);
}

TEST_CASE("label class disjointness") {
    CHECK(label_classes_disjoint(LabeledMultigraph(3, {{0, 1, 0}, {0, 1, 0}, {1, 2, 1}})));
    CHECK_FALSE(label_classes_disjoint(LabeledMultigraph(3, {{0, 1, 0}, {0, 1, 1}})));
}

TEST_CASE("random subsets have the requested size and are uniform per element") {
    Rng rng(77);
    std::vector<int> hits(10, 0);
    for (int t = 0; t < 5000; ++t) {
        const auto s = random_subset(10, 3, rng);
        REQUIRE(s.size() == 3);
        CHECK(std::is_sorted(s.begin(), s.end()));
        CHECK(std::adjacent_find(s.begin(), s.end()) == s.end());
        for (auto v : s) ++hits[v];
    }
    for (int h : hits) CHECK(std::abs(h - 1500) < 150);
    CHECK_THROWS_AS(random_subset(3, 4, rng), std::invalid_argument);
}
