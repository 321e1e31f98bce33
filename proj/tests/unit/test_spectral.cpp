#include "doctest.h"

#include <cmath>
#include <numbers>

#include "chromkit/kernels.hpp"
#include "chromkit/rrg.hpp"
#include "chromkit/spectral.hpp"
#include "oracles.hpp"

using namespace chromkit;
namespace k = chromkit::kernels;

namespace {

std::vector<double> random_vector(std::size_t n, Rng& rng) {
    std::vector<double> v(n);
    for (auto& x : v) x = 2 * rng.uniform() - 1;
    return v;
}

// Restores the dispatch choice after a test forces one backend.
struct BackendGuard {
    k::Backend saved = k::active_backend();
    ~BackendGuard() { k::set_backend(saved); }
};

}  // namespace

TEST_CASE("AVX2 kernels match the scalar reference") {
    if (!k::supported(k::Backend::avx2)) {
        MESSAGE("AVX2 not available; skipping equivalence");
        return;
    }
    Rng rng(8);
    for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 7u, 8u, 15u, 16u, 17u, 63u, 1000u, 1001u}) {
        const auto a = random_vector(n, rng), b = random_vector(n, rng);
        const double ds = k::scalar::dot(a.data(), b.data(), n);
        const double dv = k::avx2::dot(a.data(), b.data(), n);
        CHECK(std::abs(ds - dv) <= 1e-12 * (1 + std::abs(ds)));

        auto ys = b, yv = b;
        k::scalar::axpy(0.37, a.data(), ys.data(), n);
        k::avx2::axpy(0.37, a.data(), yv.data(), n);
        for (std::size_t i = 0; i < n; ++i) CHECK(ys[i] == doctest::Approx(yv[i]).epsilon(1e-15));

        auto ss = a, sv = a;
        k::scalar::scale(-1.5, ss.data(), n);
        k::avx2::scale(-1.5, sv.data(), n);
        CHECK(ss == sv);
    }
    for (int t = 0; t < 20; ++t) {
        const std::size_t n = 2 * (1 + rng.below(150));
        const auto g = sample_labeled_union({n, 1 + rng.below(8), 1, rng.next()});
        const auto m = adjacency_matrix(g);
        const auto x = random_vector(n, rng);
        std::vector<double> ys(n), yv(n);
        k::scalar::spmv(m, x.data(), ys.data());
        k::avx2::spmv(m, x.data(), yv.data());
        for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(ys[i] - yv[i]) <= 1e-12 * (1 + std::abs(ys[i])));
    }
}

TEST_CASE("lambda2 is identical in value under both backends") {
    if (!k::supported(k::Backend::avx2)) return;
    BackendGuard guard;
    const auto g = sample_labeled_union({600, 6, 1, 3});
    SpectralOptions opts;
    opts.method = EigenMethod::iterative;
    k::set_backend(k::Backend::scalar);
    const auto rs = lambda2(g, opts);
    k::set_backend(k::Backend::avx2);
    const auto rv = lambda2(g, opts);
    CHECK(std::abs(rs.lambda - rv.lambda) <= rs.residual + rv.residual + 1e-9);
}

TEST_CASE("adjacency matrix weights parallel edges") {
    const auto m = adjacency_matrix(LabeledMultigraph(3, {{0, 1, 0}, {0, 1, 1}, {1, 2, 0}}));
    CHECK(m.rows == 3);
    std::vector<double> x{1, 0, 0}, y(3);
    k::spmv(m, x, y);
    CHECK(y == std::vector<double>{0, 2, 0});
}

TEST_CASE("closed-form spectra") {
    CHECK(lambda2(complete_graph(7)).lambda == doctest::Approx(1).epsilon(1e-9));
    CHECK(lambda2(petersen_graph()).lambda == doctest::Approx(2).epsilon(1e-9));
    CHECK(lambda2(cycle_graph(9)).lambda == doctest::Approx(2 * std::cos(std::numbers::pi / 9)).epsilon(1e-9));
    CHECK(lambda2(cycle_graph(10)).lambda == doctest::Approx(2).epsilon(1e-9));  // bipartite
    const auto disconnected = lambda2(LabeledMultigraph(6, {{0, 1, 0}, {1, 2, 0}, {0, 2, 0},
                                                            {3, 4, 0}, {4, 5, 0}, {3, 5, 0}}));
    CHECK(disconnected.lambda == doctest::Approx(2));
    CHECK(disconnected.disconnected);
    CHECK_THROWS_AS(lambda2(path_graph(4)), SpectralError);
}

TEST_CASE("dense route agrees with an independent Jacobi eigensolver") {
    Rng rng(12);
    for (int t = 0; t < 25; ++t) {
        const std::size_t n = 2 * (2 + rng.below(20));
        const auto g = sample_labeled_union({n, 1 + rng.below(5), 1, rng.next()});
        SpectralOptions opts;
        opts.method = EigenMethod::dense;
        const auto r = lambda2(g, opts);
        CHECK(std::abs(r.lambda - oracle::lambda2(g)) <= 1e-8 * r.d + r.residual);
    }
}

TEST_CASE("iterative route agrees with the dense route") {
    Rng rng(13);
    for (int t = 0; t < 8; ++t) {
        const std::size_t n = 2 * (100 + rng.below(150));
        const auto g = sample_labeled_union({n, 3 + rng.below(8), 1, rng.next()});
        SpectralOptions dense, iter;
        dense.method = EigenMethod::dense;
        iter.method = EigenMethod::iterative;
        const auto a = lambda2(g, dense);
        const auto b = lambda2(g, iter);
        CAPTURE(n);
        CHECK(std::abs(a.lambda - b.lambda) <= 1e-7 * a.d);
        CHECK(b.residual <= 1e-9 * b.d * 10);
    }
}

TEST_CASE("circulant spectra") {
    const std::vector<std::size_t> s{1, 3, 9, 11};
    const auto spec = circulant_spectrum(12, s);
    CHECK(spec.size() == 12);
    CHECK(spec[0] == doctest::Approx(4));
    const auto jac = oracle::jacobi_eigenvalues(oracle::dense_adjacency(circulant_graph(12, s)));
    auto sorted = spec;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < 12; ++i) CHECK(sorted[i] == doctest::Approx(jac[i]).epsilon(1e-9));
    // l/2 contributes one edge per pair: degree 1 + 2.
    const std::vector<std::size_t> half{1, 4, 7};
    CHECK(regular_degree(circulant_graph(8, half)) == 3u);
    const std::vector<std::size_t> asym{1, 2};
    CHECK_THROWS(circulant_spectrum(8, asym));
}

TEST_CASE("mixing lemma check and edge counts") {
    const auto g = complete_graph(6);
    const std::vector<Vertex> b{0, 1, 2}, bp{2, 3};
    // Ordered pairs (x, y) in B x B' with an edge: 0-2, 1-2, 0-3, 1-3, 2-3.
    CHECK(edge_count_between(g, b, bp) == 5);
    CHECK(edge_count_between(g, b, b) == 6);
    const auto c = eml_check(g, 5, b, bp, 1.0);
    CHECK(c.expected == doctest::Approx(5.0 * 3 * 2 / 6));
    CHECK(c.holds);
}

TEST_CASE("mixing certificates") {
    const auto k12 = complete_graph(12);
    const auto ok = mixing_certificate(k12, 3);
    CHECK(ok.holds);  // lambda = 1 <= 11/5
    CHECK(ok.threshold == Rational(11, 5));
    const auto grouped = group_matchings(one_factorize_complete(12), 3, GroupMode::equal);
    const auto no = mixing_certificate(grouped, 3);
    CHECK_FALSE(no.holds);
    CHECK(no.reports.size() == 3);
    for (const auto& r : no.reports) CHECK(r.lambda * r.lambda >= 3.0 * (12 - 3) / 11 - 1e-9);
    CHECK_THROWS_AS(mixing_certificate(group_matchings(one_factorize_complete(12), 3, GroupMode::spread), 3),
                    SpectralError);
}

TEST_CASE("edge-count bound is exact") {
    CHECK(cor_bound(1000, 10, 3) == Rational(10000, 80));
    CHECK(cor_bound(6, 5, 3) == Rational(3, 8));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, -3) < Rational(0, 1));
    CHECK(Rational(5, 3).str() == "5/3");
}
