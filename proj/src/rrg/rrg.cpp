#include "chromkit/rrg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace chromkit {

void SampleSpec::validate() const {
    if (l < 2 || l % 2 != 0) throw std::invalid_argument("sample: l must be even and >= 2");
    if (d < 1) throw std::invalid_argument("sample: d must be >= 1");
    if (k < 1) throw std::invalid_argument("sample: k must be >= 1");
}

namespace {

void append_matching(std::size_t l, Rng& rng, Label label, std::vector<Edge>& edges) {
    std::vector<Vertex> perm(l);
    std::iota(perm.begin(), perm.end(), 0u);
    rng.shuffle(std::span<Vertex>(perm));
    for (std::size_t i = 0; i < l; i += 2) edges.push_back({perm[i], perm[i + 1], label});
}

void check_even(std::size_t l) {
    if (l < 2 || l % 2 != 0) throw std::invalid_argument("perfect matching needs an even vertex count >= 2");
}

}  // namespace

LabeledMultigraph sample_matching(std::size_t l, Rng& rng, Label label) {
    check_even(l);
    std::vector<Edge> edges;
    append_matching(l, rng, label, edges);
    return {l, std::move(edges)};
}

LabeledMultigraph sample_rrg(std::size_t l, std::size_t d, Rng& rng) {
    check_even(l);
    std::vector<Edge> edges;
    edges.reserve(l / 2 * d);
    for (std::size_t i = 0; i < d; ++i) append_matching(l, rng, 0, edges);
    return {l, std::move(edges)};
}

LabeledMultigraph sample_labeled_union(const SampleSpec& spec) {
    spec.validate();
    std::vector<Edge> edges;
    edges.reserve(spec.l / 2 * spec.d * spec.k);
    for (std::size_t j = 0; j < spec.k; ++j) {
        for (std::size_t i = 0; i < spec.d; ++i) {
            Rng rng(stream_seed(spec.seed, j * spec.d + i));
            append_matching(spec.l, rng, static_cast<Label>(j), edges);
        }
    }
    return {spec.l, std::move(edges)};
}

LabeledMultigraph one_factorize_complete(std::size_t l) {
    check_even(l);
    const auto m = static_cast<Vertex>(l - 1);
    std::vector<Edge> edges;
    for (Vertex r = 0; r < m; ++r) {
        edges.push_back({r, m, r});
        for (Vertex i = 1; i < l / 2; ++i) edges.push_back({(r + i) % m, (r + m - i) % m, r});
    }
    return {l, std::move(edges)};
}

LabeledMultigraph group_matchings(const LabeledMultigraph& factorization, std::size_t k, GroupMode mode) {
    const auto labels = factorization.labels();
    const std::size_t rounds = labels.empty() ? 0 : labels.back() + 1;
    if (k < 1 || k > rounds) throw std::invalid_argument("group_matchings: need 1 <= k <= number of rounds");
    std::vector<std::int64_t> group(rounds, -1);
    const std::size_t base = rounds / k;
    const std::size_t extra = mode == GroupMode::spread ? rounds % k : 0;
    std::size_t r = 0;
    for (std::size_t j = 0; j < k; ++j) {
        const std::size_t size = base + (j < extra ? 1 : 0);
        for (std::size_t t = 0; t < size; ++t) group[r++] = static_cast<std::int64_t>(j);
    }
    std::vector<Edge> edges;
    for (const auto& e : factorization.edges()) {
        if (group[e.label] >= 0) edges.push_back({e.u, e.v, static_cast<Label>(group[e.label])});
    }
    return {factorization.num_vertices(), std::move(edges)};
}

std::vector<Vertex> random_subset(std::size_t universe, std::size_t size, Rng& rng) {
    if (size > universe) throw std::invalid_argument("random_subset: size exceeds universe");
    std::vector<Vertex> pool(universe);
    std::iota(pool.begin(), pool.end(), 0u);
    for (std::size_t i = 0; i < size; ++i) std::swap(pool[i], pool[i + rng.below(universe - i)]);
    pool.resize(size);
    std::sort(pool.begin(), pool.end());
    return pool;
}

bool label_classes_disjoint(const LabeledMultigraph& g) {
    const auto edges = g.edges();
    for (std::size_t i = 1; i < edges.size(); ++i) {
        if (edges[i].u == edges[i - 1].u && edges[i].v == edges[i - 1].v && edges[i].label != edges[i - 1].label) {
            return false;
        }
    }
    return true;
}

}  // namespace chromkit
