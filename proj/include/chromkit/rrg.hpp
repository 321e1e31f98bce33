#pragma once

#include <cstdint>
#include <vector>

#include "chromkit/graph.hpp"
#include "chromkit/rng.hpp"

namespace chromkit {

/// Parameters of a labeled union of k independent d-matching random graphs.
struct SampleSpec {
    std::size_t l = 2;  // even vertex count
    std::size_t d = 1;  // matchings per label
    std::size_t k = 1;  // labels
    std::uint64_t seed = 0;

    /// Throws std::invalid_argument on odd or too-small l, d == 0 or k == 0.
    void validate() const;
};

/// Uniform perfect matching on l vertices: consecutive pairs of a uniform
/// permutation. Edges carry `label`.
LabeledMultigraph sample_matching(std::size_t l, Rng& rng, Label label = 0);

/// Union of d independent uniform perfect matchings drawn from `rng`;
/// parallel edges kept, all labels 0.
LabeledMultigraph sample_rrg(std::size_t l, std::size_t d, Rng& rng);

/// Label j holds d matchings; matching i of label j is drawn from its own
/// stream Rng(stream_seed(seed, j*d + i)), so samples are reproducible and
/// independent of evaluation order.
LabeledMultigraph sample_labeled_union(const SampleSpec& spec);

/// Round-robin 1-factorization of K_l: vertex l-1 is fixed, round r pairs
/// r with l-1 and (r+i, r-i) mod (l-1). Label = round, l-1 rounds.
LabeledMultigraph one_factorize_complete(std::size_t l);

enum class GroupMode {
    spread,  // sizes differ by at most one, larger groups first
    equal,   // floor((l-1)/k) matchings per group, remainder discarded
};

/// Relabels consecutive rounds of a 1-factorization into k groups.
LabeledMultigraph group_matchings(const LabeledMultigraph& factorization, std::size_t k, GroupMode mode);

/// Uniform `size`-subset of {0..universe-1}, sorted. Partial Fisher-Yates.
std::vector<Vertex> random_subset(std::size_t universe, std::size_t size, Rng& rng);

/// True iff no unordered vertex pair carries two different labels.
bool label_classes_disjoint(const LabeledMultigraph& g);

}  // namespace chromkit
