#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "chromkit/canonical.hpp"
#include "chromkit/chromatic.hpp"
#include "chromkit/graph.hpp"
#include "chromkit/io.hpp"
#include "chromkit/rational.hpp"

namespace chromkit {

enum class SampleMode { exact, monte_carlo };

/// Distribution of colored, labeled r-ball types at a random vertex. Stored
/// as integer counts so probabilities are exact fractions count / total.
struct BallStatistic {
    std::size_t r = 0;
    std::size_t s = 0;
    SampleMode mode = SampleMode::exact;
    std::uint64_t seed = 0;  // monte_carlo only
    std::map<CanonicalCode, std::uint64_t> counts;
    std::uint64_t total = 0;

    double probability(const CanonicalCode& code) const;
    Rational exact_probability(const CanonicalCode& code) const;
};

/// One ball per vertex. beta must cover g with values < beta.num_colors().
BallStatistic ball_statistic(const LabeledMultigraph& g, const VertexColoring& beta, std::size_t r);

/// `trials` roots drawn uniformly with replacement from Rng(seed).
BallStatistic sample_ball_statistic(const LabeledMultigraph& g, const VertexColoring& beta, std::size_t r,
                                    std::uint64_t trials, std::uint64_t seed);

BallStatistic point_mass(const CanonicalCode& code, std::size_t r, std::size_t s);

/// 1/2 sum |p - q|. Throws std::invalid_argument on mismatched (r, s).
Rational tv_distance_exact(const BallStatistic& a, const BallStatistic& b);
double tv_distance(const BallStatistic& a, const BallStatistic& b);

/// Depth-r ball of the infinite d-regular tree, all edges label 0, every vertex `color`.
CanonicalCode tree_ball_reference(std::size_t d, std::size_t r, Color color = 0);

enum SubsetCell : Color {
    kOnlyB = 0,     // B \ B'
    kOnlyBPrime = 1,  // B' \ B
    kBoth = 2,       // B n B'
    kNeither = 3,
};

/// Four-cell indicator assignment of (B, B'). Throws on out-of-range vertices.
VertexColoring encode_subsets_as_assignment(std::size_t num_vertices, std::span<const Vertex> b,
                                            std::span<const Vertex> b_prime);

/// Mass of balls whose root lies in B (cells kOnlyB and kBoth).
Rational b_density_from_statistic(const BallStatistic& stat);
Rational b_prime_density_from_statistic(const BallStatistic& stat);

/// |{x in B : some y in B' with x -- y labeled `label`}|, counted in g.
std::uint64_t edge_witness_count(const LabeledMultigraph& g, const VertexColoring& cells, Label label);

/// Same quantity divided by |V|, read off a statistic with r >= 1 built on
/// the encoded assignment.
Rational edge_witness_from_statistic(const BallStatistic& stat, Label label);

Json statistic_to_json(const BallStatistic& stat);
BallStatistic statistic_from_json(const Json& j);

}  // namespace chromkit
