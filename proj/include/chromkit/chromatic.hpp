#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "chromkit/graph.hpp"

namespace chromkit {

/// Assignment of colors to vertices. Properness is a separate predicate:
/// an arbitrary assignment is a "color assignment", a proper one a coloring.
class VertexColoring {
public:
    VertexColoring() = default;
    /// Throws std::invalid_argument if some value is >= num_colors.
    VertexColoring(std::vector<Color> values, std::size_t num_colors);
    /// num_colors = 1 + max value (0 for an empty assignment).
    static VertexColoring from_values(std::vector<Color> values);

    std::span<const Color> values() const noexcept { return values_; }
    Color operator[](std::size_t v) const { return values_.at(v); }
    std::size_t size() const noexcept { return values_.size(); }
    std::size_t num_colors() const noexcept { return num_colors_; }

    bool operator==(const VertexColoring&) const = default;

private:
    std::vector<Color> values_;
    std::size_t num_colors_ = 0;
};

struct EdgeColoring {
    std::vector<Color> values;  // indexed like g.edges()
    std::size_t num_colors = 0;
};

struct ProperCheck {
    bool proper = true;
    std::optional<std::size_t> violating_edge;
    explicit operator bool() const noexcept { return proper; }
};

/// Throws GraphError when the assignment does not cover every vertex.
ProperCheck is_proper(const LabeledMultigraph& g, std::span<const Color> colors);
ProperCheck is_proper(const LabeledMultigraph& g, const VertexColoring& c);

/// Edges sharing an endpoint get different colors.
ProperCheck is_proper_edge_coloring(const LabeledMultigraph& g, const EdgeColoring& e);

enum class Decision { yes, no, unknown };

const char* to_string(Decision d) noexcept;

struct ColorabilityResult {
    Decision decision = Decision::unknown;
    std::optional<VertexColoring> witness;  // set iff decision == yes
    std::uint64_t nodes = 0;                // search nodes expanded
    std::size_t clique_size = 0;            // largest clique used for symmetry breaking
};

inline constexpr std::uint64_t kDefaultBudget = 50'000'000;

/// Exact n-colorability by DSATUR backtracking on each connected component,
/// with a greedily found clique pre-colored and new colors introduced in
/// order. "no" is returned only after exhaustive search (or a clique larger
/// than n); "unknown" when the node budget runs out.
ColorabilityResult n_colorable(const LabeledMultigraph& g, std::size_t n, std::uint64_t budget = kDefaultBudget);

struct ChromaticResult {
    std::size_t lower = 0;
    std::size_t upper = 0;
    VertexColoring best;  // proper coloring with `upper` colors
    bool exact() const noexcept { return lower == upper; }
};

ChromaticResult chromatic_number(const LabeledMultigraph& g, std::uint64_t budget = kDefaultBudget);

/// First-fit in the given order; uses at most max_degree + 1 colors.
VertexColoring greedy_coloring(const LabeledMultigraph& g, std::span<const Vertex> order);
VertexColoring greedy_coloring(const LabeledMultigraph& g);

/// Greedy clique: grown from every start vertex, largest kept.
std::vector<Vertex> greedy_clique(const LabeledMultigraph& g);

struct EnumerationResult {
    std::uint64_t count = 0;
    bool capped = false;
};

/// Visits every proper n-coloring exactly once, in a fixed search order
/// (BFS order within components). Stops after `cap` colorings and sets
/// `capped` if more exist.
EnumerationResult for_each_proper_coloring(const LabeledMultigraph& g, std::size_t n, std::uint64_t cap,
                                           const std::function<void(std::span<const Color>)>& visit);

std::vector<std::vector<Color>> enumerate_proper_colorings(const LabeledMultigraph& g, std::size_t n,
                                                           std::uint64_t cap, bool* capped = nullptr);

}  // namespace chromkit
