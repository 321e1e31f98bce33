#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "chromkit/chromatic.hpp"
#include "chromkit/graph.hpp"

namespace chromkit {

/// d + (d-1)(n-1): tuple vertices plus d-1 cliques on n-1 vertices.
std::size_t gadget_size(std::size_t n, std::size_t d);

/// Graph forcing every proper n-coloring to be constant on {0..d-1}.
///
/// Clique K_i (i < d-1) occupies vertices d + i(n-1) .. d + (i+1)(n-1) - 1
/// and both tuple vertices i and i+1 are joined to all of it; tuple vertices
/// are never adjacent to each other. The canonical coloring gives the tuple
/// color 0 and clique vertex d + i(n-1) + t color t+1.
struct Gadget {
    std::size_t n = 0;
    std::size_t d = 0;
    std::size_t l = 0;
    LabeledMultigraph graph;
    VertexColoring canonical_coloring;
};

/// Throws std::invalid_argument unless n >= 3 and d >= 1.
Gadget build_gadget(std::size_t n, std::size_t d);

struct GadgetReport {
    bool size_matches = false;      // l == d + (d-1)(n-1) == |V|
    bool forcing = false;           // every proper n-coloring constant on the tuple
    bool canonical_proper = false;  // canonical coloring proper, 0 on the tuple
    bool degree_bound = false;      // max degree <= 2(n-1)
    bool enumeration_complete = false;
    std::uint64_t proper_colorings = 0;
    std::size_t distinct_tuple_values = 0;  // among tuple-constant colorings
    std::size_t max_degree = 0;
    std::optional<std::vector<Color>> counterexample;  // non-constant proper coloring

    bool passed() const noexcept {
        return size_matches && forcing && canonical_proper && degree_bound && enumeration_complete;
    }
};

/// Exhaustive check over all proper n-colorings (search tree, not n^l enumeration).
/// Failures are reported, never thrown.
GadgetReport verify_gadget(const Gadget& gadget, std::uint64_t cap = 100'000'000);

}  // namespace chromkit
