#pragma once

#include <optional>
#include <utility>

#include "chromkit/chromatic.hpp"
#include "chromkit/graph.hpp"
#include "chromkit/io.hpp"

namespace chromkit {

/// First-fit edge coloring in (min endpoint, max endpoint) order; at most
/// 2*Delta - 1 colors. Throws GraphError if g has parallel edges.
EdgeColoring greedy_edge_coloring(const LabeledMultigraph& g);

/// Edge-labeled product on pairs (x, y), flattened to x * |Y| + y:
/// (x,y) ~ (x',y') iff x ~ x' in left, coloring(x,x') = j and y ~ y' in the
/// label-j class of right. Product edges carry label j.
struct ProductGraph {
    LabeledMultigraph left;
    EdgeColoring coloring;
    LabeledMultigraph right;
    LabeledMultigraph graph;

    std::size_t right_size() const noexcept { return right.num_vertices(); }
    Vertex vertex(Vertex x, Vertex y) const;
    std::pair<Vertex, Vertex> decode(Vertex v) const;
};

/// Throws std::invalid_argument when the coloring is improper, right lacks
/// one of the labels 0..k-1, or two used label classes share a vertex pair.
/// Labels >= k in right are ignored.
ProductGraph build_product(const LabeledMultigraph& left, const EdgeColoring& coloring,
                           const LabeledMultigraph& right);

struct GirthCheck {
    std::optional<std::size_t> product_girth;  // nullopt = acyclic
    std::optional<std::size_t> right_girth;    // of the union of used classes
    bool holds = false;                        // girth(H) >= girth(right); H acyclic if right is
};

GirthCheck girth_preservation_check(const ProductGraph& p);

struct MajorityReport {
    VertexColoring coloring;  // on left
    bool proper = false;
    std::optional<std::size_t> violating_edge;
};

/// c(x) = least i with n * |{y : c'(x,y) = i}| >= |Y|. Compared exactly in integers.
MajorityReport majority_extract(const ProductGraph& p, const VertexColoring& coloring, std::size_t n);

/// c''(x, y) = c(x). Throws std::invalid_argument if c is not proper on left.
VertexColoring lift_product_coloring(const ProductGraph& p, const VertexColoring& coloring);

Json product_to_json(const ProductGraph& p);
ProductGraph product_from_json(const Json& j);

}  // namespace chromkit
