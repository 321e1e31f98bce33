#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace chromkit {

using Vertex = std::uint32_t;
using Label = std::uint32_t;
using Color = std::uint32_t;

class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Undirected edge; stored with u < v after construction.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;
    Label label = 0;

    auto operator<=>(const Edge&) const = default;
};

struct Incidence {
    Vertex neighbor;
    std::uint32_t edge;
};

/// Finite undirected multigraph with integer edge labels.
///
/// Parallel edges are kept as distinct edges, including parallel edges with
/// the same label. Self-loops are rejected. Edges are normalized to u < v and
/// sorted by (u, v, label), so edge indices are canonical for a given edge
/// multiset and two graphs compare equal iff their edge multisets agree.
/// The value is immutable after construction.
class LabeledMultigraph {
public:
    LabeledMultigraph() = default;
    LabeledMultigraph(std::size_t num_vertices, std::vector<Edge> edges);

    std::size_t num_vertices() const noexcept { return num_vertices_; }
    std::size_t num_edges() const noexcept { return edges_.size(); }
    std::span<const Edge> edges() const noexcept { return edges_; }
    const Edge& edge(std::size_t index) const { return edges_.at(index); }

    /// Incident edges of v ordered by edge index; a parallel edge appears once per copy.
    std::span<const Incidence> incident(Vertex v) const;

    /// Degree with multiplicity. Throws GraphError for an out-of-range vertex.
    std::size_t degree(Vertex v) const;
    std::size_t max_degree() const noexcept;

    /// Distinct labels in increasing order.
    std::vector<Label> labels() const;

    /// Spanning subgraph keeping only edges with the given label.
    LabeledMultigraph label_class(Label label) const;

    /// Same graph with every edge label replaced by `label`.
    LabeledMultigraph relabeled(Label label) const;

    bool operator==(const LabeledMultigraph& other) const {
        return num_vertices_ == other.num_vertices_ && edges_ == other.edges_;
    }

private:
    std::size_t num_vertices_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::uint32_t> offsets_{0};
    std::vector<Incidence> incidences_;
};

std::size_t degree(const LabeledMultigraph& g, Vertex v);

/// Common degree if every vertex has the same degree.
std::optional<std::size_t> regular_degree(const LabeledMultigraph& g);

/// Shortest cycle length; a parallel pair is a 2-cycle. nullopt for forests.
std::optional<std::size_t> girth(const LabeledMultigraph& g);

bool is_acyclic(const LabeledMultigraph& g);

/// Number of cycles of each length 0..max_length (entries 0 and 1 are zero).
/// Cycles are edge sets, so distinct parallel copies give distinct cycles.
std::vector<std::uint64_t> cycle_counts(const LabeledMultigraph& g, std::size_t max_length);

struct Components {
    std::vector<std::uint32_t> component;  // per vertex
    std::size_t count = 0;
};

Components connected_components(const LabeledMultigraph& g);

struct InducedSubgraph {
    LabeledMultigraph graph;
    std::vector<Vertex> origin;  // local -> original vertex
};

/// Sub-multigraph induced by `vertices` (local index i is vertices[i]).
InducedSubgraph induced_subgraph(const LabeledMultigraph& g, std::span<const Vertex> vertices);

/// Rooted r-neighborhood. The root is local vertex 0; local vertices are in
/// BFS order and `origin` maps them back to the source graph.
struct RootedBall {
    Vertex root = 0;
    LabeledMultigraph graph;
    std::size_t depth = 0;
    std::optional<std::vector<Color>> vertex_colors;
    std::vector<Vertex> origin;
};

/// Induced sub-multigraph on the vertices within distance r of v. When
/// `colors` is non-empty it must cover all of g and is restricted to the ball.
RootedBall rooted_ball(const LabeledMultigraph& g, Vertex v, std::size_t r,
                       std::span<const Color> colors = {});

LabeledMultigraph complete_graph(std::size_t n);
LabeledMultigraph cycle_graph(std::size_t n);
LabeledMultigraph path_graph(std::size_t n);
LabeledMultigraph petersen_graph();

}  // namespace chromkit
