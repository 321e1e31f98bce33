#include "chromkit/product.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "chromkit/rrg.hpp"

namespace chromkit {

EdgeColoring greedy_edge_coloring(const LabeledMultigraph& g) {
    const auto edges = g.edges();
    for (std::size_t i = 1; i < edges.size(); ++i) {
        if (edges[i].u == edges[i - 1].u && edges[i].v == edges[i - 1].v) {
            throw GraphError("greedy_edge_coloring: parallel edges between " + std::to_string(edges[i].u) + " and " +
                             std::to_string(edges[i].v));
        }
    }
    EdgeColoring out;
    constexpr Color kNone = std::numeric_limits<Color>::max();
    out.values.assign(edges.size(), kNone);
    std::vector<char> used;
    // Edges are stored sorted by (u, v) with u < v.
    for (std::size_t i = 0; i < edges.size(); ++i) {
        used.assign(2 * g.max_degree() + 1, 0);
        for (Vertex end : {edges[i].u, edges[i].v}) {
            for (const auto& inc : g.incident(end)) {
                if (out.values[inc.edge] != kNone) used[out.values[inc.edge]] = 1;
            }
        }
        Color c = 0;
        while (used[c]) ++c;
        out.values[i] = c;
        out.num_colors = std::max<std::size_t>(out.num_colors, c + 1);
    }
    return out;
}

Vertex ProductGraph::vertex(Vertex x, Vertex y) const {
    if (x >= left.num_vertices() || y >= right.num_vertices()) throw std::out_of_range("product: (x, y) out of range");
    return static_cast<Vertex>(static_cast<std::size_t>(x) * right.num_vertices() + y);
}

std::pair<Vertex, Vertex> ProductGraph::decode(Vertex v) const {
    if (v >= graph.num_vertices()) throw std::out_of_range("product: vertex out of range");
    return {static_cast<Vertex>(v / right.num_vertices()), static_cast<Vertex>(v % right.num_vertices())};
}

namespace {

LabeledMultigraph used_classes(const LabeledMultigraph& right, std::size_t k) {
    std::vector<Edge> edges;
    for (const auto& e : right.edges()) {
        if (e.label < k) edges.push_back(e);
    }
    return {right.num_vertices(), std::move(edges)};
}

}  // namespace

ProductGraph build_product(const LabeledMultigraph& left, const EdgeColoring& coloring,
                           const LabeledMultigraph& right) {
    if (!is_proper_edge_coloring(left, coloring)) throw std::invalid_argument("product: edge coloring is not proper");
    const std::size_t k = coloring.num_colors;
    for (auto c : coloring.values) {
        if (c >= k) throw std::invalid_argument("product: edge color out of range");
    }
    const auto labels = right.labels();
    for (Label j = 0; j < k; ++j) {
        if (!std::binary_search(labels.begin(), labels.end(), j)) {
            throw std::invalid_argument("product: right graph has no label class " + std::to_string(j));
        }
    }
    const auto used = used_classes(right, k);
    if (!label_classes_disjoint(used)) throw std::invalid_argument("product: label classes of right are not disjoint");
    const std::size_t ny = right.num_vertices();
    if (static_cast<unsigned __int128>(left.num_vertices()) * ny > std::numeric_limits<Vertex>::max()) {
        throw std::invalid_argument("product: too many vertices");
    }

    // Right edges bucketed by label.
    std::vector<std::vector<Edge>> by_label(k);
    for (const auto& e : used.edges()) by_label[e.label].push_back(e);

    ProductGraph p;
    p.left = left;
    p.coloring = coloring;
    p.right = right;
    std::vector<Edge> edges;
    const auto left_edges = left.edges();
    for (std::size_t i = 0; i < left_edges.size(); ++i) {
        const auto& ge = left_edges[i];
        const Label j = coloring.values[i];
        for (const auto& re : by_label[j]) {
            const auto a = static_cast<Vertex>(ge.u * ny);
            const auto b = static_cast<Vertex>(ge.v * ny);
            edges.push_back({a + re.u, b + re.v, j});
            edges.push_back({a + re.v, b + re.u, j});
        }
    }
    p.graph = LabeledMultigraph(left.num_vertices() * ny, std::move(edges));
    return p;
}

GirthCheck girth_preservation_check(const ProductGraph& p) {
    GirthCheck out;
    out.product_girth = girth(p.graph);
    out.right_girth = girth(used_classes(p.right, p.coloring.num_colors));
    if (!out.right_girth) {
        out.holds = !out.product_girth.has_value();
    } else {
        out.holds = !out.product_girth || *out.product_girth >= *out.right_girth;
    }
    return out;
}

MajorityReport majority_extract(const ProductGraph& p, const VertexColoring& coloring, std::size_t n) {
    if (coloring.size() != p.graph.num_vertices()) throw std::invalid_argument("majority: coloring size mismatch");
    if (n == 0) throw std::invalid_argument("majority: n must be positive");
    const std::size_t ny = p.right_size();
    if (ny == 0) throw std::invalid_argument("majority: empty right graph");
    std::vector<Color> c(p.left.num_vertices());
    std::vector<std::size_t> counts(n);
    for (Vertex x = 0; x < p.left.num_vertices(); ++x) {
        std::fill(counts.begin(), counts.end(), 0);
        for (Vertex y = 0; y < ny; ++y) {
            const Color v = coloring[p.vertex(x, y)];
            if (v >= n) throw std::invalid_argument("majority: color >= n");
            ++counts[v];
        }
        Color i = 0;
        while (counts[i] * n < ny) ++i;  // terminates: some count >= ny / n
        c[x] = i;
    }
    MajorityReport out;
    out.coloring = VertexColoring(std::move(c), n);
    const auto check = is_proper(p.left, out.coloring);
    out.proper = check.proper;
    out.violating_edge = check.violating_edge;
    return out;
}

VertexColoring lift_product_coloring(const ProductGraph& p, const VertexColoring& coloring) {
    if (coloring.size() != p.left.num_vertices()) throw std::invalid_argument("lift: coloring size mismatch");
    if (!is_proper(p.left, coloring)) throw std::invalid_argument("lift: coloring is not proper on left");
    std::vector<Color> out(p.graph.num_vertices());
    for (Vertex v = 0; v < out.size(); ++v) out[v] = coloring[p.decode(v).first];
    return {std::move(out), coloring.num_colors()};
}

Json product_to_json(const ProductGraph& p) {
    Json j = graph_to_json(p.graph);
    Json meta;
    meta["left"] = graph_to_json(p.left);
    meta["right"] = graph_to_json(p.right);
    meta["edge_coloring"] = p.coloring.values;
    j["product"] = std::move(meta);
    return j;
}

ProductGraph product_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("product")) throw FormatError("product: missing \"product\" section");
    const auto& meta = j["product"];
    if (!meta.contains("left") || !meta.contains("right") || !meta.contains("edge_coloring")) {
        throw FormatError("product: section needs left, right and edge_coloring");
    }
    const auto left = graph_from_json(meta["left"]);
    const auto right = graph_from_json(meta["right"]);
    EdgeColoring e;
    e.values = uint_array_from_json(meta["edge_coloring"], "edge_coloring");
    for (auto c : e.values) e.num_colors = std::max<std::size_t>(e.num_colors, c + 1);
    ProductGraph p;
    try {
        p = build_product(left, e, right);
    } catch (const std::exception& err) {
        throw FormatError(err.what());
    }
    if (graph_from_json(j) != p.graph) throw FormatError("product: stored graph disagrees with its factors");
    return p;
}

}  // namespace chromkit
