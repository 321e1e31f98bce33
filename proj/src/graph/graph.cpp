#include "chromkit/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <limits>
#include <string>
#include <unordered_map>

namespace chromkit {

LabeledMultigraph::LabeledMultigraph(std::size_t num_vertices, std::vector<Edge> edges)
    : num_vertices_(num_vertices), edges_(std::move(edges)) {
    if (num_vertices_ > std::numeric_limits<Vertex>::max()) {
        throw GraphError("vertex count exceeds 32-bit index range");
    }
    for (auto& e : edges_) {
        if (e.u >= num_vertices_ || e.v >= num_vertices_) {
            throw GraphError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                             ") out of range for " + std::to_string(num_vertices_) + " vertices");
        }
        if (e.u == e.v) {
            throw GraphError("self-loop at vertex " + std::to_string(e.u));
        }
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end());

    std::vector<std::uint32_t> deg(num_vertices_, 0);
    for (const auto& e : edges_) {
        ++deg[e.u];
        ++deg[e.v];
    }
    offsets_.assign(num_vertices_ + 1, 0);
    for (std::size_t v = 0; v < num_vertices_; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
    incidences_.resize(offsets_.back());
    std::vector<std::uint32_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (std::uint32_t i = 0; i < edges_.size(); ++i) {
        const auto& e = edges_[i];
        incidences_[fill[e.u]++] = {e.v, i};
        incidences_[fill[e.v]++] = {e.u, i};
    }
}

std::span<const Incidence> LabeledMultigraph::incident(Vertex v) const {
    if (v >= num_vertices_) throw GraphError("vertex " + std::to_string(v) + " out of range");
    return {incidences_.data() + offsets_[v], incidences_.data() + offsets_[v + 1]};
}

std::size_t LabeledMultigraph::degree(Vertex v) const {
    if (v >= num_vertices_) throw GraphError("vertex " + std::to_string(v) + " out of range");
    return offsets_[v + 1] - offsets_[v];
}

std::size_t LabeledMultigraph::max_degree() const noexcept {
    std::size_t best = 0;
    for (std::size_t v = 0; v < num_vertices_; ++v) best = std::max<std::size_t>(best, offsets_[v + 1] - offsets_[v]);
    return best;
}

std::vector<Label> LabeledMultigraph::labels() const {
    std::vector<Label> out;
    out.reserve(edges_.size());
    for (const auto& e : edges_) out.push_back(e.label);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

LabeledMultigraph LabeledMultigraph::label_class(Label label) const {
    std::vector<Edge> kept;
    for (const auto& e : edges_) {
        if (e.label == label) kept.push_back(e);
    }
    return {num_vertices_, std::move(kept)};
}

LabeledMultigraph LabeledMultigraph::relabeled(Label label) const {
    auto copy = edges_;
    for (auto& e : copy) e.label = label;
    return {num_vertices_, std::move(copy)};
}

std::size_t degree(const LabeledMultigraph& g, Vertex v) { return g.degree(v); }

std::optional<std::size_t> regular_degree(const LabeledMultigraph& g) {
    if (g.num_vertices() == 0) return 0;
    const std::size_t d = g.degree(0);
    for (Vertex v = 1; v < g.num_vertices(); ++v) {
        if (g.degree(v) != d) return std::nullopt;
    }
    return d;
}

namespace {

bool has_parallel_pair(const LabeledMultigraph& g) {
    const auto edges = g.edges();
    for (std::size_t i = 1; i < edges.size(); ++i) {
        if (edges[i].u == edges[i - 1].u && edges[i].v == edges[i - 1].v) return true;
    }
    return false;
}

struct DisjointSets {
    std::vector<std::uint32_t> parent;
    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
    std::uint32_t find(std::uint32_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[std::max(a, b)] = std::min(a, b);
        return true;
    }
};

}  // namespace

std::optional<std::size_t> girth(const LabeledMultigraph& g) {
    if (has_parallel_pair(g)) return 2;
    const std::size_t n = g.num_vertices();
    constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
    std::size_t best = kNone;
    std::vector<std::size_t> dist(n, kNone);
    std::vector<std::uint32_t> parent_edge(n);
    std::vector<Vertex> touched;
    std::deque<Vertex> queue;
    for (Vertex root = 0; root < n && best > 3; ++root) {
        for (auto t : touched) dist[t] = kNone;
        touched.clear();
        queue.clear();
        dist[root] = 0;
        parent_edge[root] = std::numeric_limits<std::uint32_t>::max();
        touched.push_back(root);
        queue.push_back(root);
        while (!queue.empty()) {
            const Vertex x = queue.front();
            queue.pop_front();
            // Any cycle closed from here has length at least 2*dist[x].
            if (best != kNone && 2 * dist[x] >= best) break;
            for (const auto& inc : g.incident(x)) {
                if (inc.edge == parent_edge[x]) continue;
                const Vertex y = inc.neighbor;
                if (dist[y] == kNone) {
                    dist[y] = dist[x] + 1;
                    parent_edge[y] = inc.edge;
                    touched.push_back(y);
                    queue.push_back(y);
                } else {
                    best = std::min(best, dist[x] + dist[y] + 1);
                }
            }
        }
    }
    if (best == kNone) return std::nullopt;
    return best;
}

bool is_acyclic(const LabeledMultigraph& g) {
    DisjointSets sets(g.num_vertices());
    for (const auto& e : g.edges()) {
        if (!sets.unite(e.u, e.v)) return false;
    }
    return true;
}

std::vector<std::uint64_t> cycle_counts(const LabeledMultigraph& g, std::size_t max_length) {
    std::vector<std::uint64_t> counts(max_length + 1, 0);
    if (max_length < 2) return counts;
    const auto edges = g.edges();
    for (std::size_t i = 0; i < edges.size();) {
        std::size_t j = i;
        while (j < edges.size() && edges[j].u == edges[i].u && edges[j].v == edges[i].v) ++j;
        const std::uint64_t m = j - i;
        counts[2] += m * (m - 1) / 2;
        i = j;
    }
    if (max_length < 3) return counts;

    // Simple cycles of length >= 3 through their minimum vertex, each found
    // once per orientation.
    const std::size_t n = g.num_vertices();
    std::vector<char> on_path(n, 0);
    std::vector<std::uint64_t> directed(max_length + 1, 0);
    auto dfs = [&](auto&& self, Vertex start, Vertex x, std::size_t length) -> void {
        for (const auto& inc : g.incident(x)) {
            const Vertex y = inc.neighbor;
            if (y == start && length >= 2) {
                ++directed[length + 1];
                continue;
            }
            if (y <= start || on_path[y] || length + 1 >= max_length) continue;
            on_path[y] = 1;
            self(self, start, y, length + 1);
            on_path[y] = 0;
        }
    };
    for (Vertex s = 0; s < n; ++s) {
        on_path[s] = 1;
        dfs(dfs, s, s, 0);
        on_path[s] = 0;
    }
    for (std::size_t len = 3; len <= max_length; ++len) counts[len] = directed[len] / 2;
    return counts;
}

Components connected_components(const LabeledMultigraph& g) {
    DisjointSets sets(g.num_vertices());
    for (const auto& e : g.edges()) sets.unite(e.u, e.v);
    Components out;
    out.component.assign(g.num_vertices(), 0);
    std::vector<std::uint32_t> id(g.num_vertices(), std::numeric_limits<std::uint32_t>::max());
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        const auto r = sets.find(v);
        if (id[r] == std::numeric_limits<std::uint32_t>::max()) id[r] = static_cast<std::uint32_t>(out.count++);
        out.component[v] = id[r];
    }
    return out;
}

InducedSubgraph induced_subgraph(const LabeledMultigraph& g, std::span<const Vertex> vertices) {
    constexpr auto kAbsent = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> local(g.num_vertices(), kAbsent);
    for (std::uint32_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i] >= g.num_vertices()) throw GraphError("induced_subgraph: vertex out of range");
        if (local[vertices[i]] != kAbsent) throw GraphError("induced_subgraph: repeated vertex");
        local[vertices[i]] = i;
    }
    std::vector<Edge> edges;
    for (const auto& e : g.edges()) {
        if (local[e.u] != kAbsent && local[e.v] != kAbsent) edges.push_back({local[e.u], local[e.v], e.label});
    }
    return {LabeledMultigraph(vertices.size(), std::move(edges)), {vertices.begin(), vertices.end()}};
}

RootedBall rooted_ball(const LabeledMultigraph& g, Vertex v, std::size_t r, std::span<const Color> colors) {
    if (v >= g.num_vertices()) throw GraphError("rooted_ball: vertex out of range");
    if (!colors.empty() && colors.size() != g.num_vertices()) {
        throw GraphError("rooted_ball: color assignment does not cover the graph");
    }
    std::vector<Vertex> order{v};
    std::vector<std::size_t> dist{0};
    std::unordered_map<Vertex, std::uint32_t> seen{{v, 0}};
    auto lookup = [&](Vertex x) -> std::optional<std::uint32_t> {
        if (auto it = seen.find(x); it != seen.end()) return it->second;
        return std::nullopt;
    };
    for (std::size_t head = 0; head < order.size(); ++head) {
        if (dist[head] == r) continue;
        for (const auto& inc : g.incident(order[head])) {
            if (lookup(inc.neighbor)) continue;
            const auto idx = static_cast<std::uint32_t>(order.size());
            order.push_back(inc.neighbor);
            dist.push_back(dist[head] + 1);
            seen.emplace(inc.neighbor, idx);
        }
    }
    std::vector<Edge> edges;
    for (std::uint32_t i = 0; i < order.size(); ++i) {
        for (const auto& inc : g.incident(order[i])) {
            const auto& e = g.edge(inc.edge);
            if (e.u != order[i]) continue;  // visit each edge from its smaller endpoint
            if (auto j = lookup(e.v)) edges.push_back({i, *j, e.label});
        }
    }
    RootedBall ball;
    ball.root = 0;
    ball.depth = r;
    ball.graph = LabeledMultigraph(order.size(), std::move(edges));
    if (!colors.empty()) {
        std::vector<Color> local(order.size());
        for (std::size_t i = 0; i < order.size(); ++i) local[i] = colors[order[i]];
        ball.vertex_colors = std::move(local);
    }
    ball.origin = std::move(order);
    return ball;
}

LabeledMultigraph complete_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v, 0});
    return {n, std::move(edges)};
}

LabeledMultigraph cycle_graph(std::size_t n) {
    if (n < 3) throw GraphError("cycle_graph needs at least 3 vertices");
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) edges.push_back({u, static_cast<Vertex>((u + 1) % n), 0});
    return {n, std::move(edges)};
}

LabeledMultigraph path_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u + 1 < n; ++u) edges.push_back({u, u + 1, 0});
    return {n, std::move(edges)};
}

LabeledMultigraph petersen_graph() {
    std::vector<Edge> edges;
    for (Vertex i = 0; i < 5; ++i) {
        edges.push_back({i, (i + 1) % 5, 0});
        edges.push_back({i, i + 5, 0});
        edges.push_back({i + 5, (i + 2) % 5 + 5, 0});
    }
    return {10, std::move(edges)};
}

}  // namespace chromkit
