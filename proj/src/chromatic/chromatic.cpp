#include "chromkit/chromatic.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace chromkit {

VertexColoring::VertexColoring(std::vector<Color> values, std::size_t num_colors)
    : values_(std::move(values)), num_colors_(num_colors) {
    for (auto c : values_) {
        if (c >= num_colors_) {
            throw std::invalid_argument("color " + std::to_string(c) + " out of range for " +
                                        std::to_string(num_colors_) + " colors");
        }
    }
}

VertexColoring VertexColoring::from_values(std::vector<Color> values) {
    const std::size_t k = values.empty() ? 0 : 1 + *std::max_element(values.begin(), values.end());
    return {std::move(values), k};
}

ProperCheck is_proper(const LabeledMultigraph& g, std::span<const Color> colors) {
    if (colors.size() != g.num_vertices()) {
        throw GraphError("coloring covers " + std::to_string(colors.size()) + " of " +
                         std::to_string(g.num_vertices()) + " vertices");
    }
    const auto edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (colors[edges[i].u] == colors[edges[i].v]) return {false, i};
    }
    return {};
}

ProperCheck is_proper(const LabeledMultigraph& g, const VertexColoring& c) { return is_proper(g, c.values()); }

ProperCheck is_proper_edge_coloring(const LabeledMultigraph& g, const EdgeColoring& e) {
    if (e.values.size() != g.num_edges()) throw GraphError("edge coloring does not cover every edge");
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        std::vector<std::pair<Color, std::uint32_t>> seen;
        for (const auto& inc : g.incident(v)) seen.emplace_back(e.values[inc.edge], inc.edge);
        std::sort(seen.begin(), seen.end());
        for (std::size_t i = 1; i < seen.size(); ++i) {
            if (seen[i].first == seen[i - 1].first) return {false, std::max(seen[i].second, seen[i - 1].second)};
        }
    }
    return {};
}

const char* to_string(Decision d) noexcept {
    switch (d) {
        case Decision::yes: return "yes";
        case Decision::no: return "no";
        case Decision::unknown: return "unknown";
    }
    return "unknown";
}

namespace {

using Adjacency = std::vector<std::vector<Vertex>>;

Adjacency simple_adjacency(const LabeledMultigraph& g) {
    Adjacency adj(g.num_vertices());
    for (const auto& e : g.edges()) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    for (auto& list : adj) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }
    return adj;
}

std::vector<Vertex> greedy_clique(const Adjacency& adj, std::span<const Vertex> vertices) {
    // Starts: the highest-degree vertices (ties by index), at most kMaxStarts.
    constexpr std::size_t kMaxStarts = 64;
    std::vector<Vertex> starts(vertices.begin(), vertices.end());
    std::stable_sort(starts.begin(), starts.end(), [&](Vertex a, Vertex b) { return adj[a].size() > adj[b].size(); });
    if (starts.size() > kMaxStarts) starts.resize(kMaxStarts);
    std::vector<Vertex> best;
    std::vector<Vertex> clique, candidates, next;
    for (Vertex start : starts) {
        if (adj[start].size() + 1 <= best.size()) continue;
        clique.assign(1, start);
        candidates = adj[start];
        while (!candidates.empty()) {
            // Take the candidate with most neighbors still among the candidates.
            Vertex pick = candidates.front();
            std::int64_t pick_score = -1;
            for (Vertex c : candidates) {
                std::int64_t score = 0;
                for (Vertex w : adj[c]) score += std::binary_search(candidates.begin(), candidates.end(), w);
                if (score > pick_score) {
                    pick = c;
                    pick_score = score;
                }
            }
            clique.push_back(pick);
            next.clear();
            std::set_intersection(candidates.begin(), candidates.end(), adj[pick].begin(), adj[pick].end(),
                                  std::back_inserter(next));
            candidates.swap(next);
        }
        if (clique.size() > best.size()) best = clique;
    }
    std::sort(best.begin(), best.end());
    return best;
}

constexpr Color kUncolored = std::numeric_limits<Color>::max();

class DsaturSearch {
public:
    DsaturSearch(const Adjacency& adj, std::span<const Vertex> vertices, std::size_t n, std::uint64_t& nodes,
                 std::uint64_t budget, std::vector<Color>& color)
        : adj_(adj), vertices_(vertices.begin(), vertices.end()), n_(n), nodes_(nodes), budget_(budget), color_(color) {
        blocked_.assign(adj.size() * n_, 0);
        saturation_.assign(adj.size(), 0);
    }

    Decision solve(std::span<const Vertex> clique) {
        if (clique.size() > n_) return Decision::no;
        for (std::size_t i = 0; i < clique.size(); ++i) assign(clique[i], static_cast<Color>(i));
        used_ = clique.size();
        remaining_ = vertices_.size() - clique.size();
        const auto outcome = search();
        if (outcome == Outcome::found) return Decision::yes;
        return outcome == Outcome::exhausted ? Decision::no : Decision::unknown;
    }

private:
    enum class Outcome { found, exhausted, aborted };

    void assign(Vertex v, Color c) {
        color_[v] = c;
        for (Vertex w : adj_[v]) {
            if (blocked_[w * n_ + c]++ == 0) ++saturation_[w];
        }
    }

    void unassign(Vertex v) {
        const Color c = color_[v];
        color_[v] = kUncolored;
        for (Vertex w : adj_[v]) {
            if (--blocked_[w * n_ + c] == 0) --saturation_[w];
        }
    }

    Outcome search() {
        if (remaining_ == 0) return Outcome::found;
        if (++nodes_ > budget_) return Outcome::aborted;
        // Max saturation, then max degree, then lowest index.
        Vertex pick = 0;
        bool have = false;
        for (Vertex v : vertices_) {
            if (color_[v] != kUncolored) continue;
            if (!have || saturation_[v] > saturation_[pick] ||
                (saturation_[v] == saturation_[pick] && adj_[v].size() > adj_[pick].size())) {
                pick = v;
                have = true;
            }
        }
        if (saturation_[pick] >= n_) return Outcome::exhausted;
        const std::size_t limit = std::min(n_, used_ + 1);
        for (Color c = 0; c < limit; ++c) {
            if (blocked_[pick * n_ + c] != 0) continue;
            const std::size_t saved_used = used_;
            if (c == used_) ++used_;
            assign(pick, c);
            --remaining_;
            const auto outcome = search();
            if (outcome == Outcome::found) return outcome;  // keep the witness assigned
            ++remaining_;
            unassign(pick);
            used_ = saved_used;
            if (outcome != Outcome::exhausted) return outcome;
        }
        return Outcome::exhausted;
    }

    const Adjacency& adj_;
    std::vector<Vertex> vertices_;
    std::size_t n_;
    std::uint64_t& nodes_;
    std::uint64_t budget_;
    std::vector<Color>& color_;
    std::vector<std::uint32_t> blocked_;
    std::vector<std::uint32_t> saturation_;
    std::size_t used_ = 0;
    std::size_t remaining_ = 0;
};

std::vector<std::vector<Vertex>> component_vertex_lists(const LabeledMultigraph& g) {
    const auto comps = connected_components(g);
    std::vector<std::vector<Vertex>> lists(comps.count);
    for (Vertex v = 0; v < g.num_vertices(); ++v) lists[comps.component[v]].push_back(v);
    return lists;
}

}  // namespace

ColorabilityResult n_colorable(const LabeledMultigraph& g, std::size_t n, std::uint64_t budget) {
    ColorabilityResult result;
    if (g.num_vertices() == 0) {
        result.decision = Decision::yes;
        result.witness = VertexColoring({}, n);
        return result;
    }
    if (n == 0) {
        result.decision = Decision::no;
        return result;
    }
    const auto adj = simple_adjacency(g);
    std::vector<Color> color(g.num_vertices(), kUncolored);
    for (const auto& vertices : component_vertex_lists(g)) {
        const auto clique = greedy_clique(adj, vertices);
        result.clique_size = std::max(result.clique_size, clique.size());
        DsaturSearch search(adj, vertices, n, result.nodes, budget, color);
        const auto d = search.solve(clique);
        if (d != Decision::yes) {
            result.decision = d;
            return result;
        }
    }
    result.decision = Decision::yes;
    result.witness = VertexColoring(std::move(color), n);
    return result;
}

VertexColoring greedy_coloring(const LabeledMultigraph& g, std::span<const Vertex> order) {
    if (order.size() != g.num_vertices()) throw GraphError("greedy_coloring: order is not a permutation");
    const auto adj = simple_adjacency(g);
    std::vector<Color> color(g.num_vertices(), kUncolored);
    std::vector<char> taken;
    Color max_color = 0;
    for (Vertex v : order) {
        if (v >= g.num_vertices() || color[v] != kUncolored) throw GraphError("greedy_coloring: order is not a permutation");
        taken.assign(adj[v].size() + 1, 0);
        for (Vertex w : adj[v]) {
            if (color[w] != kUncolored && color[w] < taken.size()) taken[color[w]] = 1;
        }
        Color c = 0;
        while (taken[c]) ++c;
        color[v] = c;
        max_color = std::max(max_color, c);
    }
    const std::size_t k = g.num_vertices() == 0 ? 0 : max_color + 1;
    return {std::move(color), k};
}

VertexColoring greedy_coloring(const LabeledMultigraph& g) {
    std::vector<Vertex> order(g.num_vertices());
    std::iota(order.begin(), order.end(), 0u);
    return greedy_coloring(g, order);
}

std::vector<Vertex> greedy_clique(const LabeledMultigraph& g) {
    std::vector<Vertex> all(g.num_vertices());
    std::iota(all.begin(), all.end(), 0u);
    return greedy_clique(simple_adjacency(g), all);
}

ChromaticResult chromatic_number(const LabeledMultigraph& g, std::uint64_t budget) {
    ChromaticResult out;
    if (g.num_vertices() == 0) return out;
    // Largest-degree-first greedy for the initial upper bound.
    std::vector<Vertex> order(g.num_vertices());
    std::iota(order.begin(), order.end(), 0u);
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    out.best = greedy_coloring(g, order);
    out.upper = out.best.num_colors();
    out.lower = std::max<std::size_t>(1, greedy_clique(g).size());
    while (out.lower < out.upper) {
        const std::size_t mid = out.lower + (out.upper - out.lower - 1) / 2;
        auto r = n_colorable(g, mid, budget);
        if (r.decision == Decision::yes) {
            out.best = VertexColoring::from_values({r.witness->values().begin(), r.witness->values().end()});
            out.upper = out.best.num_colors();
        } else if (r.decision == Decision::no) {
            out.lower = mid + 1;
        } else {
            break;
        }
    }
    return out;
}

EnumerationResult for_each_proper_coloring(const LabeledMultigraph& g, std::size_t n, std::uint64_t cap,
                                           const std::function<void(std::span<const Color>)>& visit) {
    EnumerationResult result;
    const auto adj = simple_adjacency(g);
    const std::size_t nv = g.num_vertices();
    std::vector<Vertex> order;
    order.reserve(nv);
    std::vector<char> seen(nv, 0);
    for (Vertex s = 0; s < nv; ++s) {
        if (seen[s]) continue;
        seen[s] = 1;
        const std::size_t begin = order.size();
        order.push_back(s);
        for (std::size_t head = begin; head < order.size(); ++head) {
            for (Vertex w : adj[order[head]]) {
                if (!seen[w]) {
                    seen[w] = 1;
                    order.push_back(w);
                }
            }
        }
    }
    std::vector<Color> color(nv, kUncolored);
    bool stop = false;
    auto rec = [&](auto&& self, std::size_t depth) -> void {
        if (depth == nv) {
            if (result.count == cap) {
                result.capped = true;
                stop = true;
                return;
            }
            ++result.count;
            visit(color);
            return;
        }
        const Vertex v = order[depth];
        for (Color c = 0; c < n && !stop; ++c) {
            bool ok = true;
            for (Vertex w : adj[v]) {
                if (color[w] == c) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            color[v] = c;
            self(self, depth + 1);
            color[v] = kUncolored;
        }
    };
    rec(rec, 0);
    return result;
}

std::vector<std::vector<Color>> enumerate_proper_colorings(const LabeledMultigraph& g, std::size_t n,
                                                           std::uint64_t cap, bool* capped) {
    std::vector<std::vector<Color>> out;
    auto r = for_each_proper_coloring(g, n, cap, [&](std::span<const Color> c) { out.emplace_back(c.begin(), c.end()); });
    if (capped) *capped = r.capped;
    return out;
}

}  // namespace chromkit
