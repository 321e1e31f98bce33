#include "chromkit/shift.hpp"

#include <algorithm>
#include <stdexcept>

#include "chromkit/gadgets.hpp"

namespace chromkit {

std::size_t shift_degree(std::span<const std::uint32_t> x) {
    if (x.empty()) throw std::invalid_argument("shift_degree: empty set");
    return 1 + static_cast<std::size_t>(*std::min_element(x.begin(), x.end()));
}

FiniteSet shift_image(std::span<const std::uint32_t> x) {
    if (x.empty()) throw std::invalid_argument("shift_image: empty set");
    FiniteSet out(x.begin(), x.end());
    std::sort(out.begin(), out.end());
    out.erase(out.begin());
    return out;
}

std::optional<Vertex> ShiftFragment::index_of(const FiniteSet& x) const {
    if (auto it = index.find(x); it != index.end()) return it->second;
    return std::nullopt;
}

ShiftFragment make_fragment(std::vector<FiniteSet> sets) {
    ShiftFragment f;
    for (auto& s : sets) {
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw std::invalid_argument("fragment: repeated element");
        if (s.empty()) throw std::invalid_argument("fragment: empty set");
    }
    f.sets = std::move(sets);
    for (Vertex i = 0; i < f.sets.size(); ++i) {
        if (!f.index.emplace(f.sets[i], i).second) throw std::invalid_argument("fragment: duplicate set");
    }
    std::vector<Edge> edges;
    for (Vertex i = 0; i < f.sets.size(); ++i) {
        if (f.sets[i].size() < 2) continue;
        if (auto j = f.index_of(shift_image(f.sets[i]))) edges.push_back({i, *j, 0});
    }
    f.graph = LabeledMultigraph(f.sets.size(), std::move(edges));
    return f;
}

ShiftFragment build_fragment(std::size_t m, std::size_t k_lo, std::size_t k_hi) {
    if (k_lo < 1 || k_lo > k_hi || k_hi > m) throw std::invalid_argument("fragment: need 1 <= kmin <= kmax <= m");
    if (m > 24) throw std::invalid_argument("fragment: m > 24 is too large to enumerate");
    std::vector<FiniteSet> sets;
    for (std::size_t k = k_lo; k <= k_hi; ++k) {
        // Lexicographic k-combinations of {0..m-1}.
        FiniteSet c(k);
        for (std::uint32_t i = 0; i < k; ++i) c[i] = i;
        while (true) {
            sets.push_back(c);
            std::size_t i = k;
            while (i > 0 && c[i - 1] == m - k + i - 1) --i;
            if (i == 0) break;
            ++c[i - 1];
            for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
        }
    }
    auto f = make_fragment(std::move(sets));
    f.m = m;
    f.k_lo = k_lo;
    f.k_hi = k_hi;
    return f;
}

Vertex HPrimeGraph::vertex(Vertex x, std::size_t i) const {
    if (x + 1 >= offset.size() || offset[x] + i >= offset[x + 1]) throw std::out_of_range("hprime: (x, i) out of range");
    return static_cast<Vertex>(offset[x] + i);
}

std::pair<Vertex, std::size_t> HPrimeGraph::decode(Vertex v) const {
    if (offset.empty() || v >= offset.back()) throw std::out_of_range("hprime: vertex out of range");
    const auto it = std::upper_bound(offset.begin(), offset.end(), static_cast<std::size_t>(v));
    const auto x = static_cast<Vertex>(it - offset.begin() - 1);
    return {x, v - offset[x]};
}

HPrimeGraph build_hprime(const ShiftFragment& fragment, std::size_t n) {
    if (n < 3) throw std::invalid_argument("hprime: n must be >= 3");
    HPrimeGraph h;
    h.base = fragment;
    h.n = n;
    const std::size_t count = fragment.sets.size();
    h.offset.assign(count + 1, 0);
    h.base_degree.resize(count);
    h.interior.resize(count);
    for (Vertex x = 0; x < count; ++x) {
        h.base_degree[x] = shift_degree(fragment.sets[x]);
        h.offset[x + 1] = h.offset[x] + gadget_size(n, h.base_degree[x]);
    }
    std::vector<Edge> edges;
    for (Vertex x = 0; x < count; ++x) {
        const auto gadget = build_gadget(n, h.base_degree[x]);
        for (const auto& e : gadget.graph.edges()) {
            edges.push_back({h.vertex(x, e.u), h.vertex(x, e.v), kGadgetEdge});
        }
    }
    for (const auto& e : fragment.graph.edges()) {
        // Orient as x -> y = S(x); the larger set is the preimage.
        Vertex x = e.u, y = e.v;
        if (fragment.sets[x].size() < fragment.sets[y].size()) std::swap(x, y);
        const std::size_t min_x = fragment.sets[x].front();
        edges.push_back({h.vertex(x, h.base_degree[x] - 1), h.vertex(y, min_x), kShiftEdge});
    }
    for (Vertex x = 0; x < count; ++x) {
        const auto& s = fragment.sets[x];
        bool inside = s.size() >= 2 && fragment.index_of(shift_image(s)).has_value();
        for (std::uint32_t a = 0; inside && a < s.front(); ++a) {
            FiniteSet pre(s);
            pre.insert(pre.begin(), a);
            inside = fragment.index_of(pre).has_value();
        }
        h.interior[x] = inside;
    }
    h.graph = LabeledMultigraph(h.offset.back(), std::move(edges));
    return h;
}

VertexColoring lift_coloring(const HPrimeGraph& h, const VertexColoring& base_coloring) {
    const auto& base = h.base.graph;
    if (base_coloring.size() != base.num_vertices()) throw std::invalid_argument("lift: coloring size mismatch");
    if (!is_proper(base, base_coloring)) throw std::invalid_argument("lift: base coloring is not proper");
    for (auto c : base_coloring.values()) {
        if (c >= 3) throw std::invalid_argument("lift: base coloring must use colors {0,1,2}");
    }
    std::vector<Color> out(h.graph.num_vertices(), 0);
    for (Vertex x = 0; x < base.num_vertices(); ++x) {
        const std::size_t d = h.base_degree[x];
        const auto gadget = build_gadget(h.n, d);
        const Color cx = base_coloring[x];
        for (std::size_t i = 0; i < gadget.l; ++i) {
            out[h.vertex(x, i)] = i < d ? cx : static_cast<Color>((gadget.canonical_coloring[i] + cx) % h.n);
        }
    }
    return {std::move(out), h.n};
}

ProjectionReport project_coloring(const HPrimeGraph& h, const VertexColoring& coloring) {
    if (!is_proper(h.graph, coloring)) throw std::invalid_argument("project: coloring is not proper");
    const auto& base = h.base.graph;
    ProjectionReport report;
    std::vector<Color> c(base.num_vertices());
    report.tuple_constant.resize(base.num_vertices());
    for (Vertex x = 0; x < base.num_vertices(); ++x) {
        c[x] = coloring[h.vertex(x, 0)];
        bool constant = true;
        for (std::size_t i = 1; i < h.base_degree[x]; ++i) constant = constant && coloring[h.vertex(x, i)] == c[x];
        report.tuple_constant[x] = constant;
        report.all_tuple_constant = report.all_tuple_constant && constant;
    }
    for (const auto& e : base.edges()) {
        if (c[e.u] != c[e.v]) continue;
        report.proper_on_all = false;
        if (h.interior[e.u] && h.interior[e.v]) report.proper_on_interior = false;
    }
    report.coloring = VertexColoring(std::move(c), coloring.num_colors());
    return report;
}

TupleConstancyReport enumerate_tuple_constancy(const HPrimeGraph& h, std::uint64_t cap_per_component) {
    const auto comps = connected_components(h.graph);
    std::vector<std::vector<Vertex>> members(comps.count);
    for (Vertex v = 0; v < h.graph.num_vertices(); ++v) members[comps.component[v]].push_back(v);
    TupleConstancyReport report;
    report.components = comps.count;
    for (const auto& vs : members) {
        const auto sub = induced_subgraph(h.graph, vs);
        // Local index of (x, i), grouped per base vertex present in the component.
        std::map<Vertex, std::vector<Vertex>> tuples;
        for (Vertex local = 0; local < sub.origin.size(); ++local) {
            const auto [x, i] = h.decode(sub.origin[local]);
            if (i < h.base_degree[x]) tuples[x].push_back(local);
        }
        const auto result = for_each_proper_coloring(sub.graph, h.n, cap_per_component, [&](std::span<const Color> c) {
            ++report.colorings;
            for (const auto& [x, locals] : tuples) {
                const bool constant = std::all_of(locals.begin(), locals.end(),
                                                  [&](Vertex l) { return c[l] == c[locals.front()]; });
                if (!constant) {
                    ++report.non_constant;
                    return;
                }
            }
        });
        report.complete = report.complete && !result.capped;
    }
    return report;
}

Json fragment_to_json(const ShiftFragment& f) {
    Json j = graph_to_json(f.graph);
    Json meta;
    meta["m"] = f.m;
    meta["k_lo"] = f.k_lo;
    meta["k_hi"] = f.k_hi;
    meta["sets"] = f.sets;
    j["fragment"] = std::move(meta);
    return j;
}

ShiftFragment fragment_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("fragment") || !j["fragment"].contains("sets")) {
        throw FormatError("fragment: missing \"fragment.sets\"");
    }
    const auto& meta = j["fragment"];
    std::vector<FiniteSet> sets;
    for (const auto& s : meta["sets"]) sets.push_back(uint_array_from_json(s, "fragment set"));
    ShiftFragment f;
    try {
        f = make_fragment(std::move(sets));
    } catch (const std::invalid_argument& err) {
        throw FormatError(err.what());
    }
    f.m = meta.value("m", std::size_t{0});
    f.k_lo = meta.value("k_lo", std::size_t{0});
    f.k_hi = meta.value("k_hi", std::size_t{0});
    if (j.contains("edges") && graph_from_json(j) != f.graph) {
        throw FormatError("fragment: stored edges disagree with the set family");
    }
    return f;
}

Json hprime_to_json(const HPrimeGraph& h) {
    Json j = graph_to_json(h.graph);
    Json meta;
    meta["n"] = h.n;
    meta["offsets"] = h.offset;
    meta["base_degree"] = h.base_degree;
    std::vector<int> interior(h.interior.begin(), h.interior.end());
    meta["interior"] = interior;
    meta["fragment"] = fragment_to_json(h.base)["fragment"];
    j["hprime"] = std::move(meta);
    return j;
}

}  // namespace chromkit
