#include "chromkit/gadgets.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace chromkit {

std::size_t gadget_size(std::size_t n, std::size_t d) {
    if (d == 0) throw std::invalid_argument("gadget: d must be >= 1");
    return d + (d - 1) * (n - 1);
}

Gadget build_gadget(std::size_t n, std::size_t d) {
    if (n < 3) throw std::invalid_argument("gadget: n must be >= 3");
    if (d < 1) throw std::invalid_argument("gadget: d must be >= 1");
    Gadget gd;
    gd.n = n;
    gd.d = d;
    gd.l = gadget_size(n, d);
    std::vector<Edge> edges;
    std::vector<Color> colors(gd.l, 0);
    const std::size_t k = n - 1;
    for (std::size_t i = 0; i + 1 < d; ++i) {
        const auto base = static_cast<Vertex>(d + i * k);
        for (Vertex a = 0; a < k; ++a) {
            colors[base + a] = a + 1;
            for (Vertex b = a + 1; b < k; ++b) edges.push_back({base + a, base + b, 0});
            edges.push_back({static_cast<Vertex>(i), base + a, 0});
            edges.push_back({static_cast<Vertex>(i + 1), base + a, 0});
        }
    }
    gd.graph = LabeledMultigraph(gd.l, std::move(edges));
    gd.canonical_coloring = VertexColoring(std::move(colors), n);
    return gd;
}

GadgetReport verify_gadget(const Gadget& gadget, std::uint64_t cap) {
    GadgetReport report;
    const auto& g = gadget.graph;
    const std::size_t d = std::min(gadget.d, g.num_vertices());
    report.size_matches = gadget.d >= 1 && gadget.n >= 1 && gadget.l == gadget_size(gadget.n, gadget.d) &&
                          g.num_vertices() == gadget.l;

    const auto& cc = gadget.canonical_coloring;
    report.canonical_proper = cc.size() == g.num_vertices() && cc.num_colors() <= gadget.n && is_proper(g, cc).proper;
    for (std::size_t v = 0; v < d && report.canonical_proper; ++v) report.canonical_proper = cc[v] == 0;

    report.max_degree = g.max_degree();
    report.degree_bound = report.max_degree <= 2 * (gadget.n - 1);

    bool forcing = true;
    std::set<Color> tuple_values;
    const auto enumeration = for_each_proper_coloring(g, gadget.n, cap, [&](std::span<const Color> c) {
        const bool constant = std::all_of(c.begin(), c.begin() + d, [&](Color x) { return x == c[0]; });
        if (constant) {
            if (d > 0) tuple_values.insert(c[0]);
        } else if (forcing) {
            forcing = false;
            report.counterexample = std::vector<Color>(c.begin(), c.end());
        }
    });
    report.proper_colorings = enumeration.count;
    report.enumeration_complete = !enumeration.capped;
    report.forcing = forcing;
    report.distinct_tuple_values = tuple_values.size();
    return report;
}

}  // namespace chromkit
