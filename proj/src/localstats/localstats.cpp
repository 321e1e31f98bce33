#include "chromkit/localstats.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>

#include "chromkit/rng.hpp"

namespace chromkit {

double BallStatistic::probability(const CanonicalCode& code) const {
    return exact_probability(code).to_double();
}

Rational BallStatistic::exact_probability(const CanonicalCode& code) const {
    if (total == 0) return {};
    auto it = counts.find(code);
    return {static_cast<std::int64_t>(it == counts.end() ? 0 : it->second), static_cast<std::int64_t>(total)};
}

namespace {

void check_beta(const LabeledMultigraph& g, const VertexColoring& beta) {
    if (beta.size() != g.num_vertices()) {
        throw std::invalid_argument("ball_statistic: assignment covers " + std::to_string(beta.size()) +
                                    " vertices, graph has " + std::to_string(g.num_vertices()));
    }
}

// Codes for the given roots, computed in contiguous chunks on worker threads.
std::vector<CanonicalCode> codes_for(const LabeledMultigraph& g, const VertexColoring& beta, std::size_t r,
                                     std::span<const Vertex> roots) {
    std::vector<CanonicalCode> out(roots.size());
    auto work = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) out[i] = canonical_code(rooted_ball(g, roots[i], r, beta.values()));
    };
    const std::size_t workers =
        std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(1, roots.size() / 256));
    if (workers == 1) {
        work(0, roots.size());
        return out;
    }
    std::vector<std::jthread> pool;
    const std::size_t chunk = (roots.size() + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const auto lo = std::min(roots.size(), w * chunk);
        const auto hi = std::min(roots.size(), lo + chunk);
        pool.emplace_back(work, lo, hi);
    }
    pool.clear();  // joins
    return out;
}

BallStatistic tally(std::vector<CanonicalCode> codes, std::size_t r, std::size_t s) {
    BallStatistic stat;
    stat.r = r;
    stat.s = s;
    for (auto& c : codes) ++stat.counts[std::move(c)];
    stat.total = codes.size();
    return stat;
}

}  // namespace

BallStatistic ball_statistic(const LabeledMultigraph& g, const VertexColoring& beta, std::size_t r) {
    check_beta(g, beta);
    std::vector<Vertex> roots(g.num_vertices());
    for (Vertex v = 0; v < roots.size(); ++v) roots[v] = v;
    return tally(codes_for(g, beta, r, roots), r, beta.num_colors());
}

BallStatistic sample_ball_statistic(const LabeledMultigraph& g, const VertexColoring& beta, std::size_t r,
                                    std::uint64_t trials, std::uint64_t seed) {
    check_beta(g, beta);
    if (g.num_vertices() == 0) throw std::invalid_argument("sample_ball_statistic: empty graph");
    if (trials == 0) throw std::invalid_argument("sample_ball_statistic: trials must be positive");
    Rng rng(seed);
    std::vector<Vertex> roots(trials);
    for (auto& v : roots) v = static_cast<Vertex>(rng.below(g.num_vertices()));
    auto stat = tally(codes_for(g, beta, r, roots), r, beta.num_colors());
    stat.mode = SampleMode::monte_carlo;
    stat.seed = seed;
    return stat;
}

BallStatistic point_mass(const CanonicalCode& code, std::size_t r, std::size_t s) {
    BallStatistic stat;
    stat.r = r;
    stat.s = s;
    stat.counts[code] = 1;
    stat.total = 1;
    return stat;
}

Rational tv_distance_exact(const BallStatistic& a, const BallStatistic& b) {
    if (a.r != b.r || a.s != b.s) {
        throw std::invalid_argument("tv_distance: statistics differ in (r, s): (" + std::to_string(a.r) + ", " +
                                    std::to_string(a.s) + ") vs (" + std::to_string(b.r) + ", " + std::to_string(b.s) +
                                    ")");
    }
    if (a.total == 0 || b.total == 0) throw std::invalid_argument("tv_distance: empty statistic");
    // 1/2 sum |ca/ta - cb/tb| = sum |ca*tb - cb*ta| / (2 ta tb)
    unsigned __int128 acc = 0;
    auto ia = a.counts.begin();
    auto ib = b.counts.begin();
    auto term = [&](std::uint64_t ca, std::uint64_t cb) {
        const auto x = static_cast<unsigned __int128>(ca) * b.total;
        const auto y = static_cast<unsigned __int128>(cb) * a.total;
        acc += x > y ? x - y : y - x;
    };
    while (ia != a.counts.end() || ib != b.counts.end()) {
        if (ib == b.counts.end() || (ia != a.counts.end() && ia->first < ib->first)) {
            term(ia++->second, 0);
        } else if (ia == a.counts.end() || ib->first < ia->first) {
            term(0, ib++->second);
        } else {
            term(ia++->second, ib++->second);
        }
    }
    const auto den = static_cast<unsigned __int128>(2) * a.total * b.total;
    constexpr auto kMax = static_cast<unsigned __int128>(std::numeric_limits<std::int64_t>::max());
    if (den > kMax) throw std::overflow_error("tv_distance: totals too large for an exact fraction");
    return {static_cast<std::int64_t>(acc), static_cast<std::int64_t>(den)};
}

double tv_distance(const BallStatistic& a, const BallStatistic& b) { return tv_distance_exact(a, b).to_double(); }

CanonicalCode tree_ball_reference(std::size_t d, std::size_t r, Color color) {
    if (d == 0) throw std::invalid_argument("tree_ball_reference: d must be positive");
    std::vector<Edge> edges;
    std::vector<Vertex> frontier{0};
    Vertex next = 1;
    for (std::size_t depth = 0; depth < r; ++depth) {
        std::vector<Vertex> grown;
        for (Vertex v : frontier) {
            const std::size_t children = depth == 0 ? d : d - 1;
            for (std::size_t c = 0; c < children; ++c) {
                edges.push_back({v, next, 0});
                grown.push_back(next++);
            }
        }
        frontier = std::move(grown);
    }
    RootedBall ball;
    ball.graph = LabeledMultigraph(next, std::move(edges));
    ball.depth = r;
    ball.vertex_colors = std::vector<Color>(next, color);
    ball.origin.resize(next);
    for (Vertex v = 0; v < next; ++v) ball.origin[v] = v;
    return canonical_code(ball);
}

VertexColoring encode_subsets_as_assignment(std::size_t num_vertices, std::span<const Vertex> b,
                                            std::span<const Vertex> b_prime) {
    std::vector<char> in_b(num_vertices, 0), in_bp(num_vertices, 0);
    for (Vertex v : b) {
        if (v >= num_vertices) throw std::invalid_argument("encode_subsets: vertex out of range in B");
        in_b[v] = 1;
    }
    for (Vertex v : b_prime) {
        if (v >= num_vertices) throw std::invalid_argument("encode_subsets: vertex out of range in B'");
        in_bp[v] = 1;
    }
    std::vector<Color> cells(num_vertices);
    for (std::size_t v = 0; v < num_vertices; ++v) {
        cells[v] = in_b[v] ? (in_bp[v] ? kBoth : kOnlyB) : (in_bp[v] ? kOnlyBPrime : kNeither);
    }
    return {std::move(cells), 4};
}

namespace {

bool in_b(Color c) { return c == kOnlyB || c == kBoth; }
bool in_b_prime(Color c) { return c == kOnlyBPrime || c == kBoth; }

void check_cells(const BallStatistic& stat) {
    if (stat.s != 4) throw std::invalid_argument("statistic is not over a four-cell subset encoding");
    if (stat.total == 0) throw std::invalid_argument("empty statistic");
}

template <class Pred>
Rational root_mass(const BallStatistic& stat, Pred pred) {
    check_cells(stat);
    std::uint64_t mass = 0;
    for (const auto& [code, count] : stat.counts) {
        const auto ball = decode_code(code);
        if (!ball.colors || ball.colors->empty()) throw std::invalid_argument("statistic codes carry no colors");
        if (pred(ball)) mass += count;
    }
    return {static_cast<std::int64_t>(mass), static_cast<std::int64_t>(stat.total)};
}

}  // namespace

Rational b_density_from_statistic(const BallStatistic& stat) {
    return root_mass(stat, [](const DecodedBall& ball) { return in_b((*ball.colors)[0]); });
}

Rational b_prime_density_from_statistic(const BallStatistic& stat) {
    return root_mass(stat, [](const DecodedBall& ball) { return in_b_prime((*ball.colors)[0]); });
}

std::uint64_t edge_witness_count(const LabeledMultigraph& g, const VertexColoring& cells, Label label) {
    if (cells.size() != g.num_vertices()) throw std::invalid_argument("edge_witness_count: assignment size mismatch");
    std::uint64_t count = 0;
    for (Vertex x = 0; x < g.num_vertices(); ++x) {
        if (!in_b(cells[x])) continue;
        const auto inc = g.incident(x);
        const bool witnessed = std::any_of(inc.begin(), inc.end(), [&](const Incidence& i) {
            return g.edge(i.edge).label == label && in_b_prime(cells[i.neighbor]);
        });
        count += witnessed;
    }
    return count;
}

Rational edge_witness_from_statistic(const BallStatistic& stat, Label label) {
    if (stat.r < 1) throw std::invalid_argument("edge_witness_from_statistic: needs r >= 1");
    return root_mass(stat, [label](const DecodedBall& ball) {
        const auto& colors = *ball.colors;
        if (!in_b(colors[0])) return false;
        return std::any_of(ball.edges.begin(), ball.edges.end(), [&](const Edge& e) {
            // Root is canonical vertex 0, so it is always the smaller endpoint.
            return e.u == 0 && e.label == label && in_b_prime(colors[e.v]);
        });
    });
}

Json statistic_to_json(const BallStatistic& stat) {
    Json j;
    j["r"] = stat.r;
    j["s"] = stat.s;
    j["mode"] = stat.mode == SampleMode::exact ? "exact" : "monte_carlo";
    if (stat.mode == SampleMode::monte_carlo) j["seed"] = stat.seed;
    j["total"] = stat.total;
    Json counts = Json::object();
    Json dist = Json::object();
    for (const auto& [code, c] : stat.counts) {
        counts[code] = c;
        dist[code] = static_cast<double>(c) / static_cast<double>(stat.total);
    }
    j["counts"] = std::move(counts);
    j["distribution"] = std::move(dist);
    return j;
}

BallStatistic statistic_from_json(const Json& j) {
    try {
        BallStatistic stat;
        stat.r = j.at("r").get<std::size_t>();
        stat.s = j.at("s").get<std::size_t>();
        const auto mode = j.at("mode").get<std::string>();
        if (mode == "exact") {
            stat.mode = SampleMode::exact;
        } else if (mode == "monte_carlo") {
            stat.mode = SampleMode::monte_carlo;
            stat.seed = j.at("seed").get<std::uint64_t>();
        } else {
            throw FormatError("statistic: unknown mode \"" + mode + "\"");
        }
        stat.total = j.at("total").get<std::uint64_t>();
        std::uint64_t sum = 0;
        for (const auto& [code, c] : j.at("counts").items()) {
            stat.counts[code] = c.get<std::uint64_t>();
            sum += stat.counts[code];
        }
        if (sum != stat.total) throw FormatError("statistic: counts do not sum to total");
        return stat;
    } catch (const Json::exception& e) {
        throw FormatError(std::string("statistic: ") + e.what());
    }
}

}  // namespace chromkit
