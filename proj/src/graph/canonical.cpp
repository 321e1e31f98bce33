#include "chromkit/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace chromkit {

namespace {

using Ranks = std::vector<std::uint32_t>;
using Tokens = std::vector<std::uint32_t>;

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0u); }
    std::uint32_t find(std::uint32_t x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    void unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<std::uint32_t> parent_;
};

// Dense ranks of `keys`: equal keys share a rank, rank order follows key order.
template <typename Key>
std::size_t rank_by_key(const std::vector<Key>& keys, Ranks& out) {
    const std::size_t n = keys.size();
    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return keys[a] < keys[b]; });
    out.assign(n, 0);
    std::size_t distinct = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (i > 0 && keys[order[i]] != keys[order[i - 1]]) ++distinct;
        out[order[i]] = static_cast<std::uint32_t>(distinct);
    }
    return n == 0 ? 0 : distinct + 1;
}

class Canonizer {
public:
    explicit Canonizer(const RootedBall& ball) : ball_(ball), g_(ball.graph), n_(g_.num_vertices()) {}

    Tokens run() {
        Ranks initial;
        initial_partition(initial);
        seed_twin_automorphisms(initial);
        search(initial);
        return best_;
    }

private:
    void initial_partition(Ranks& out) const {
        std::vector<std::size_t> dist(n_, std::numeric_limits<std::size_t>::max());
        std::vector<Vertex> queue{ball_.root};
        dist[ball_.root] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            for (const auto& inc : g_.incident(queue[head])) {
                if (dist[inc.neighbor] == std::numeric_limits<std::size_t>::max()) {
                    dist[inc.neighbor] = dist[queue[head]] + 1;
                    queue.push_back(inc.neighbor);
                }
            }
        }
        std::vector<std::pair<std::size_t, Color>> keys(n_);
        for (Vertex v = 0; v < n_; ++v) {
            keys[v] = {dist[v], ball_.vertex_colors ? (*ball_.vertex_colors)[v] : 0};
        }
        rank_by_key(keys, out);
    }

    // Non-adjacent twins (same initial cell, same labeled neighbor multiset)
    // are swapped by an automorphism; consecutive transpositions generate it.
    void seed_twin_automorphisms(const Ranks& initial) {
        std::map<std::pair<std::uint32_t, std::vector<std::pair<Vertex, Label>>>, std::vector<Vertex>> classes;
        for (Vertex v = 0; v < n_; ++v) {
            std::vector<std::pair<Vertex, Label>> nbrs;
            for (const auto& inc : g_.incident(v)) nbrs.emplace_back(inc.neighbor, g_.edge(inc.edge).label);
            std::sort(nbrs.begin(), nbrs.end());
            classes[{initial[v], std::move(nbrs)}].push_back(v);
        }
        for (const auto& [key, members] : classes) {
            for (std::size_t i = 1; i < members.size(); ++i) {
                std::vector<Vertex> gamma(n_);
                std::iota(gamma.begin(), gamma.end(), 0u);
                std::swap(gamma[members[i - 1]], gamma[members[i]]);
                automorphisms_.push_back(std::move(gamma));
            }
        }
    }

    std::size_t refine(Ranks& ranks) const {
        using Signature = std::pair<std::uint32_t, std::vector<std::pair<std::uint32_t, Label>>>;
        std::size_t cells = 1 + *std::max_element(ranks.begin(), ranks.end());
        std::vector<Signature> sig(n_);
        while (true) {
            for (Vertex v = 0; v < n_; ++v) {
                auto& s = sig[v];
                s.first = ranks[v];
                s.second.clear();
                for (const auto& inc : g_.incident(v)) s.second.emplace_back(ranks[inc.neighbor], g_.edge(inc.edge).label);
                std::sort(s.second.begin(), s.second.end());
            }
            const std::size_t next = rank_by_key(sig, ranks);
            if (next == cells) return cells;
            cells = next;
        }
    }

    Tokens encode(const Ranks& pos) const {
        Tokens t;
        t.reserve(2 + n_ + 3 * g_.num_edges());
        t.push_back(static_cast<std::uint32_t>(n_));
        std::vector<Color> by_pos(n_, 0);
        if (ball_.vertex_colors) {
            for (Vertex v = 0; v < n_; ++v) by_pos[pos[v]] = (*ball_.vertex_colors)[v];
        }
        t.insert(t.end(), by_pos.begin(), by_pos.end());
        std::vector<Edge> edges;
        edges.reserve(g_.num_edges());
        for (const auto& e : g_.edges()) {
            auto a = pos[e.u], b = pos[e.v];
            if (a > b) std::swap(a, b);
            edges.push_back({a, b, e.label});
        }
        std::sort(edges.begin(), edges.end());
        t.push_back(static_cast<std::uint32_t>(edges.size()));
        for (const auto& e : edges) {
            t.push_back(e.u);
            t.push_back(e.v);
            t.push_back(e.label);
        }
        return t;
    }

    void record_automorphism(const Ranks& from, const Ranks& to) {
        // Vertex at position p in `from` maps to the vertex at position p in `to`.
        std::vector<Vertex> at(n_);
        for (Vertex v = 0; v < n_; ++v) at[to[v]] = v;
        std::vector<Vertex> gamma(n_);
        bool identity = true;
        for (Vertex v = 0; v < n_; ++v) {
            gamma[v] = at[from[v]];
            identity = identity && gamma[v] == v;
        }
        if (!identity) automorphisms_.push_back(std::move(gamma));
    }

    void leaf(const Ranks& pos) {
        Tokens t = encode(pos);
        if (first_.empty()) {
            first_ = best_ = t;
            first_pos_ = best_pos_ = pos;
            return;
        }
        if (t == first_) {
            record_automorphism(first_pos_, pos);
        } else if (t == best_) {
            record_automorphism(best_pos_, pos);
        } else if (t < best_) {
            best_ = std::move(t);
            best_pos_ = pos;
        }
    }

    bool fixes_prefix(const std::vector<Vertex>& gamma) const {
        return std::all_of(prefix_.begin(), prefix_.end(), [&](Vertex v) { return gamma[v] == v; });
    }

    bool same_orbit_as_any(Vertex v, const std::vector<Vertex>& explored) const {
        UnionFind orbits(n_);
        for (const auto& gamma : automorphisms_) {
            if (!fixes_prefix(gamma)) continue;
            for (Vertex x = 0; x < n_; ++x) orbits.unite(x, gamma[x]);
        }
        const auto root = orbits.find(v);
        return std::any_of(explored.begin(), explored.end(), [&](Vertex u) { return orbits.find(u) == root; });
    }

    void search(Ranks ranks) {
        const std::size_t cells = refine(ranks);
        if (cells == n_) {
            leaf(ranks);
            return;
        }
        std::vector<std::uint32_t> size(cells, 0);
        for (auto r : ranks) ++size[r];
        std::uint32_t target = 0;
        while (size[target] < 2) ++target;
        std::vector<Vertex> members;
        for (Vertex v = 0; v < n_; ++v) {
            if (ranks[v] == target) members.push_back(v);
        }
        std::vector<Vertex> explored;
        for (Vertex v : members) {
            if (!explored.empty() && same_orbit_as_any(v, explored)) continue;
            Ranks child = ranks;
            for (Vertex w = 0; w < n_; ++w) {
                if (ranks[w] > target || (ranks[w] == target && w != v)) ++child[w];
            }
            prefix_.push_back(v);
            search(std::move(child));
            prefix_.pop_back();
            explored.push_back(v);
        }
    }

    const RootedBall& ball_;
    const LabeledMultigraph& g_;
    std::size_t n_;
    std::vector<Vertex> prefix_;
    std::vector<std::vector<Vertex>> automorphisms_;
    Tokens first_, best_;
    Ranks first_pos_, best_pos_;
};

}  // namespace

CanonicalCode canonical_code(const RootedBall& ball) {
    const auto n = ball.graph.num_vertices();
    if (n == 0) throw GraphError("canonical_code: empty ball");
    if (ball.root != 0 && ball.root >= n) throw GraphError("canonical_code: root out of range");
    if (ball.vertex_colors && ball.vertex_colors->size() != n) {
        throw GraphError("canonical_code: color assignment size mismatch");
    }
    const Tokens t = Canonizer(ball).run();
    std::ostringstream out;
    out << 'r' << ball.depth << ";n" << n << ";c";
    if (ball.vertex_colors) {
        for (std::size_t i = 0; i < n; ++i) out << (i ? "," : "") << t[1 + i];
    } else {
        out << '-';
    }
    out << ";e";
    const std::size_t m = t[1 + n];
    for (std::size_t i = 0; i < m; ++i) {
        const auto* e = &t[2 + n + 3 * i];
        out << (i ? "," : "") << e[0] << '-' << e[1] << ':' << e[2];
    }
    return out.str();
}

DecodedBall decode_code(const CanonicalCode& code) {
    auto fail = [&] { return GraphError("decode_code: malformed code '" + code + "'"); };
    DecodedBall out;
    std::istringstream in(code);
    std::string part;
    std::vector<std::string> parts;
    while (std::getline(in, part, ';')) parts.push_back(part);
    if (parts.size() != 4 || parts[0].empty() || parts[0][0] != 'r' || parts[1].empty() || parts[1][0] != 'n' ||
        parts[2].empty() || parts[2][0] != 'c' || parts[3].empty() || parts[3][0] != 'e') {
        throw fail();
    }
    try {
        out.depth = std::stoul(parts[0].substr(1));
        out.num_vertices = std::stoul(parts[1].substr(1));
        const std::string colors = parts[2].substr(1);
        if (colors != "-") {
            std::vector<Color> c;
            std::istringstream cs(colors);
            std::string tok;
            while (std::getline(cs, tok, ',')) c.push_back(static_cast<Color>(std::stoul(tok)));
            if (c.size() != out.num_vertices) throw fail();
            out.colors = std::move(c);
        }
        std::istringstream es(parts[3].substr(1));
        std::string tok;
        while (std::getline(es, tok, ',')) {
            const auto dash = tok.find('-');
            const auto colon = tok.find(':');
            if (dash == std::string::npos || colon == std::string::npos) throw fail();
            out.edges.push_back({static_cast<Vertex>(std::stoul(tok.substr(0, dash))),
                                 static_cast<Vertex>(std::stoul(tok.substr(dash + 1, colon - dash - 1))),
                                 static_cast<Label>(std::stoul(tok.substr(colon + 1)))});
        }
    } catch (const std::logic_error&) {
        throw fail();
    }
    return out;
}

}  // namespace chromkit
