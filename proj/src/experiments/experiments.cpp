#include "chromkit/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "chromkit/gadgets.hpp"
#include "chromkit/localstats.hpp"
#include "chromkit/product.hpp"
#include "chromkit/rng.hpp"
#include "chromkit/rrg.hpp"
#include "chromkit/shift.hpp"

namespace chromkit {

bool ExperimentReport::passed() const {
    return std::all_of(assertions.begin(), assertions.end(), [](const Assertion& a) { return a.passed; });
}

Json ExperimentReport::to_json() const {
    Json j;
    j["experiment"] = experiment;
    j["params"] = params;
    j["passed"] = passed();
    Json list = Json::array();
    for (const auto& a : assertions) list.push_back({{"name", a.name}, {"passed", a.passed}, {"measured", a.measured}});
    j["assertions"] = std::move(list);
    j["observations"] = observations;
    j["artifacts"] = artifacts;
    return j;
}

Json spectral_report_to_json(const SpectralReport& r) {
    return {{"d", r.d},
            {"num_vertices", r.num_vertices},
            {"lambda", r.lambda},
            {"top", r.top},
            {"bottom", r.bottom},
            {"residual", r.residual},
            {"method", to_string(r.method)},
            {"iterations", r.iterations},
            {"disconnected", r.disconnected}};
}

Json certificate_to_json(const MixingCertificate& c) {
    Json classes = Json::array();
    for (std::size_t i = 0; i < c.labels.size(); ++i) {
        Json entry = spectral_report_to_json(c.reports[i]);
        entry["label"] = c.labels[i];
        classes.push_back(std::move(entry));
    }
    return {{"n", c.n},
            {"d", c.d},
            {"num_vertices", c.num_vertices},
            {"threshold", c.threshold.str()},
            {"holds", c.holds},
            {"classes", std::move(classes)}};
}

namespace {

// First-fit along a BFS order whose component roots are visited in `roots` order.
VertexColoring bfs_greedy(const LabeledMultigraph& g, std::span<const Vertex> roots) {
    std::vector<char> seen(g.num_vertices(), 0);
    std::vector<Vertex> order;
    for (Vertex r : roots) {
        if (seen[r]) continue;
        seen[r] = 1;
        std::size_t head = order.size();
        order.push_back(r);
        for (; head < order.size(); ++head) {
            for (const auto& inc : g.incident(order[head])) {
                if (!seen[inc.neighbor]) {
                    seen[inc.neighbor] = 1;
                    order.push_back(inc.neighbor);
                }
            }
        }
    }
    return greedy_coloring(g, order);
}

}  // namespace

RoundtripResult check_roundtrip(const ShiftFragment& f, const RoundtripOptions& opts) {
    const auto h = build_hprime(f, opts.n);
    const auto nb = f.graph.num_vertices();
    Rng rng(opts.seed);

    std::vector<VertexColoring> base_colorings;
    std::vector<Vertex> identity(nb);
    std::iota(identity.begin(), identity.end(), 0u);
    base_colorings.push_back(greedy_coloring(f.graph, identity));
    for (std::size_t t = 0; t < opts.orders; ++t) {
        auto roots = identity;
        rng.shuffle(std::span<Vertex>(roots));
        base_colorings.push_back(bfs_greedy(f.graph, roots));
    }
    bool two_colors = true, lift_proper = true, identity_ok = true;
    for (const auto& c : base_colorings) {
        two_colors = two_colors && c.num_colors() <= 2;
        const auto lifted = lift_coloring(h, c);
        const bool proper = is_proper(h.graph, lifted).proper;
        lift_proper = lift_proper && proper;
        if (!proper) continue;
        const auto proj = project_coloring(h, lifted);
        identity_ok = identity_ok && proj.all_tuple_constant &&
                      std::equal(proj.coloring.values().begin(), proj.coloring.values().end(), c.values().begin(),
                                 c.values().end());
    }
    RoundtripResult out;
    out.measured = {{"base_vertices", nb},
                    {"hprime_vertices", h.graph.num_vertices()},
                    {"colorings_lifted", base_colorings.size()},
                    {"greedy_two_colors", two_colors},
                    {"lift_proper", lift_proper},
                    {"project_lift_identity", identity_ok}};
    out.passed = two_colors && lift_proper && identity_ok;
    if (nb <= opts.enumerate_max_base) {
        const auto tc = enumerate_tuple_constancy(h, opts.cap);
        const auto dec = n_colorable(h.graph, opts.n, opts.budget);
        bool solver_ok = dec.decision == Decision::yes;
        if (dec.witness) solver_ok = project_coloring(h, *dec.witness).all_tuple_constant;
        out.measured["enumerated_colorings"] = tc.colorings;
        out.measured["non_constant"] = tc.non_constant;
        out.measured["enumeration_complete"] = tc.complete;
        out.measured["solver_witness_tuple_constant"] = solver_ok;
        out.passed = out.passed && tc.complete && tc.non_constant == 0 && solver_ok;
    }
    return out;
}

namespace {

// Reads experiment parameters with defaults and records the effective values.
class Params {
public:
    Params(const Json& given, std::string experiment) : given_(given), experiment_(std::move(experiment)) {}

    std::uint64_t uint(const std::string& key, std::uint64_t def, std::uint64_t lo = 0,
                       std::uint64_t hi = std::numeric_limits<std::uint64_t>::max()) {
        const std::uint64_t v = given_.contains(key) ? as_uint(given_[key], key) : def;
        check_range(key, v, lo, hi);
        used_[key] = v;
        return v;
    }

    std::vector<std::uint64_t> uints(const std::string& key, std::vector<std::uint64_t> def, std::uint64_t lo = 0,
                                     std::uint64_t hi = std::numeric_limits<std::uint64_t>::max()) {
        std::vector<std::uint64_t> v = std::move(def);
        if (given_.contains(key)) {
            const auto& j = given_[key];
            if (!j.is_array() || j.empty()) fail("\"" + key + "\" must be a non-empty list of integers");
            v.clear();
            for (const auto& x : j) v.push_back(as_uint(x, key));
        }
        for (auto x : v) check_range(key, x, lo, hi);
        used_[key] = v;
        return v;
    }

    double real(const std::string& key, double def, double lo, double hi) {
        double v = def;
        if (given_.contains(key)) {
            if (!given_[key].is_number()) fail("\"" + key + "\" must be a number");
            v = given_[key].get<double>();
        }
        if (!(v >= lo && v <= hi)) fail("\"" + key + "\" out of range");
        used_[key] = v;
        return v;
    }

    std::string choice(const std::string& key, const std::string& def, const std::vector<std::string>& options) {
        std::string v = def;
        if (given_.contains(key)) {
            if (!given_[key].is_string()) fail("\"" + key + "\" must be a string");
            v = given_[key].get<std::string>();
        }
        if (std::find(options.begin(), options.end(), v) == options.end()) fail("\"" + key + "\" has invalid value " + v);
        used_[key] = v;
        return v;
    }

    /// Rejects keys that were never read.
    const Json& finish() {
        for (const auto& [key, value] : given_.items()) {
            if (!used_.contains(key)) fail("unknown parameter \"" + key + "\"");
        }
        return used_;
    }

    [[noreturn]] void fail(const std::string& msg) const { throw ConfigError(experiment_ + ": " + msg); }

private:
    std::uint64_t as_uint(const Json& j, const std::string& key) const {
        if (!j.is_number_unsigned()) fail("\"" + key + "\" must be a non-negative integer");
        return j.get<std::uint64_t>();
    }
    void check_range(const std::string& key, std::uint64_t v, std::uint64_t lo, std::uint64_t hi) const {
        if (v < lo || v > hi) {
            fail("\"" + key + "\" = " + std::to_string(v) + " outside [" + std::to_string(lo) + ", " +
                 std::to_string(hi) + "]");
        }
    }

    Json given_;
    std::string experiment_;
    Json used_ = Json::object();
};

// Flat numeric table written as series.csv.
struct Series {
    std::vector<std::string> columns;
    std::vector<std::vector<Json>> rows;

    void add(std::vector<Json> row) { rows.push_back(std::move(row)); }

    std::string csv() const {
        std::ostringstream out;
        for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
        out << '\n';
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                out << (i ? "," : "") << (row[i].is_string() ? row[i].get<std::string>() : row[i].dump());
            }
            out << '\n';
        }
        return out.str();
    }
};

struct Run {
    ExperimentReport report;
    Series series;
    std::vector<std::pair<std::string, std::string>> files;  // relative path, contents

    void artifact(const std::string& path, const Json& j) {
        files.emplace_back(path, j.dump() + "\n");
        report.artifacts.push_back(path);
    }
    void check(std::string name, bool passed, Json measured) {
        report.assertions.push_back({std::move(name), passed, std::move(measured)});
    }
};

std::uint64_t require_seed(const ExperimentConfig& cfg) {
    if (!cfg.seed) throw ConfigError(cfg.experiment + ": a seed is required");
    return *cfg.seed;
}

Json coloring_json(std::span<const Color> c) { return Json(std::vector<Color>(c.begin(), c.end())); }

std::string band_name(std::size_t m, std::size_t lo, std::size_t hi) {
    return "m" + std::to_string(m) + "_k" + std::to_string(lo) + "-" + std::to_string(hi);
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const auto n = v.size();
    return n % 2 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2;
}

void gadget_suite(const ExperimentConfig& cfg, Params& p, Run& run) {
    const auto ns = p.uints("n", {3, 4, 5}, 3, 16);
    const auto ds = p.uints("d", {1, 2, 3, 4, 5}, 1, 64);
    const auto cap = p.uint("cap", 100'000'000, 1);
    run.report.params = p.finish();
    (void)cfg;

    run.series.columns = {"n", "d", "l", "max_degree", "proper_colorings", "distinct_tuple_values"};
    for (auto n : ns) {
        for (auto d : ds) {
            const auto g = build_gadget(n, d);
            const auto r = verify_gadget(g, cap);
            run.check("gadget n=" + std::to_string(n) + " d=" + std::to_string(d), r.passed(),
                      {{"l", g.l},
                       {"expected_l", d + (d - 1) * (n - 1)},
                       {"size_matches", r.size_matches},
                       {"forcing", r.forcing},
                       {"canonical_proper", r.canonical_proper},
                       {"max_degree", r.max_degree},
                       {"degree_bound", r.degree_bound},
                       {"enumeration_complete", r.enumeration_complete},
                       {"proper_colorings", r.proper_colorings}});
            run.series.add({n, d, g.l, r.max_degree, r.proper_colorings, r.distinct_tuple_values});
            Json j = graph_to_json(g.graph);
            j["gadget"] = {{"n", n}, {"d", d}, {"canonical_coloring", coloring_json(g.canonical_coloring.values())}};
            run.artifact("gadgets/F_" + std::to_string(n) + "_" + std::to_string(d) + ".json", j);
        }
    }
}

struct SampleParams {
    std::size_t l = 0;
    std::size_t d = 0;
    std::size_t samples = 0;
    double tol = 0;
};

SampleParams sample_params(Params& p) {
    SampleParams s;
    s.l = p.uint("l", 1000, 2, 1u << 24);
    if (s.l % 2) p.fail("\"l\" must be even");
    s.d = p.uint("d", 10, 1, 1000);
    s.samples = p.uint("samples", 20, 1, 100000);
    s.tol = p.real("tol", 1e-9, 1e-15, 1e-3);
    return s;
}

void rrg_spectral(const ExperimentConfig& cfg, Params& p, Run& run) {
    const auto seed = require_seed(cfg);
    const auto s = sample_params(p);
    const double bound = p.real("bound", 2 * std::sqrt(static_cast<double>(s.d) - 1) + 1, 0, 1e9);
    const double min_fraction = p.real("min_fraction", 0.95, 0, 1);
    run.report.params = p.finish();

    SpectralOptions opts;
    opts.tol = s.tol;
    run.series.columns = {"sample", "seed", "lambda", "residual", "iterations"};
    std::size_t below = 0;
    double worst = 0;
    for (std::size_t i = 0; i < s.samples; ++i) {
        const auto sample_seed = stream_seed(seed, i);
        const auto g = sample_labeled_union({s.l, s.d, 1, sample_seed});
        const auto r = lambda2(g, opts);
        below += r.lambda <= bound;
        worst = std::max(worst, r.lambda);
        run.series.add({i, sample_seed, r.lambda, r.residual, r.iterations});
    }
    const auto required = static_cast<std::size_t>(std::ceil(min_fraction * static_cast<double>(s.samples) - 1e-9));
    run.check("lambda <= bound in at least min_fraction of samples", below >= required,
              {{"below", below}, {"samples", s.samples}, {"required", required}, {"bound", bound}, {"max_lambda", worst}});
}

void eml_suite(const ExperimentConfig& cfg, Params& p, Run& run) {
    const auto seed = require_seed(cfg);
    const auto s = sample_params(p);
    const auto pairs = p.uint("pairs", 100, 1, 1'000'000);
    run.report.params = p.finish();

    SpectralOptions opts;
    opts.tol = s.tol;
    run.series.columns = {"sample", "lambda", "residual", "pairs", "holding", "max_ratio"};
    std::uint64_t holding = 0;
    double max_ratio = 0;
    for (std::size_t i = 0; i < s.samples; ++i) {
        const auto sample_seed = stream_seed(seed, i);
        const auto g = sample_labeled_union({s.l, s.d, 1, sample_seed});
        const auto r = lambda2(g, opts);
        Rng rng(stream_seed(sample_seed, 0));
        std::uint64_t ok = 0;
        double ratio = 0;
        for (std::size_t t = 0; t < pairs; ++t) {
            const auto b = random_subset(s.l, 1 + rng.below(s.l), rng);
            const auto bp = random_subset(s.l, 1 + rng.below(s.l), rng);
            const auto c = eml_check(g, s.d, b, bp, r.lambda, r.residual);
            ok += c.holds;
            ratio = std::max(ratio, c.deviation / c.bound);
        }
        holding += ok;
        max_ratio = std::max(max_ratio, ratio);
        run.series.add({i, r.lambda, r.residual, pairs, ok, ratio});
    }
    run.check("mixing lemma holds on every subset pair", holding == s.samples * pairs,
              {{"trials", s.samples * pairs}, {"holding", holding}, {"max_deviation_over_bound", max_ratio}});
}

void product_chromatic(const ExperimentConfig& cfg, Params& p, Run& run) {
    const auto seed = require_seed(cfg);
    const auto left_n = p.uint("left_complete", 4, 2, 64);
    const auto n = p.uint("n", 3, 1, 64);
    const auto l = p.uint("l", 12, 4, 1u << 16);
    if (l % 2) p.fail("\"l\" must be even");
    const auto k_param = p.uint("k", 0, 0, 1024);
    const auto group = p.choice("group", "equal", {"equal", "spread"});
    const auto edge_pairs = p.uint("edge_pairs", 1000, 0, 1'000'000);
    const double tol = p.real("tol", 1e-9, 1e-15, 1e-3);
    run.report.params = p.finish();

    const auto left = complete_graph(left_n);
    const auto e = greedy_edge_coloring(left);
    const std::size_t k = k_param ? k_param : e.num_colors;
    run.check("greedy edge coloring is proper", is_proper_edge_coloring(left, e).proper && e.num_colors <= k,
              {{"colors", e.num_colors}, {"k", k}});

    const auto left_dec = n_colorable(left, n, cfg.budget);
    run.check("left graph is not n-colorable", left_dec.decision == Decision::no,
              {{"decision", to_string(left_dec.decision)}});

    const auto right =
        group_matchings(one_factorize_complete(l), k, group == "equal" ? GroupMode::equal : GroupMode::spread);
    SpectralOptions opts;
    opts.tol = tol;
    const auto cert = mixing_certificate(right, n, opts);
    run.report.observations["certificate"] = certificate_to_json(cert);

    EdgeColoring used = e;
    used.num_colors = k;
    const auto h = build_product(left, used, right);
    const auto gc = girth_preservation_check(h);
    auto opt = [](const std::optional<std::size_t>& g) { return g ? Json(*g) : Json("inf"); };
    run.check("girth(H) >= girth of the label-class union", gc.holds,
              {{"product_girth", opt(gc.product_girth)}, {"right_girth", opt(gc.right_girth)}});

    const auto chi = chromatic_number(left, cfg.budget);
    const auto lifted = lift_product_coloring(h, chi.best);
    run.check("lifted coloring of the left graph is proper on H", is_proper(h.graph, lifted).proper,
              {{"colors", chi.best.num_colors()}});

    const auto dec = n_colorable(h.graph, n, cfg.budget);
    Json solver = {{"decision", to_string(dec.decision)},
                   {"nodes", dec.nodes},
                   {"clique_size", dec.clique_size},
                   {"num_vertices", h.graph.num_vertices()},
                   {"num_edges", h.graph.num_edges()}};
    if (dec.witness) {
        const auto maj = majority_extract(h, *dec.witness, n);
        solver["majority_extract_proper"] = maj.proper;
        run.artifact("h_coloring.json", coloring_json(dec.witness->values()));
    }
    run.report.observations["solver"] = solver;
    if (cert.holds) {
        run.check("H is not n-colorable", dec.decision == Decision::no, solver);

        const auto bound = cor_bound(l, cert.d, n);
        Rng rng(stream_seed(seed, 0));
        const std::size_t min_size = l / (n + 1) + 1;
        std::uint64_t ok = 0, total = 0;
        std::uint64_t fewest = std::numeric_limits<std::uint64_t>::max();
        for (Label j : cert.labels) {
            const auto cls = right.label_class(j);
            for (std::size_t t = 0; t < edge_pairs; ++t) {
                const auto b = random_subset(l, min_size + rng.below(l - min_size + 1), rng);
                const auto bp = random_subset(l, min_size + rng.below(l - min_size + 1), rng);
                const auto edges = edge_count_between(cls, b, bp);
                ok += static_cast<std::int64_t>(edges) > bound;
                fewest = std::min(fewest, edges);
                ++total;
            }
        }
        run.check("edge count exceeds d l / ((n+1)^2 (n+2)) in every class", ok == total,
                  {{"trials", total}, {"holding", ok}, {"bound", bound.str()}, {"min_edges", fewest}});
    }

    run.series.columns = {"label", "lambda", "residual", "threshold"};
    for (std::size_t i = 0; i < cert.labels.size(); ++i) {
        run.series.add({cert.labels[i], cert.reports[i].lambda, cert.reports[i].residual, cert.threshold.to_double()});
    }
    run.artifact("left.json", graph_to_json(left));
    run.artifact("right.json", graph_to_json(right));
    run.artifact("product.json", product_to_json(h));
    run.artifact("certificate.json", certificate_to_json(cert));
    run.artifact("lift_coloring.json", coloring_json(lifted.values()));
}

void hprime_roundtrip(const ExperimentConfig& cfg, Params& p, Run& run) {
    const auto seed = require_seed(cfg);
    RoundtripOptions opts;
    opts.n = p.uint("n", 3, 3, 16);
    const auto m_max = p.uint("m_max", 6, 1, 12);
    opts.orders = p.uint("orders", 8, 0, 10000);
    opts.enumerate_max_base = p.uint("enumerate_max_base", 6, 0, 64);
    opts.cap = p.uint("cap", 10'000'000, 1);
    opts.budget = cfg.budget;
    run.report.params = p.finish();

    run.series.columns = {"m", "k_lo", "k_hi", "base_vertices", "hprime_vertices", "colorings_lifted",
                          "enumerated_colorings"};
    for (std::size_t m = 1; m <= m_max; ++m) {
        for (std::size_t lo = 1; lo <= m; ++lo) {
            for (std::size_t hi = lo; hi <= m; ++hi) {
                const auto f = build_fragment(m, lo, hi);
                opts.seed = stream_seed(seed, m * 256 + lo * 16 + hi);
                const auto r = check_roundtrip(f, opts);
                run.check("fragment m=" + std::to_string(m) + " k=[" + std::to_string(lo) + "," + std::to_string(hi) +
                              "]",
                          r.passed, r.measured);
                run.series.add({m, lo, hi, r.measured["base_vertices"], r.measured["hprime_vertices"],
                                r.measured["colorings_lifted"], r.measured.value("enumerated_colorings", Json(-1))});
                run.artifact("fragments/" + band_name(m, lo, hi) + ".json", fragment_to_json(f));
            }
        }
    }
}

void localstats_convergence(const ExperimentConfig& cfg, Params& p, Run& run) {
    const auto seed = require_seed(cfg);
    const auto ls = p.uints("l", {100, 1000, 10000}, 4, 1u << 22);
    for (std::size_t i = 0; i < ls.size(); ++i) {
        if (ls[i] % 2) p.fail("every entry of \"l\" must be even");
        if (i && ls[i] <= ls[i - 1]) p.fail("\"l\" must be strictly increasing");
    }
    const auto d = p.uint("d", 3, 1, 64);
    const auto r = p.uint("r", 2, 0, 8);
    const auto samples = p.uint("samples", 20, 1, 10000);
    const auto triples = p.uint("triples", 100, 0, 100000);
    const auto triple_l = p.uint("triple_l", 40, 2, 100000);
    if (triple_l % 2) p.fail("\"triple_l\" must be even");
    const auto triple_d = p.uint("triple_d", 3, 1, 64);
    const auto triple_k = p.uint("triple_k", 2, 1, 16);
    run.report.params = p.finish();

    const auto reference = point_mass(tree_ball_reference(d, r, 0), r, 1);
    run.report.observations["reference_code"] = reference.counts.begin()->first;
    run.series.columns = {"l", "sample", "tv"};
    std::vector<double> medians;
    for (auto l : ls) {
        std::vector<double> tvs;
        for (std::size_t i = 0; i < samples; ++i) {
            const auto g = sample_labeled_union({l, d, 1, stream_seed(stream_seed(seed, l), i)});
            const VertexColoring constant(std::vector<Color>(l, 0), 1);
            const double tv = tv_distance(ball_statistic(g, constant, r), reference);
            tvs.push_back(tv);
            run.series.add({l, i, tv});
        }
        medians.push_back(median(tvs));
    }
    bool decreasing = true;
    for (std::size_t i = 1; i < medians.size(); ++i) decreasing = decreasing && medians[i] < medians[i - 1];
    run.check("median tv distance to the tree ball decreases in l", decreasing, {{"l", ls}, {"median_tv", medians}});

    if (triples == 0) return;
    std::uint64_t density_ok = 0, witness_ok = 0, r2_density_ok = 0, r2_witness_ok = 0;
    for (std::size_t t = 0; t < triples; ++t) {
        const auto s = stream_seed(stream_seed(seed, 0xce11), t);
        const auto g = sample_labeled_union({triple_l, triple_d, triple_k, s});
        Rng rng(stream_seed(s, 1));
        std::vector<Vertex> b, bp;
        for (Vertex v = 0; v < triple_l; ++v) {
            if (rng.below(2)) b.push_back(v);
            if (rng.below(2)) bp.push_back(v);
        }
        const auto cells = encode_subsets_as_assignment(triple_l, b, bp);
        const auto nv = static_cast<std::int64_t>(triple_l);
        auto densities = [&](const BallStatistic& st) {
            return b_density_from_statistic(st) == Rational(static_cast<std::int64_t>(b.size()), nv) &&
                   b_prime_density_from_statistic(st) == Rational(static_cast<std::int64_t>(bp.size()), nv);
        };
        auto witnesses = [&](const BallStatistic& st) {
            for (Label j = 0; j < triple_k; ++j) {
                const auto direct = Rational(static_cast<std::int64_t>(edge_witness_count(g, cells, j)), nv);
                if (edge_witness_from_statistic(st, j) != direct) return false;
            }
            return true;
        };
        const auto st1 = ball_statistic(g, cells, 1);
        const auto st2 = ball_statistic(g, cells, 2);
        density_ok += densities(st1);
        witness_ok += witnesses(st1);
        r2_density_ok += densities(st2);
        r2_witness_ok += witnesses(st2);
    }
    run.check("cell densities |B|/|V|, |B'|/|V| recovered from the r=1 statistic", density_ok == triples,
              {{"triples", triples}, {"agreeing", density_ok}});
    run.check("edge witness density recovered from the r=1 statistic", witness_ok == triples,
              {{"triples", triples}, {"agreeing", witness_ok}});
    run.report.observations["r2"] = {{"density_agreeing", r2_density_ok}, {"witness_agreeing", r2_witness_ok}};
}

}  // namespace

ExperimentReport run_experiment(const ExperimentConfig& cfg) {
    static const std::map<std::string, std::function<void(const ExperimentConfig&, Params&, Run&)>> runners{
        {"gadget-suite", gadget_suite},
        {"rrg-spectral", rrg_spectral},
        {"eml-suite", eml_suite},
        {"product-chromatic", product_chromatic},
        {"hprime-roundtrip", hprime_roundtrip},
        {"localstats-convergence", localstats_convergence},
    };
    const auto it = runners.find(cfg.experiment);
    if (it == runners.end()) throw ConfigError("unknown experiment \"" + cfg.experiment + "\"");
    Params params(cfg.params, cfg.experiment);
    Run run;
    run.report.experiment = cfg.experiment;
    it->second(cfg, params, run);

    Json report = run.report.to_json();
    if (cfg.seed) report["seed"] = *cfg.seed;
    report["budget"] = cfg.budget;
    std::filesystem::create_directories(cfg.output);
    for (const auto& [path, contents] : run.files) {
        const auto full = cfg.output / path;
        std::filesystem::create_directories(full.parent_path());
        std::ofstream(full, std::ios::binary) << contents;
    }
    std::ofstream(cfg.output / "series.csv", std::ios::binary) << run.series.csv();
    write_json_file(cfg.output / "report.json", report);
    return run.report;
}

}  // namespace chromkit
