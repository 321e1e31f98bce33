// chromkit command line: one subcommand group per module plus `experiment run`.
//
// Exit status: 0 when the command's checks pass, 1 when a check fails,
// 2 on usage errors and unreadable or malformed input.

#include <cmath>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "chromkit/chromatic.hpp"
#include "chromkit/experiments.hpp"
#include "chromkit/gadgets.hpp"
#include "chromkit/io.hpp"
#include "chromkit/localstats.hpp"
#include "chromkit/product.hpp"
#include "chromkit/rng.hpp"
#include "chromkit/rrg.hpp"
#include "chromkit/shift.hpp"
#include "chromkit/spectral.hpp"

using namespace chromkit;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Flags shared by every subcommand.
struct Common {
    std::optional<std::uint64_t> seed;
    std::string out;
    std::uint64_t budget = kDefaultBudget;
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--seed", c.seed, "Random seed");
    cmd->add_option("--out", c.out, "Output path (stdout when omitted)");
    cmd->add_option("--budget", c.budget, "Search node budget");
}

void emit(const Common& c, const Json& j) {
    if (c.out.empty()) {
        std::cout << j.dump(2) << '\n';
    } else {
        write_json_file(c.out, j);
    }
}

std::uint64_t need_seed(const Common& c) {
    if (!c.seed) throw UsageError("--seed is required");
    return *c.seed;
}

VertexColoring read_coloring(const std::string& path) { return VertexColoring::from_values(read_uint_array(path)); }

int result(bool ok) { return ok ? kPass : kFail; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"chromkit: finite experiments on gadgets, shift graphs, random regular graphs and products"};
    app.require_subcommand(1);
    Common common;
    std::function<int()> action;

    // gadget
    auto* gadget = app.add_subcommand("gadget", "Forcing gadgets F(n, d)")->require_subcommand(1);
    std::size_t gn = 3, gd = 1;
    {
        auto* build = gadget->add_subcommand("build", "Write F(n, d) with its canonical coloring");
        build->add_option("--n", gn, "Number of colors")->required();
        build->add_option("--d", gd, "Degree")->required();
        add_common(build, common);
        build->callback([&] {
            action = [&] {
                const auto g = build_gadget(gn, gd);
                Json j = graph_to_json(g.graph);
                const auto c = g.canonical_coloring.values();
                j["gadget"] = {{"n", gn}, {"d", gd}, {"canonical_coloring", std::vector<Color>(c.begin(), c.end())}};
                emit(common, j);
                return kPass;
            };
        });
        auto* verify = gadget->add_subcommand("verify", "Exhaustively check the forcing property");
        verify->add_option("--n", gn, "Number of colors")->required();
        verify->add_option("--d", gd, "Degree")->required();
        add_common(verify, common);
        verify->callback([&] {
            action = [&] {
                const auto g = build_gadget(gn, gd);
                const auto r = verify_gadget(g, common.budget);
                Json j = {{"n", gn},
                          {"d", gd},
                          {"l", g.l},
                          {"passed", r.passed()},
                          {"size_matches", r.size_matches},
                          {"forcing", r.forcing},
                          {"canonical_proper", r.canonical_proper},
                          {"degree_bound", r.degree_bound},
                          {"max_degree", r.max_degree},
                          {"enumeration_complete", r.enumeration_complete},
                          {"proper_colorings", r.proper_colorings}};
                if (r.counterexample) j["counterexample"] = *r.counterexample;
                emit(common, j);
                return result(r.passed());
            };
        });
    }

    // shift
    auto* shift = app.add_subcommand("shift", "Shift graph fragments and H'_n")->require_subcommand(1);
    std::size_t sm = 4, kmin = 1, kmax = 0, sn = 3, orders = 8, enum_max = 6;
    std::string fragment_path;
    {
        auto* frag = shift->add_subcommand("fragment", "All subsets of {0..m-1} with size in [kmin, kmax]");
        frag->add_option("--m", sm, "Ground set {0..m-1}")->required();
        frag->add_option("--kmin", kmin, "Smallest set size")->required();
        frag->add_option("--kmax", kmax, "Largest set size")->required();
        add_common(frag, common);
        frag->callback([&] {
            action = [&] {
                emit(common, fragment_to_json(build_fragment(sm, kmin, kmax)));
                return kPass;
            };
        });
        auto* hp = shift->add_subcommand("hprime", "Degree-spread graph H'_n over a fragment");
        hp->add_option("--n", sn, "Number of colors")->required();
        hp->add_option("--fragment", fragment_path, "Fragment JSON")->required();
        add_common(hp, common);
        hp->callback([&] {
            action = [&] {
                emit(common, hprime_to_json(build_hprime(fragment_from_json(read_json_file(fragment_path)), sn)));
                return kPass;
            };
        });
        auto* rt = shift->add_subcommand("roundtrip", "Lift/project checks on every band of one m");
        rt->add_option("--n", sn, "Number of colors")->required();
        rt->add_option("--m", sm, "Ground set {0..m-1}")->required();
        rt->add_option("--kmin", kmin, "Only this lower size (default: all)");
        rt->add_option("--kmax", kmax, "Only this upper size (default: all)");
        rt->add_option("--orders", orders, "Random BFS orders per fragment");
        rt->add_option("--enumerate-max", enum_max, "Full enumeration up to this many base vertices");
        add_common(rt, common);
        rt->callback([&, rt] {
            action = [&, rt] {
                RoundtripOptions opts;
                opts.n = sn;
                opts.orders = orders;
                opts.enumerate_max_base = enum_max;
                opts.budget = common.budget;
                const auto seed = common.seed.value_or(0);
                bool ok = true;
                Json list = Json::array();
                for (std::size_t lo = 1; lo <= sm; ++lo) {
                    for (std::size_t hi = lo; hi <= sm; ++hi) {
                        if ((rt->count("--kmin") && lo != kmin) || (rt->count("--kmax") && hi != kmax)) continue;
                        opts.seed = stream_seed(seed, lo * 16 + hi);
                        auto r = check_roundtrip(build_fragment(sm, lo, hi), opts);
                        ok = ok && r.passed;
                        r.measured["k_lo"] = lo;
                        r.measured["k_hi"] = hi;
                        r.measured["passed"] = r.passed;
                        list.push_back(r.measured);
                    }
                }
                if (list.empty()) throw UsageError("no band matches --kmin/--kmax");
                emit(common, {{"n", sn}, {"m", sm}, {"passed", ok}, {"fragments", list}});
                return result(ok);
            };
        });
    }

    // rrg
    auto* rrg = app.add_subcommand("rrg", "Random regular multigraphs and 1-factorizations")->require_subcommand(1);
    std::size_t rl = 0, rd = 1, rk = 1;
    std::string group = "equal";
    {
        auto* sample = rrg->add_subcommand("sample", "Union of k labels, each d uniform perfect matchings");
        sample->add_option("--l", rl, "Vertex count (even)")->required();
        sample->add_option("--d", rd, "Matchings per label")->required();
        sample->add_option("--k", rk, "Number of labels (default 1)");
        add_common(sample, common);
        sample->callback([&] {
            action = [&] {
                emit(common, graph_to_json(sample_labeled_union({rl, rd, rk, need_seed(common)})));
                return kPass;
            };
        });
        auto* fact = rrg->add_subcommand("factorize", "Round-robin 1-factorization of K_l grouped into k labels");
        fact->add_option("--l", rl, "Vertex count (even)")->required();
        fact->add_option("--k", rk, "Label groups (default: one label per round)");
        fact->add_option("--group", group, "equal or spread")->check(CLI::IsMember({"equal", "spread"}));
        add_common(fact, common);
        fact->callback([&, fact] {
            action = [&, fact] {
                auto g = one_factorize_complete(rl);
                if (fact->count("--k")) {
                    g = group_matchings(g, rk, group == "equal" ? GroupMode::equal : GroupMode::spread);
                }
                emit(common, graph_to_json(g));
                return kPass;
            };
        });
    }

    // spectral
    auto* spectral = app.add_subcommand("spectral", "Second eigenvalue, certificates and mixing checks")
                         ->require_subcommand(1);
    std::string in_path;
    double tol = 1e-9;
    std::size_t cn = 3, trials = 100;
    {
        auto* lam = spectral->add_subcommand("lambda", "Second largest absolute eigenvalue");
        lam->add_option("--in", in_path, "Input JSON")->required();
        lam->add_option("--tol", tol, "Eigenvalue tolerance relative to d");
        add_common(lam, common);
        lam->callback([&] {
            action = [&] {
                SpectralOptions opts;
                opts.tol = tol;
                if (common.seed) opts.seed = *common.seed;
                emit(common, spectral_report_to_json(lambda2(read_graph(in_path), opts)));
                return kPass;
            };
        });
        auto* cert = spectral->add_subcommand("certify", "lambda + residual <= d/(n+2) on every label class");
        cert->add_option("--in", in_path, "Input JSON")->required();
        cert->add_option("--n", cn, "Number of colors")->required();
        cert->add_option("--tol", tol, "Eigenvalue tolerance relative to d");
        add_common(cert, common);
        cert->callback([&] {
            action = [&] {
                SpectralOptions opts;
                opts.tol = tol;
                if (common.seed) opts.seed = *common.seed;
                const auto c = mixing_certificate(read_graph(in_path), cn, opts);
                emit(common, certificate_to_json(c));
                return result(c.holds);
            };
        });
        auto* eml = spectral->add_subcommand("eml", "Mixing lemma on random subset pairs");
        eml->add_option("--in", in_path, "Input JSON")->required();
        eml->add_option("--trials", trials, "Random subset pairs");
        add_common(eml, common);
        eml->callback([&] {
            action = [&] {
                const auto g = read_graph(in_path);
                const auto d = regular_degree(g);
                if (!d) throw UsageError("graph is not regular");
                const auto rep = lambda2(g);
                Rng rng(need_seed(common));
                std::size_t ok = 0;
                double worst = 0;
                const auto l = g.num_vertices();
                for (std::size_t t = 0; t < trials; ++t) {
                    const auto b = random_subset(l, 1 + rng.below(l), rng);
                    const auto bp = random_subset(l, 1 + rng.below(l), rng);
                    const auto c = eml_check(g, *d, b, bp, rep.lambda, rep.residual);
                    ok += c.holds;
                    worst = std::max(worst, c.deviation / c.bound);
                }
                emit(common, {{"lambda", rep.lambda},
                              {"residual", rep.residual},
                              {"trials", trials},
                              {"holding", ok},
                              {"max_deviation_over_bound", worst}});
                return result(ok == trials);
            };
        });
    }

    // product
    auto* product = app.add_subcommand("product", "Edge-labeled products")->require_subcommand(1);
    std::string left_path, right_path, coloring_path;
    std::size_t pn = 3;
    {
        auto* build = product->add_subcommand("build", "H from left graph, greedy edge coloring and labeled right");
        build->add_option("--left", left_path, "Left graph JSON")->required();
        build->add_option("--right", right_path, "Right labeled graph JSON")->required();
        build->add_option("--edge-coloring", coloring_path, "Edge colors indexed like the left edges");
        add_common(build, common);
        build->callback([&] {
            action = [&] {
                const auto left = read_graph(left_path);
                EdgeColoring e;
                if (coloring_path.empty()) {
                    e = greedy_edge_coloring(left);
                } else {
                    e.values = read_uint_array(coloring_path);
                    for (auto c : e.values) e.num_colors = std::max<std::size_t>(e.num_colors, c + 1);
                }
                emit(common, product_to_json(build_product(left, e, read_graph(right_path))));
                return kPass;
            };
        });
        auto* check = product->add_subcommand("check", "Consistency and girth preservation of a product bundle");
        check->add_option("--in", in_path, "Input JSON")->required();
        add_common(check, common);
        check->callback([&] {
            action = [&] {
                const auto p = product_from_json(read_json_file(in_path));
                const auto gc = girth_preservation_check(p);
                auto opt = [](const std::optional<std::size_t>& g) { return g ? Json(*g) : Json("inf"); };
                emit(common, {{"num_vertices", p.graph.num_vertices()},
                              {"num_edges", p.graph.num_edges()},
                              {"product_girth", opt(gc.product_girth)},
                              {"right_girth", opt(gc.right_girth)},
                              {"girth_preserved", gc.holds}});
                return result(gc.holds);
            };
        });
        auto* extract = product->add_subcommand("extract", "Majority coloring of the left graph");
        extract->add_option("--in", in_path, "Input JSON")->required();
        extract->add_option("--coloring", coloring_path, "Vertex coloring JSON")->required();
        extract->add_option("--n", pn, "Number of colors")->required();
        add_common(extract, common);
        extract->callback([&] {
            action = [&] {
                const auto p = product_from_json(read_json_file(in_path));
                const auto c = read_coloring(coloring_path);
                const auto input_proper = is_proper(p.graph, c).proper;
                const auto m = majority_extract(p, c, pn);
                const auto v = m.coloring.values();
                Json j = {{"input_proper", input_proper},
                          {"proper", m.proper},
                          {"coloring", std::vector<Color>(v.begin(), v.end())}};
                if (m.violating_edge) j["violating_edge"] = *m.violating_edge;
                emit(common, j);
                return result(input_proper && m.proper);
            };
        });
    }

    // color
    auto* color = app.add_subcommand("color", "Exact coloring")->require_subcommand(1);
    std::size_t colors = 3;
    {
        auto* decide = color->add_subcommand("decide", "Is the graph n-colorable? Exit 1 if undecided");
        decide->add_option("--in", in_path, "Input JSON")->required();
        decide->add_option("--n", colors, "Number of colors")->required();
        add_common(decide, common);
        decide->callback([&] {
            action = [&] {
                const auto r = n_colorable(read_graph(in_path), colors, common.budget);
                Json j = {{"n", colors}, {"decision", to_string(r.decision)}, {"nodes", r.nodes}};
                if (r.witness) {
                    const auto v = r.witness->values();
                    j["witness"] = std::vector<Color>(v.begin(), v.end());
                }
                emit(common, j);
                return result(r.decision != Decision::unknown);
            };
        });
        auto* chrom = color->add_subcommand("chromatic", "Chromatic number bounds; exit 1 if not exact");
        chrom->add_option("--in", in_path, "Input JSON")->required();
        add_common(chrom, common);
        chrom->callback([&] {
            action = [&] {
                const auto r = chromatic_number(read_graph(in_path), common.budget);
                const auto v = r.best.values();
                emit(common, {{"lower", r.lower},
                              {"upper", r.upper},
                              {"exact", r.exact()},
                              {"coloring", std::vector<Color>(v.begin(), v.end())}});
                return result(r.exact());
            };
        });
        auto* verify = color->add_subcommand("verify", "Check a vertex coloring");
        verify->add_option("--in", in_path, "Input JSON")->required();
        verify->add_option("--coloring", coloring_path, "Vertex coloring JSON")->required();
        add_common(verify, common);
        verify->callback([&] {
            action = [&] {
                const auto g = read_graph(in_path);
                const auto c = read_coloring(coloring_path);
                if (c.size() != g.num_vertices()) throw UsageError("coloring does not cover the graph");
                const auto r = is_proper(g, c);
                Json j = {{"proper", r.proper}, {"colors", c.num_colors()}};
                if (r.violating_edge) {
                    const auto& e = g.edge(*r.violating_edge);
                    j["violating_edge"] = {e.u, e.v, e.label};
                }
                emit(common, j);
                return result(r.proper);
            };
        });
    }

    // stats
    auto* stats = app.add_subcommand("stats", "Colored ball statistics")->require_subcommand(1);
    std::string beta_path, a_path, b_path;
    std::size_t radius = 1;
    std::uint64_t stat_trials = 0;
    {
        auto* balls = stats->add_subcommand("balls", "(beta, r)-statistic, exact or sampled");
        balls->add_option("--in", in_path, "Input JSON")->required();
        balls->add_option("--beta", beta_path, "Vertex assignment JSON")->required();
        balls->add_option("--r", radius, "Ball radius")->required();
        auto* exact = balls->add_flag("--exact", "Every vertex once (default)");
        balls->add_option("--trials", stat_trials, "Sampled roots")->excludes(exact);
        add_common(balls, common);
        balls->callback([&] {
            action = [&] {
                const auto g = read_graph(in_path);
                const auto beta = read_coloring(beta_path);
                if (beta.size() != g.num_vertices()) throw UsageError("beta does not cover the graph");
                const auto s = stat_trials ? sample_ball_statistic(g, beta, radius, stat_trials, need_seed(common))
                                           : ball_statistic(g, beta, radius);
                emit(common, statistic_to_json(s));
                return kPass;
            };
        });
        auto* tv = stats->add_subcommand("tv", "Total variation distance of two statistics");
        tv->add_option("--a", a_path, "First statistic JSON")->required();
        tv->add_option("--b", b_path, "Second statistic JSON")->required();
        add_common(tv, common);
        tv->callback([&] {
            action = [&] {
                const auto a = statistic_from_json(read_json_file(a_path));
                const auto b = statistic_from_json(read_json_file(b_path));
                const auto d = tv_distance_exact(a, b);
                emit(common, {{"tv", d.to_double()}, {"exact", d.str()}});
                return kPass;
            };
        });
    }

    // experiment
    auto* experiment = app.add_subcommand("experiment", "Config-driven pipelines")->require_subcommand(1);
    std::string config_path;
    {
        auto* run = experiment->add_subcommand("run", "Run one experiment config");
        run->add_option("--config", config_path, "Experiment YAML config")->required()->check(CLI::ExistingFile);
        add_common(run, common);
        run->callback([&, run] {
            action = [&, run] {
                auto cfg = load_config(config_path);
                if (common.seed) cfg.seed = common.seed;
                if (!common.out.empty()) cfg.output = common.out;
                if (run->count("--budget")) cfg.budget = common.budget;
                const auto report = run_experiment(cfg);
                for (const auto& a : report.assertions) {
                    std::cout << (a.passed ? "PASS " : "FAIL ") << a.name << '\n';
                }
                std::cout << report.experiment << ": " << (report.passed() ? "passed" : "FAILED") << " -> "
                          << (cfg.output / "report.json").string() << '\n';
                return result(report.passed());
            };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kPass : kUsage;
    }
    try {
        return action ? action() : kUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kUsage;
    } catch (const FormatError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid argument: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFail;
    }
}
