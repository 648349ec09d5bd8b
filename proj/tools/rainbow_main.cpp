// Command-line driver: generators, pattern search, reductions, and the
// verification campaigns over the text formats of io.hpp.
//
// Exit codes (stable contract):
//   0  success / witness found / verdict confirmed
//   1  pattern exhaustively absent / verdict refuted
//   2  node budget exhausted
//   3  invalid parameters
//   64 input parse error (message carries the line number)
//   65 input type mismatch for the requested operation

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "rainbow/rainbow.hpp"
#include "rainbow/report_json.hpp"

namespace {

using namespace rainbow;

std::string rational_text(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

void print_ecg_summary(const EdgeColoredGraph& g) {
    ColorDegreeProfile prof = color_degree_profile(g);
    std::cout << "n=" << g.order() << " m=" << g.edge_count() << " delta_c=" << prof.minimum
              << " avg_color_degree=" << rational_text(prof.average)
              << " palette=" << g.palette_size() << "\n";
}

void print_dg_summary(const SimpleDigraph& d) {
    int mn = d.order() > 0 ? d.out_degree(0) : 0, mx = mn;
    for (int v = 1; v < d.order(); ++v) {
        mn = std::min(mn, d.out_degree(v));
        mx = std::max(mx, d.out_degree(v));
    }
    std::cout << "n=" << d.order() << " arcs=" << d.arc_count() << " min_out_degree=" << mn
              << " max_out_degree=" << mx << "\n";
}

int default_threads() {
    if (const char* env = std::getenv("RF_THREADS")) {
        int t = std::atoi(env);
        if (t >= 1) return t;
    }
    return 1;
}

struct TypeMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int search_exit(const SearchResult& res) {
    switch (res.status) {
    case SearchStatus::Found: return 0;
    case SearchStatus::Absent: return 1;
    case SearchStatus::Exhausted: return 2;
    }
    return 1;
}

void print_witness(const Witness& w) {
    std::vector<int> vs = w.vertices;
    std::sort(vs.begin(), vs.end());
    std::cout << "witness:";
    for (int v : vs) std::cout << ' ' << v;
    std::cout << "\n";
    for (const auto& part : w.parts) {
        std::cout << "part:";
        for (int v : part) std::cout << ' ' << v;
        std::cout << "\n";
    }
}

int verdict_exit(const VerificationReport& r) {
    switch (r.verdict) {
    case VerificationReport::Verdict::Confirmed: return 0;
    case VerificationReport::Verdict::Refuted: return 1;
    case VerificationReport::Verdict::ExhaustedBudget: return 2;
    }
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"rainbow: edge-colored graph reductions, pattern search, and desk-scale "
                 "theorem verification"};
    app.require_subcommand(1);

    // ---- generate -----------------------------------------------------------
    auto* gen = app.add_subcommand("generate", "emit a construction instance");
    gen->require_subcommand(1);
    std::string out_path;

    int g_parts = 2, g_class = 3, g_n = 5, g_s = 3, g_r = 1, g_ell = 3, g_palette = 3;
    double g_prob = 0.5;
    std::uint64_t g_seed = 1;

    auto add_out = [&out_path](CLI::App* cmd) {
        cmd->add_option("--out", out_path, "output path")->required();
    };

    auto* g_pm = gen->add_subcommand("proper-multipartite", "properly colored complete "
                                                            "balanced multipartite graph");
    g_pm->add_option("--parts", g_parts)->required();
    g_pm->add_option("--class-size", g_class)->required();
    add_out(g_pm);

    auto* g_rp = gen->add_subcommand("rainbow-partite",
                                     "injectively colored complete balanced multipartite graph");
    g_rp->add_option("--parts", g_parts)->required();
    g_rp->add_option("--class-size", g_class)->required();
    add_out(g_rp);

    auto* g_t = gen->add_subcommand("tournament", "rotational regular tournament (digraph)");
    g_t->add_option("--n", g_n)->required();
    add_out(g_t);

    auto* g_tc = gen->add_subcommand("tournament-coloring",
                                     "K_n colored by the arcs of a regular tournament");
    g_tc->add_option("--n", g_n)->required();
    add_out(g_tc);

    auto* g_s2 = gen->add_subcommand("statement-ii", "piecewise sharpness coloring of K_n");
    g_s2->add_option("--s", g_s)->required();
    g_s2->add_option("--r", g_r)->required();
    g_s2->add_option("--l", g_ell)->required();
    g_s2->add_option("--class-size", g_class)->required();
    add_out(g_s2);

    auto* g_li = gen->add_subcommand("li-average", "K_n with c(ij) = max(i,j)");
    g_li->add_option("--n", g_n)->required();
    add_out(g_li);

    auto* g_rand = gen->add_subcommand("random", "seeded random edge-colored graph");
    g_rand->add_option("--n", g_n)->required();
    g_rand->add_option("--edge-prob", g_prob)->required();
    g_rand->add_option("--palette", g_palette)->required();
    g_rand->add_option("--seed", g_seed)->required();
    add_out(g_rand);

    // ---- search -------------------------------------------------------------
    auto* search = app.add_subcommand("search", "exact pattern search in an instance file");
    std::string search_in;
    search->add_option("input", search_in, "instance file (.ecg/.mg/.dg)")->required();
    int s_clique = 0, s_s = 0, s_r = 0;
    std::vector<int> s_join;
    bool s_mg = false, s_dg = false, s_cyc = false, s_exact = false, s_tri = false;
    std::uint64_t s_budget = 0;
    search->add_option("--rainbow-clique", s_clique, "rainbow K_s: s");
    search->add_option("--rainbow-join", s_join, "rainbow K_r v K^l_{s-r}: r s l")->expected(3);
    search->add_flag("--mg-pattern", s_mg, "multigraph Ks - Mr pattern (use --s/--r)");
    search->add_flag("--dg-pattern", s_dg, "digraph Ks - tri - Mr pattern (use --s/--r)");
    search->add_flag("--cyclic-triangle", s_cyc, "cyclically directed triangle");
    search->add_option("--s", s_s);
    search->add_option("--r", s_r);
    search->add_flag("--exact-induced", s_exact, "demand exactly r light pairs");
    search->add_flag("--with-triangle", s_tri, "include the cyclic-triangle deletion");
    search->add_option("--budget", s_budget, "node cap (0 = unlimited)");

    // ---- reduce -------------------------------------------------------------
    auto* reduce = app.add_subcommand("reduce", "apply a pipeline transform");
    std::string reduce_in, reduce_mode, reduce_m = "max";
    reduce->add_option("input", reduce_in)->required();
    reduce->add_option("--mode", reduce_mode, "edge-minimal | gcm-digraph | two-cycle | to-multigraph")
        ->required();
    reduce->add_option("--m", reduce_m, "class-size cap for gcm-digraph ('max' = n-1)");
    std::string reduce_out;
    reduce->add_option("--out", reduce_out, "output path")->required();

    // ---- verify -------------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "run a verification campaign");
    std::string campaign, verify_out, verify_mode = "auto";
    int v_n = 5, v_s = 3, v_threads = default_threads(), v_trials = 10000;
    std::optional<int> v_r;
    std::uint64_t v_budget = 0, v_seed = 1;
    verify->add_option("campaign", campaign, "li-triangle | multigraph-turan | property-suite")
        ->required();
    verify->add_option("--n", v_n);
    verify->add_option("--s", v_s);
    auto* v_r_opt = verify->add_option("--r", [&v_r](const std::vector<std::string>& vals) {
        v_r = std::stoi(vals.at(0));
        return true;
    }, "statement (2) matching bound");
    v_r_opt->type_name("INT");
    verify->add_option("--mode", verify_mode, "auto | exhaustive | pruned (li-triangle)");
    verify->add_option("--threads", v_threads, "worker count (default: RF_THREADS or 1)");
    verify->add_option("--budget", v_budget, "node/instance cap (0 = unlimited)");
    verify->add_option("--trials", v_trials, "property-suite trials");
    verify->add_option("--seed", v_seed, "property-suite seed");
    verify->add_option("--out", verify_out, "write rf-report/1 JSON here");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            if (g_pm->parsed()) {
                EdgeColoredGraph g = proper_multipartite(g_parts, g_class);
                write_file(out_path, serialize(g));
                print_ecg_summary(g);
            } else if (g_rp->parsed()) {
                EdgeColoredGraph g = rainbow_multipartite(g_parts, g_class);
                write_file(out_path, serialize(g));
                print_ecg_summary(g);
            } else if (g_t->parsed()) {
                SimpleDigraph d = regular_tournament(g_n);
                write_file(out_path, serialize(d));
                print_dg_summary(d);
            } else if (g_tc->parsed()) {
                EdgeColoredGraph g = orientation_coloring(regular_tournament(g_n));
                write_file(out_path, serialize(g));
                print_ecg_summary(g);
            } else if (g_s2->parsed()) {
                EdgeColoredGraph g = statement_ii_construction(g_s, g_r, g_ell, g_class);
                write_file(out_path, serialize(g));
                print_ecg_summary(g);
            } else if (g_li->parsed()) {
                EdgeColoredGraph g = li_average_construction(g_n);
                write_file(out_path, serialize(g));
                print_ecg_summary(g);
            } else if (g_rand->parsed()) {
                EdgeColoredGraph g = random_colored_graph(g_n, g_prob, g_palette, g_seed);
                write_file(out_path, serialize(g));
                print_ecg_summary(g);
            }
            return 0;
        }

        if (search->parsed()) {
            AnyGraph any = load_graph_file(search_in);
            SearchLimits limits{s_budget};
            SearchResult res;
            if (s_clique > 0) {
                auto* g = std::get_if<EdgeColoredGraph>(&any);
                if (!g) throw TypeMismatch("--rainbow-clique needs an .ecg input");
                res = find_rainbow_clique(*g, s_clique, limits);
            } else if (!s_join.empty()) {
                auto* g = std::get_if<EdgeColoredGraph>(&any);
                if (!g) throw TypeMismatch("--rainbow-join needs an .ecg input");
                res = find_rainbow_join(*g, s_join[0], s_join[1], s_join[2], limits);
            } else if (s_mg) {
                auto* m = std::get_if<StandardMultigraph>(&any);
                if (!m) throw TypeMismatch("--mg-pattern needs an .mg input");
                res = find_multigraph_pattern(*m, s_s, s_r, s_exact, limits);
            } else if (s_dg) {
                auto* d = std::get_if<SimpleDigraph>(&any);
                if (!d) throw TypeMismatch("--dg-pattern needs a .dg input");
                res = find_digraph_pattern(*d, s_s, s_r, s_tri, limits);
            } else if (s_cyc) {
                auto* d = std::get_if<SimpleDigraph>(&any);
                if (!d) throw TypeMismatch("--cyclic-triangle needs a .dg input");
                res = find_cyclic_triangle(*d);
            } else {
                std::cerr << "search: no pattern selected\n";
                return 3;
            }
            std::cout << "status=" << (res.found() ? "found" : res.status == SearchStatus::Absent
                                                                   ? "absent"
                                                                   : "exhausted")
                      << " nodes=" << res.nodes << "\n";
            if (res.witness) print_witness(*res.witness);
            return search_exit(res);
        }

        if (reduce->parsed()) {
            AnyGraph any = load_graph_file(reduce_in);
            if (reduce_mode == "edge-minimal") {
                auto* g = std::get_if<EdgeColoredGraph>(&any);
                if (!g) throw TypeMismatch("edge-minimal needs an .ecg input");
                auto [f, trace] = edge_minimal_reduce(*g);
                write_file(reduce_out, serialize(f));
                std::cout << "deleted=" << trace.deleted.size() << " rounds=" << trace.rounds
                          << " m=" << f.edge_count() << "\n";
            } else if (reduce_mode == "gcm-digraph") {
                auto* g = std::get_if<EdgeColoredGraph>(&any);
                if (!g) throw TypeMismatch("gcm-digraph needs an .ecg input");
                double m = reduce_m == "max" ? std::max(1, g->order() - 1) : std::stod(reduce_m);
                SimpleDigraph d = build_gcm_digraph(*g, m);
                write_file(reduce_out, serialize(d));
                print_dg_summary(d);
            } else if (reduce_mode == "two-cycle") {
                auto* d = std::get_if<SimpleDigraph>(&any);
                if (!d) throw TypeMismatch("two-cycle needs a .dg input");
                SimpleGraph h = two_cycle_graph(*d);
                write_file(reduce_out, serialize(StandardMultigraph::from_simple(h)));
                std::cout << "n=" << h.order() << " m=" << h.edge_count() << "\n";
            } else if (reduce_mode == "to-multigraph") {
                auto* d = std::get_if<SimpleDigraph>(&any);
                if (!d) throw TypeMismatch("to-multigraph needs a .dg input");
                StandardMultigraph m = digraph_to_multigraph(*d);
                write_file(reduce_out, serialize(m));
                std::cout << "n=" << m.order() << " e=" << m.edge_total() << "\n";
            } else {
                std::cerr << "reduce: unknown --mode '" << reduce_mode << "'\n";
                return 3;
            }
            return 0;
        }

        if (verify->parsed()) {
            VerificationReport rep;
            if (campaign == "li-triangle") {
                LiTriangleOptions opt;
                opt.threads = v_threads;
                opt.budget = v_budget;
                if (verify_mode == "exhaustive") opt.mode = LiTriangleOptions::Mode::Exhaustive;
                else if (verify_mode == "pruned") opt.mode = LiTriangleOptions::Mode::Pruned;
                else if (verify_mode != "auto") {
                    std::cerr << "verify: unknown --mode '" << verify_mode << "'\n";
                    return 3;
                }
                rep = check_li_triangle(v_n, opt);
            } else if (campaign == "multigraph-turan") {
                TuranOptions opt;
                opt.threads = v_threads;
                opt.budget = v_budget;
                rep = check_multigraph_turan(v_n, v_s, v_r, opt);
            } else if (campaign == "property-suite") {
                PropertySuiteOptions opt;
                opt.seed = v_seed;
                rep = property_suite(v_trials, opt);
            } else {
                std::cerr << "verify: unknown campaign '" << campaign << "'\n";
                return 3;
            }
            std::cout << report_to_text(rep);
            if (!verify_out.empty()) write_file(verify_out, report_to_json(rep).dump(2) + "\n");
            return verdict_exit(rep);
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 64;
    } catch (const TypeMismatch& e) {
        std::cerr << "type mismatch: " << e.what() << "\n";
        return 65;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid parameters: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
