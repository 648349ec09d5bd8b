#include <doctest.h>

#include <array>
#include <random>

#include "rainbow/constructions.hpp"
#include "rainbow/patterns.hpp"
#include "rainbow/transforms.hpp"

#include "helpers.hpp"

using namespace rainbow;

namespace {

EdgeColoredGraph rainbow_complete(int n) {
    std::vector<std::tuple<int, int, int>> es;
    int c = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.push_back({u, v, c++});
    return EdgeColoredGraph(n, std::move(es));
}

} // namespace

TEST_CASE("rainbow and proper predicates") {
    EdgeColoredGraph rk4 = rainbow_complete(4);
    std::vector<int> all4 = {0, 1, 2, 3};
    CHECK(is_rainbow(rk4, all4));
    CHECK(is_properly_colored(rk4, all4));

    EdgeColoredGraph mono(3, {{0, 1, 0}, {0, 2, 0}, {1, 2, 0}});
    CHECK_FALSE(is_rainbow(mono, {0, 1, 2}));
    EdgeColoredGraph p3(3, {{0, 1, 5}, {1, 2, 5}});
    CHECK_FALSE(is_properly_colored(p3, {0, 1, 2}));
}

TEST_CASE("C_4 inside a properly colored K_33 is rainbow iff opposite colors differ") {
    EdgeColoredGraph g = proper_multipartite(2, 3); // classes {0,1,2} and {3,4,5}
    bool some_non_rainbow = false;
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b)
            for (int c = 3; c < 6; ++c)
                for (int d = c + 1; d < 6; ++d) {
                    std::vector<int> s = {a, b, c, d};
                    bool opposite_share = g.color(a, c) == g.color(b, d) ||
                                          g.color(a, d) == g.color(b, c);
                    CHECK(is_rainbow(g, s) == !opposite_share);
                    some_non_rainbow = some_non_rainbow || opposite_share;
                }
    CHECK(some_non_rainbow);
}

TEST_CASE("orientation colorings make dense subgraphs improper") {
    EdgeColoredGraph t7 = orientation_coloring(regular_tournament(7));
    // any vertex set spanning more edges than vertices cannot be proper
    for (std::uint64_t mask = 0; mask < (1u << 7); ++mask) {
        std::vector<int> s;
        for (int v = 0; v < 7; ++v)
            if (mask & (1u << v)) s.push_back(v);
        if (s.size() < 3) continue;
        int edges = 0;
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j)
                if (t7.has_edge(s[i], s[j])) ++edges;
        if (edges > static_cast<int>(s.size())) CHECK_FALSE(is_properly_colored(t7, s));
    }
}

TEST_CASE("rainbow clique search on the theorem controls") {
    // extremal configuration: properly colored K^3_3 has no rainbow K_4
    CHECK(find_rainbow_clique(proper_multipartite(3, 3), 4).status == SearchStatus::Absent);
    // tournament coloring on 7 vertices has no rainbow K_4
    CHECK(find_rainbow_clique(orientation_coloring(regular_tournament(7)), 4).status ==
          SearchStatus::Absent);
    // a rainbow K_4 embedded in monochromatic noise is found
    std::vector<std::tuple<int, int, int>> es;
    int c = 1;
    for (int u = 2; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v) es.push_back({u, v, c++});
    es.push_back({0, 1, 0});
    es.push_back({0, 2, 0});
    es.push_back({1, 2, 0});
    EdgeColoredGraph g(6, es);
    SearchResult res = find_rainbow_clique(g, 4);
    REQUIRE(res.found());
    PatternSpec spec;
    spec.kind = PatternKind::RainbowClique;
    spec.s = 4;
    CHECK(validate_witness(g, spec, *res.witness));
    CHECK(res.witness->vertices == std::vector<int>{2, 3, 4, 5});
}

TEST_CASE("clique searcher matches naive enumeration up to seven vertices") {
    std::mt19937_64 rng(101);
    for (int t = 0; t < 150; ++t) {
        int n = 2 + static_cast<int>(rng() % 6);
        EdgeColoredGraph g = random_colored_graph(n, 0.6, 1 + static_cast<int>(rng() % 5), rng());
        for (int s = 2; s <= std::min(5, n); ++s) {
            SearchResult res = find_rainbow_clique(g, s);
            CHECK(res.found() == testutil::naive_rainbow_clique(g, s));
            if (res.found()) {
                PatternSpec spec;
                spec.kind = PatternKind::RainbowClique;
                spec.s = s;
                CHECK(validate_witness(g, spec, *res.witness));
            }
        }
    }
    for (int t = 0; t < 60; ++t) {
        EdgeColoredGraph g = random_colored_graph(7, 0.7, 2 + static_cast<int>(rng() % 10), rng());
        for (int s = 3; s <= 6; ++s)
            CHECK(find_rainbow_clique(g, s).found() == testutil::naive_rainbow_clique(g, s));
        CHECK(find_rainbow_join(g, 0, 3, 2).found() == testutil::naive_rainbow_join(g, 0, 3, 2));
        CHECK(find_rainbow_join(g, 1, 3, 2).found() == testutil::naive_rainbow_join(g, 1, 3, 2));
    }
}

TEST_CASE("join search: a big rainbow clique hosts every join") {
    EdgeColoredGraph g = rainbow_complete(7);
    SearchResult res = find_rainbow_join(g, 1, 3, 3); // K_1 v K^3_2, 7 vertices
    REQUIRE(res.found());
    PatternSpec spec;
    spec.kind = PatternKind::RainbowJoin;
    spec.r = 1;
    spec.s = 3;
    spec.ell = 3;
    CHECK(validate_witness(g, spec, *res.witness));
}

TEST_CASE("join search with ell=1 degenerates to the clique search") {
    std::mt19937_64 rng(202);
    for (int t = 0; t < 50; ++t) {
        int n = 3 + static_cast<int>(rng() % 4);
        EdgeColoredGraph g = random_colored_graph(n, 0.7, 1 + static_cast<int>(rng() % 6), rng());
        for (int s = 2; s <= std::min(5, n); ++s) {
            int r = static_cast<int>(rng() % (static_cast<std::uint64_t>((s - 1) / 2) + 1));
            CHECK(find_rainbow_join(g, r, s, 1).found() == find_rainbow_clique(g, s).found());
        }
    }
}

TEST_CASE("join searcher matches naive enumeration") {
    std::mt19937_64 rng(303);
    const std::vector<std::array<int, 3>> params = {{0, 2, 2}, {1, 3, 1}, {0, 3, 2}, {1, 3, 2}, {2, 5, 1}};
    for (int t = 0; t < 60; ++t) {
        int n = 4 + static_cast<int>(rng() % 3);
        EdgeColoredGraph g = random_colored_graph(n, 0.75, 2 + static_cast<int>(rng() % 8), rng());
        for (const auto& [r, s, ell] : params) {
            SearchResult res = find_rainbow_join(g, r, s, ell);
            CHECK(res.found() == testutil::naive_rainbow_join(g, r, s, ell));
        }
    }
}

TEST_CASE("statement (ii) instance has no rainbow K_33") {
    EdgeColoredGraph g = statement_ii_construction(3, 1, 3, 9);
    REQUIRE(g.order() == 9);
    CHECK(find_rainbow_join(g, 0, 2, 3).status == SearchStatus::Absent);
}

TEST_CASE("multigraph pattern search basics") {
    StandardMultigraph heavy5 = StandardMultigraph::all_heavy(5);
    CHECK(find_multigraph_pattern(heavy5, 5, 0).found());

    // one light pair: needs the matching allowance
    std::vector<std::tuple<int, int, int>> es;
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) es.push_back({u, v, (u == 0 && v == 1) ? 1 : 2});
    StandardMultigraph m(5, es);
    CHECK(find_multigraph_pattern(m, 5, 1).found());
    CHECK(find_multigraph_pattern(m, 5, 0).status == SearchStatus::Absent);
    // exact-induced mode distinguishes the r = 1 copy from an r = 0 request
    CHECK(find_multigraph_pattern(m, 5, 1, true).found());
    CHECK_FALSE(find_multigraph_pattern(heavy5, 5, 1, true).found());
    CHECK(find_multigraph_pattern(heavy5, 5, 1, false).found());
}

TEST_CASE("multigraph searcher matches naive enumeration") {
    std::mt19937_64 rng(404);
    for (int t = 0; t < 200; ++t) {
        int n = 3 + static_cast<int>(rng() % 4);
        StandardMultigraph m = testutil::random_multigraph(n, rng);
        for (int s = 3; s <= std::min(5, n); ++s)
            for (int r = 0; 2 * r <= s; ++r)
                for (bool exact : {false, true}) {
                    SearchResult res = find_multigraph_pattern(m, s, r, exact);
                    CHECK(res.found() == testutil::naive_multigraph_pattern(m, s, r, exact));
                    if (res.found()) {
                        PatternSpec spec;
                        spec.kind = PatternKind::MultigraphKsMr;
                        spec.s = s;
                        spec.r = r;
                        spec.exact_induced = exact;
                        CHECK(validate_witness(m, spec, *res.witness));
                    }
                }
    }
}

TEST_CASE("scaled threshold evidence on four vertices") {
    // every standard multigraph on 4 vertices with e(M) > 8 = (1/2) * 16
    // contains three points spanning five or more edges
    for (int idx = 0; idx < 729; ++idx) {
        int x = idx;
        std::vector<std::tuple<int, int, int>> es;
        for (int u = 0; u < 4; ++u)
            for (int v = u + 1; v < 4; ++v) {
                static_cast<void>(v);
                int mult = x % 3;
                x /= 3;
                if (mult > 0) es.push_back({u, v, mult});
            }
        StandardMultigraph m(4, es);
        if (m.edge_total() > 8) CHECK(find_multigraph_pattern(m, 3, 1).found());
    }
}

TEST_CASE("matching shrink: a wider light matching still hosts the smaller pattern") {
    // all-heavy K_7 with light pairs {0,1},{2,3},{4,5}: a 3-matching witness on
    // 7 = 2*5 - 2*1 - 1 vertices shrinks to the (s=5, r=1) pattern
    std::vector<std::tuple<int, int, int>> es;
    for (int u = 0; u < 7; ++u)
        for (int v = u + 1; v < 7; ++v) {
            bool light = (u == 0 && v == 1) || (u == 2 && v == 3) || (u == 4 && v == 5);
            es.push_back({u, v, light ? 1 : 2});
        }
    StandardMultigraph m(7, es);
    SearchResult res = find_multigraph_pattern(m, 5, 1);
    REQUIRE(res.found());
    PatternSpec spec;
    spec.kind = PatternKind::MultigraphKsMr;
    spec.s = 5;
    spec.r = 1;
    CHECK(validate_witness(m, spec, *res.witness));
}

TEST_CASE("monotonicity: strengthening the host keeps existing witnesses valid") {
    std::mt19937_64 rng(505);
    for (int t = 0; t < 100; ++t) {
        int n = 4 + static_cast<int>(rng() % 3);
        EdgeColoredGraph g = random_colored_graph(n, 0.6, 3 + static_cast<int>(rng() % 6), rng());
        SearchResult res = find_rainbow_clique(g, 3);
        if (res.found()) {
            // add a fresh-colored edge somewhere it is missing
            std::vector<std::tuple<int, int, int>> es;
            for (std::size_t i = 0; i < g.edges().size(); ++i)
                es.push_back({g.edges()[i].first, g.edges()[i].second, g.color_of_index(i)});
            bool added = false;
            for (int u = 0; u < n && !added; ++u)
                for (int v = u + 1; v < n && !added; ++v)
                    if (!g.has_edge(u, v)) {
                        es.push_back({u, v, 1000});
                        added = true;
                    }
            if (added) {
                EdgeColoredGraph g2(n, es);
                PatternSpec spec;
                spec.kind = PatternKind::RainbowClique;
                spec.s = 3;
                CHECK(validate_witness(g2, spec, *res.witness));
                CHECK(find_rainbow_clique(g2, 3).found());
            }
        }
        StandardMultigraph m = testutil::random_multigraph(n, rng);
        SearchResult mres = find_multigraph_pattern(m, 3, 1);
        if (mres.found()) {
            std::vector<std::tuple<int, int, int>> es;
            bool raised = false;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) {
                    int mu = m.multiplicity(u, v);
                    if (!raised && mu < 2) {
                        mu = mu + 1;
                        raised = true;
                    }
                    if (mu > 0) es.push_back({u, v, mu});
                }
            StandardMultigraph m2(n, es);
            if (raised) CHECK(find_multigraph_pattern(m2, 3, 1).found());
        }
    }
}

TEST_CASE("digraph pattern search basics") {
    // definitional: the pattern digraph hosts itself
    SimpleDigraph pat = pattern_ks_minus_tri_matching(5, 1);
    SearchResult res = find_digraph_pattern(pat, 5, 1, true);
    REQUIRE(res.found());
    PatternSpec spec;
    spec.kind = PatternKind::DigraphKsTriMr;
    spec.s = 5;
    spec.r = 1;
    spec.with_triangle = true;
    CHECK(validate_witness(pat, spec, *res.witness));

    // complete digraphs host every legal pattern
    SimpleDigraph k6 = SimpleDigraph::complete(6);
    for (int s = 3; s <= 6; ++s) {
        for (int r = 0; 2 * r <= s; ++r) CHECK(find_digraph_pattern(k6, s, r, false).found());
        for (int r = 0; 2 * r <= s - 3; ++r) CHECK(find_digraph_pattern(k6, s, r, true).found());
    }

    // tournaments have no 2-cycles, so Ks - M_r with uncovered pairs fails
    std::mt19937_64 rng(606);
    for (int t = 0; t < 10; ++t) {
        SimpleDigraph tour = testutil::random_tournament(4, rng);
        CHECK(find_digraph_pattern(tour, 3, 1, false).status == SearchStatus::Absent);
    }
}

TEST_CASE("digraph searcher matches naive enumeration (includes all 4-tournaments)") {
    std::mt19937_64 rng(707);
    // every orientation assignment of K_4 covers all 4 tournaments up to iso
    for (int mask = 0; mask < 64; ++mask) {
        std::vector<Arc> as;
        int bit = 0;
        for (int u = 0; u < 4; ++u)
            for (int v = u + 1; v < 4; ++v, ++bit) {
                if (mask & (1 << bit))
                    as.push_back({u, v});
                else
                    as.push_back({v, u});
            }
        SimpleDigraph tour(4, as);
        for (int s = 3; s <= 4; ++s)
            for (int r = 0; 2 * r <= s; ++r)
                CHECK(find_digraph_pattern(tour, s, r, false).found() ==
                      testutil::naive_digraph_pattern(tour, s, r, false));
    }
    for (int t = 0; t < 120; ++t) {
        int n = 3 + static_cast<int>(rng() % 4);
        SimpleDigraph d = testutil::random_digraph(n, rng, 55 + static_cast<int>(rng() % 40));
        for (int s = 3; s <= std::min(5, n); ++s) {
            for (int r = 0; 2 * r <= s; ++r)
                CHECK(find_digraph_pattern(d, s, r, false).found() ==
                      testutil::naive_digraph_pattern(d, s, r, false));
            for (int r = 0; 2 * r <= s - 3; ++r) {
                SearchResult res = find_digraph_pattern(d, s, r, true);
                CHECK(res.found() == testutil::naive_digraph_pattern(d, s, r, true));
                if (res.found()) {
                    PatternSpec spec;
                    spec.kind = PatternKind::DigraphKsTriMr;
                    spec.s = s;
                    spec.r = r;
                    spec.with_triangle = true;
                    CHECK(validate_witness(d, spec, *res.witness));
                }
            }
        }
    }
}

TEST_CASE("digraph and multigraph patterns agree through orientation-blindness") {
    std::mt19937_64 rng(808);
    for (int t = 0; t < 100; ++t) {
        int n = 4 + static_cast<int>(rng() % 3);
        SimpleDigraph d = testutil::random_digraph(n, rng, 70);
        StandardMultigraph m = digraph_to_multigraph(d);
        for (int s = 3; s <= std::min(5, n); ++s)
            for (int r = 0; 2 * r <= s; ++r)
                CHECK(find_digraph_pattern(d, s, r, false).found() ==
                      find_multigraph_pattern(m, s, r).found());
    }
}

TEST_CASE("cyclic triangle search") {
    // transitive tournaments have none
    std::vector<Arc> as;
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v) as.push_back({u, v});
    CHECK(find_cyclic_triangle(SimpleDigraph(6, as)).status == SearchStatus::Absent);

    SearchResult res = find_cyclic_triangle(regular_tournament(3));
    REQUIRE(res.found());
    CHECK(res.witness->vertices == std::vector<int>{0, 1, 2});

    std::mt19937_64 rng(909);
    for (int t = 0; t < 100; ++t) {
        SimpleDigraph d = testutil::random_digraph(12, rng, 20 + static_cast<int>(rng() % 30));
        SearchResult r2 = find_cyclic_triangle(d);
        CHECK(r2.found() == testutil::naive_cyclic_triangle(d));
        if (r2.found()) {
            PatternSpec spec;
            spec.kind = PatternKind::CyclicTriangle;
            CHECK(validate_witness(d, spec, *r2.witness));
        }
    }
}

TEST_CASE("fresh-color vertex selection on a constructed instance") {
    // A = {0,1} with one internal color, B sized past |A| * e(G[A])
    std::vector<std::tuple<int, int, int>> es = {{0, 1, 0}};
    // cross colors: a latin pattern with one symbol clashing with color 0
    int cols, rows = 2;
    cols = 3;
    int symbol_color[3] = {0, 7, 8};
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) es.push_back({i, 2 + j, symbol_color[(i + j) % 3]});
    EdgeColoredGraph g(5, es);
    std::optional<int> b0 = find_fresh_color_vertex(g, {0, 1}, {2, 3, 4});
    REQUIRE(b0.has_value());
    CHECK(g.color(0, *b0) != 0);
    CHECK(g.color(1, *b0) != 0);
}

TEST_CASE("greedy rainbow join growth on an all-distinct instance") {
    EdgeColoredGraph g = rainbow_complete(7);
    std::optional<Witness> w = grow_rainbow_join(g, {0}, {{1, 2, 3}, {4, 5, 6}}, 2);
    REQUIRE(w.has_value());
    CHECK(w->vertices.size() == 5);
    CHECK(is_rainbow(g, w->vertices));
}

TEST_CASE("properly colored excess scan") {
    // a rainbow K_4 is itself properly colored with 6 edges on 4 vertices
    CHECK(find_properly_colored_excess(rainbow_complete(4), 5).has_value());
    // orientation colorings never reach |E| > |V|
    std::mt19937_64 rng(111);
    for (int t = 0; t < 15; ++t) {
        SimpleDigraph d = testutil::random_tournament(7, rng);
        CHECK_FALSE(find_properly_colored_excess(orientation_coloring(d), 5).has_value());
    }
}

TEST_CASE("node budget reports exhaustion instead of absence") {
    EdgeColoredGraph g = random_colored_graph(12, 0.9, 40, 5);
    SearchLimits limits;
    limits.node_cap = 3;
    SearchResult res = find_rainbow_clique(g, 6, limits);
    if (!res.found()) CHECK(res.status == SearchStatus::Exhausted);
    CHECK(res.nodes <= 4);
}

TEST_CASE("pattern spec validation") {
    CHECK_THROWS_AS(find_rainbow_clique(rainbow_complete(3), 1), std::invalid_argument);
    CHECK_THROWS_AS(find_rainbow_join(rainbow_complete(3), 2, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(find_rainbow_join(rainbow_complete(3), 0, 2, 0), std::invalid_argument);
    CHECK_THROWS_AS(find_multigraph_pattern(StandardMultigraph(4), 3, 2), std::invalid_argument);
    CHECK_THROWS_AS(find_digraph_pattern(SimpleDigraph(4, {}), 4, 1, true), std::invalid_argument);
    CHECK_THROWS_AS(find_digraph_pattern(SimpleDigraph(4, {}), 3, 2, false), std::invalid_argument);
}
