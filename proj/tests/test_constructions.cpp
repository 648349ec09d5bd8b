#include <doctest.h>

#include <random>
#include <set>

#include "rainbow/constructions.hpp"
#include "rainbow/patterns.hpp"
#include "rainbow/transforms.hpp"

#include "helpers.hpp"

using namespace rainbow;

TEST_CASE("proper multipartite coloring: shape, properness, palette") {
    EdgeColoredGraph g = proper_multipartite(2, 2);
    CHECK(g.order() == 4);
    CHECK(g.edge_count() == 4);
    CHECK(is_properly_colored(g));
    CHECK(g.palette_size() == 2); // a 1-factorization of C_4

    EdgeColoredGraph h = proper_multipartite(3, 2);
    CHECK(h.edge_count() == 12);
    CHECK(is_properly_colored(h));

    CHECK_THROWS_AS(proper_multipartite(0, 2), std::invalid_argument);
}

TEST_CASE("proper multipartite graphs admit no rainbow clique above the part count") {
    // exhaustive across every shape with at most 12 vertices
    for (int parts = 2; parts <= 6; ++parts)
        for (int class_size = 2; parts * class_size <= 12; ++class_size) {
            EdgeColoredGraph g = proper_multipartite(parts, class_size);
            CHECK(is_properly_colored(g));
            CHECK(find_rainbow_clique(g, parts + 1).status == SearchStatus::Absent);
            // color degree is exactly (parts-1) * class_size = n - class_size
            ColorDegreeProfile p = color_degree_profile(g);
            CHECK(p.minimum == g.order() - class_size);
            CHECK(p.average == Rational(g.order() - class_size));
        }
}

TEST_CASE("rainbow multipartite: injective palette, no clique above part count") {
    EdgeColoredGraph g = rainbow_multipartite(3, 3);
    CHECK(g.order() == 9);
    CHECK(g.palette_size() == g.edge_count());
    std::vector<int> all;
    for (int v = 0; v < g.order(); ++v) all.push_back(v);
    CHECK(is_rainbow(g, all));
    CHECK(find_rainbow_clique(g, 4).status == SearchStatus::Absent);
    CHECK(find_rainbow_clique(g, 3).found());
}

TEST_CASE("regular tournaments") {
    SimpleDigraph t3 = regular_tournament(3);
    CHECK(find_cyclic_triangle(t3).found());

    SimpleDigraph t7 = regular_tournament(7);
    CHECK(t7.arc_count() == 21);
    CHECK(t7.is_oriented());
    for (int v = 0; v < 7; ++v) {
        CHECK(t7.out_degree(v) == 3);
        CHECK(t7.in_degree(v) == 3);
    }
    CHECK_THROWS_AS(regular_tournament(6), std::invalid_argument);

    CHECK(color_degree_profile(orientation_coloring(t7)).minimum == 4);
}

TEST_CASE("statement (ii) construction: exact color degrees and fresh cross palette") {
    EdgeColoredGraph a = statement_ii_construction(3, 1, 3, 5);
    CHECK(a.order() == 5);
    for (int v = 0; v < 5; ++v) CHECK(color_degree(a, v) == 3);
    // 3 > (1 - 1/(2(s-1-r))) n = 2.5
    CHECK(Rational(3) > (Rational(1) - Rational(1, 2 * (3 - 1 - 1))) * 5);

    EdgeColoredGraph b = statement_ii_construction(4, 1, 4, 3);
    CHECK(b.order() == 6); // two classes of three
    std::set<int> cross;
    int cross_edges = 0;
    for (std::size_t i = 0; i < b.edges().size(); ++i) {
        auto [u, v] = b.edges()[i];
        if (u / 3 != v / 3) {
            cross.insert(b.color_of_index(i));
            ++cross_edges;
        }
    }
    CHECK(cross_edges == 9);
    CHECK(static_cast<int>(cross.size()) == cross_edges); // injective
    for (int c : cross) CHECK(c >= b.order());            // above the head-id palette
    for (int v = 0; v < 6; ++v) CHECK(color_degree(b, v) == 6 - 3 + 2);

    // within-class pieces are orientation colorings: no dense proper subgraph
    CHECK_FALSE(find_properly_colored_excess(a, 5).has_value());
    for (int cls = 0; cls < 2; ++cls) {
        std::vector<std::tuple<int, int, int>> inner;
        for (std::size_t i = 0; i < b.edges().size(); ++i) {
            auto [u, v] = b.edges()[i];
            if (u / 3 == cls && v / 3 == cls)
                inner.push_back({u - 3 * cls, v - 3 * cls, b.color_of_index(i)});
        }
        EdgeColoredGraph class_piece(3, inner);
        CHECK_FALSE(find_properly_colored_excess(class_piece, 5).has_value());
    }

    CHECK_THROWS_AS(statement_ii_construction(3, 1, 3, 4), std::invalid_argument); // L even
    CHECK_THROWS_AS(statement_ii_construction(3, 1, 2, 5), std::invalid_argument); // ell small
    CHECK_THROWS_AS(statement_ii_construction(2, 1, 9, 5), std::invalid_argument); // s < 1+2r
}

TEST_CASE("li average construction") {
    EdgeColoredGraph g3 = li_average_construction(3);
    CHECK(g3.color(0, 1) == 1);
    CHECK(g3.color(0, 2) == 2);
    CHECK(g3.color(1, 2) == 2);
    CHECK(find_rainbow_clique(g3, 3).status == SearchStatus::Absent);

    EdgeColoredGraph g6 = li_average_construction(6);
    CHECK(find_rainbow_clique(g6, 3).status == SearchStatus::Absent);
    ColorDegreeProfile p = color_degree_profile(g6);
    CHECK(p.average == Rational(10, 3));
    CHECK(p.average == Rational(6 + 1, 2) - Rational(1, 6));

    // both edges into the top of any triangle share its color
    for (int n : {4, 7}) {
        EdgeColoredGraph g = li_average_construction(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = j + 1; k < n; ++k) CHECK(g.color(i, k) == g.color(j, k));
    }
}

TEST_CASE("random colored graphs are reproducible") {
    EdgeColoredGraph a = random_colored_graph(12, 0.4, 5, 99);
    EdgeColoredGraph b = random_colored_graph(12, 0.4, 5, 99);
    CHECK(a == b);
    EdgeColoredGraph c = random_colored_graph(12, 0.4, 5, 100);
    CHECK_FALSE(a == c);

    CHECK(random_colored_graph(8, 0.0, 3, 1).edge_count() == 0);
    EdgeColoredGraph full = random_colored_graph(8, 1.0, 1, 1);
    CHECK(full.edge_count() == 28);
    for (std::size_t i = 0; i < full.edges().size(); ++i) CHECK(full.color_of_index(i) == 0);
}

TEST_CASE("pattern digraph generators respect their parameter ranges") {
    CHECK(pattern_ks_minus_matching(6, 3).arc_count() == 30 - 3);
    CHECK(pattern_ks_minus_tri_matching(5, 1).arc_count() == 20 - 4);
    CHECK_THROWS_AS(pattern_ks_minus_matching(3, 2), std::invalid_argument);
    CHECK_THROWS_AS(pattern_ks_minus_tri_matching(4, 1), std::invalid_argument);
}
