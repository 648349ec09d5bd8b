#pragma once

// The reduction pipeline connecting edge-colored graphs, digraphs and
// standard multigraphs: edge-minimal reduction, (G,c,m)-digraphs, 2-cycle
// graphs, orientation-blind multigraphs, complements, and the coloring
// induced by an orientation.

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "rainbow/core.hpp"

namespace rainbow {

// ---------------------------------------------------------------------------
// Edge-minimal reduction

struct ReductionTrace {
    std::vector<std::pair<Edge, int>> deleted; // (edge, color) in deletion order
    int rounds = 0;                            // full rescans performed
};

/// True when no edge uv has c(uv) appearing at least twice at both u and v;
/// equivalently, no monochromatic walk on three edges exists.
inline bool is_edge_minimal(const EdgeColoredGraph& g) {
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
        auto [u, v] = g.edges()[i];
        int c = g.color_of_index(i);
        int at_u = 0, at_v = 0;
        const Bitset& nu = g.neighbors(u);
        for (std::size_t w = nu.find_first(); w != Bitset::npos; w = nu.find_next(w))
            if (g.color(u, static_cast<int>(w)) == c) ++at_u;
        const Bitset& nv = g.neighbors(v);
        for (std::size_t w = nv.find_first(); w != Bitset::npos; w = nv.find_next(w))
            if (g.color(v, static_cast<int>(w)) == c) ++at_v;
        if (at_u >= 2 && at_v >= 2) return false;
    }
    return true;
}

/// Iteratively delete uv when c(uv) appears at least twice at both endpoints.
/// Scans edges in ascending lexicographic order and restarts after each
/// deletion, so the trace is reproducible.  The result is a spanning subgraph
/// with every color degree preserved.
inline std::pair<EdgeColoredGraph, ReductionTrace> edge_minimal_reduce(const EdgeColoredGraph& g) {
    const int n = g.order();
    std::vector<std::tuple<int, int, int>> es;
    es.reserve(g.edges().size());
    for (std::size_t i = 0; i < g.edges().size(); ++i)
        es.push_back({g.edges()[i].first, g.edges()[i].second, g.color_of_index(i)});

    // Dense color ids so per-(vertex,color) multiplicities live in one table.
    std::vector<int> palette;
    for (const auto& [u, v, c] : es) palette.push_back(c);
    std::sort(palette.begin(), palette.end());
    palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
    const std::size_t k = palette.size();
    auto dense = [&](int c) {
        return static_cast<std::size_t>(
            std::lower_bound(palette.begin(), palette.end(), c) - palette.begin());
    };
    std::vector<int> cnt(static_cast<std::size_t>(n) * std::max<std::size_t>(k, 1), 0);
    for (const auto& [u, v, c] : es) {
        ++cnt[static_cast<std::size_t>(u) * k + dense(c)];
        ++cnt[static_cast<std::size_t>(v) * k + dense(c)];
    }

    ReductionTrace trace;
    bool deleted = true;
    while (deleted) {
        deleted = false;
        ++trace.rounds;
        for (std::size_t i = 0; i < es.size(); ++i) {
            auto [u, v, c] = es[i];
            std::size_t ci = dense(c);
            if (cnt[static_cast<std::size_t>(u) * k + ci] >= 2 &&
                cnt[static_cast<std::size_t>(v) * k + ci] >= 2) {
                trace.deleted.push_back({{u, v}, c});
                --cnt[static_cast<std::size_t>(u) * k + ci];
                --cnt[static_cast<std::size_t>(v) * k + ci];
                es.erase(es.begin() + static_cast<std::ptrdiff_t>(i));
                deleted = true;
                break;
            }
        }
    }
    return {EdgeColoredGraph(n, std::move(es)), std::move(trace)};
}

// ---------------------------------------------------------------------------
// (G, c, m)-digraphs

namespace detail {

template <typename PickRepresentative>
SimpleDigraph build_gcm(const EdgeColoredGraph& g, double m, PickRepresentative pick) {
    if (m < 1.0) throw std::invalid_argument("build_gcm_digraph: m must be >= 1");
    const int n = g.order();
    std::vector<Arc> arcs;
    for (int v = 0; v < n; ++v) {
        // Group N(v) by color; neighbor lists are sorted ascending already.
        std::vector<std::pair<int, int>> by_color; // (color, neighbor)
        const Bitset& nb = g.neighbors(v);
        for (std::size_t w = nb.find_first(); w != Bitset::npos; w = nb.find_next(w))
            by_color.push_back({g.color(v, static_cast<int>(w)), static_cast<int>(w)});
        std::sort(by_color.begin(), by_color.end());
        std::size_t i = 0;
        while (i < by_color.size()) {
            std::size_t j = i;
            while (j < by_color.size() && by_color[j].first == by_color[i].first) ++j;
            std::size_t q_size = j - i;
            // 1 <= |Q| <= m with |Q| integral: exact comparison against m.
            if (static_cast<double>(q_size) <= m) {
                std::vector<int> q;
                for (std::size_t k = i; k < j; ++k) q.push_back(by_color[k].second);
                arcs.push_back({v, pick(v, by_color[i].first, q)});
            }
            i = j;
        }
    }
    return SimpleDigraph(n, std::move(arcs));
}

} // namespace detail

/// Canonical (G,c,m)-digraph: for each vertex v and color class Q at v with
/// 1 <= |Q| <= m, emit the arc (v, min Q).
inline SimpleDigraph build_gcm_digraph(const EdgeColoredGraph& g, double m) {
    return detail::build_gcm(g, m, [](int, int, const std::vector<int>& q) { return q.front(); });
}

/// Randomized realization: the class representative is drawn from the given
/// seed.  The pipeline invariants hold for every realization.
inline SimpleDigraph build_gcm_digraph_seeded(const EdgeColoredGraph& g, double m,
                                              std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return detail::build_gcm(g, m, [&rng](int, int, const std::vector<int>& q) {
        return q[static_cast<std::size_t>(rng() % q.size())];
    });
}

// ---------------------------------------------------------------------------
// Digraph reductions

/// H(D): simple graph whose edges vw are the 2-cycles of D.
inline SimpleGraph two_cycle_graph(const SimpleDigraph& d) {
    std::vector<Edge> es;
    for (int u = 0; u < d.order(); ++u)
        for (int v = u + 1; v < d.order(); ++v)
            if (d.has_arc(u, v) && d.has_arc(v, u)) es.push_back({u, v});
    return SimpleGraph(d.order(), std::move(es));
}

/// M(D): forget orientations; mu(uv) = number of arcs between u and v.
inline StandardMultigraph digraph_to_multigraph(const SimpleDigraph& d) {
    std::vector<std::tuple<int, int, int>> es;
    for (int u = 0; u < d.order(); ++u)
        for (int v = u + 1; v < d.order(); ++v) {
            int m = (d.has_arc(u, v) ? 1 : 0) + (d.has_arc(v, u) ? 1 : 0);
            if (m > 0) es.push_back({u, v, m});
        }
    return StandardMultigraph(d.order(), es);
}

/// Per-ordered-pair complement over non-diagonal pairs; an involution.
inline SimpleDigraph digraph_complement(const SimpleDigraph& d) {
    std::vector<Arc> as;
    for (int u = 0; u < d.order(); ++u)
        for (int v = 0; v < d.order(); ++v)
            if (u != v && !d.has_arc(u, v)) as.push_back({u, v});
    return SimpleDigraph(d.order(), std::move(as));
}

/// c(uv) = v for (u,v) in E(D), defined for oriented D only (a 2-cycle would
/// make the color ambiguous).
inline EdgeColoredGraph orientation_coloring(const SimpleDigraph& d) {
    std::vector<std::tuple<int, int, int>> es;
    for (const auto& [u, v] : d.arcs()) {
        if (d.has_arc(v, u))
            throw std::invalid_argument("orientation_coloring: input contains a 2-cycle");
        es.push_back({u, v, v});
    }
    return EdgeColoredGraph(d.order(), std::move(es));
}

} // namespace rainbow
