#pragma once

// Generators for the explicit colorings and digraphs used as positive and
// negative controls: properly colored complete multipartite graphs, regular
// tournaments, the piecewise sharpness coloring, the max-endpoint coloring of
// K_n, seeded random instances, and the near-complete digraph patterns.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "rainbow/core.hpp"
#include "rainbow/transforms.hpp"

namespace rainbow {

namespace detail {

// Round-robin one-factorization color of pair {u,v} inside K_N.  For even N
// the circle method gives N-1 rounds (vertex N-1 fixed); for odd N every
// vertex sits out one of N rounds.  Colors are round indices, so adjacent
// pairs never share one.
inline int round_robin_color(int big_n, int u, int v) {
    if (big_n % 2 == 0) {
        int mod = big_n - 1;
        if (v == big_n - 1) return u;
        if (u == big_n - 1) return v;
        // pairs of round r satisfy u + v = 2r (mod N-1); N-1 odd so 2 inverts
        int inv2 = (mod + 1) / 2;
        return static_cast<int>((static_cast<long long>(u + v) * inv2) % mod);
    }
    int inv2 = (big_n + 1) / 2;
    return static_cast<int>((static_cast<long long>(u + v) * inv2) % big_n);
}

} // namespace detail

/// K^L_parts with a proper edge coloring from a round-robin one-factorization
/// of K_{parts*L} restricted to cross edges.  Classes are the contiguous
/// blocks [iL, (i+1)L).
inline EdgeColoredGraph proper_multipartite(int parts, int class_size) {
    if (parts < 1 || class_size < 1)
        throw std::invalid_argument("proper_multipartite: parts >= 1 and L >= 1 required");
    const int n = parts * class_size;
    std::vector<std::tuple<int, int, int>> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (u / class_size != v / class_size)
                es.push_back({u, v, detail::round_robin_color(n, u, v)});
    return canonicalize_colors(EdgeColoredGraph(n, std::move(es)));
}

/// K^L_parts with an injective (rainbow) coloring; the average-color-degree
/// sharpness instance for the multipartite target.
inline EdgeColoredGraph rainbow_multipartite(int parts, int class_size) {
    if (parts < 1 || class_size < 1)
        throw std::invalid_argument("rainbow_multipartite: parts >= 1 and L >= 1 required");
    const int n = parts * class_size;
    std::vector<std::tuple<int, int, int>> es;
    int next = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (u / class_size != v / class_size) es.push_back({u, v, next++});
    return EdgeColoredGraph(n, std::move(es));
}

/// Rotational regular tournament on odd n: arcs (i, i+j mod n) for
/// j = 1..(n-1)/2.  All in/out degrees are (n-1)/2.
inline SimpleDigraph regular_tournament(int n) {
    if (n < 1 || n % 2 == 0)
        throw std::invalid_argument("regular_tournament: n must be odd and positive");
    std::vector<Arc> as;
    for (int i = 0; i < n; ++i)
        for (int j = 1; j <= (n - 1) / 2; ++j) as.push_back({i, (i + j) % n});
    return SimpleDigraph(n, std::move(as));
}

/// The piecewise sharpness coloring on K_n, n = L(s-1-r): fresh injective
/// colors across classes, tournament coloring c(D) inside each class of size
/// L.  Every vertex gets color degree n - L + (L+1)/2.  ell only parametrizes
/// the join target the instance defeats; the graph depends on (s, r, L).
inline EdgeColoredGraph statement_ii_construction(int s, int r, int ell, int class_size) {
    const int L = class_size;
    if (r < 0 || s < std::max(1 + 2 * r, 2))
        throw std::invalid_argument("statement_ii_construction: s >= max{1+2r, 2} required");
    if (ell < 1 + s - r)
        throw std::invalid_argument("statement_ii_construction: ell >= 1+s-r required");
    if (L < 3 || L % 2 == 0)
        throw std::invalid_argument(
            "statement_ii_construction: L must be odd and >= 3 (the within-class "
            "tournament needs a nonempty in-neighborhood at every vertex)");
    const int classes = s - 1 - r;
    if (classes < 1) throw std::invalid_argument("statement_ii_construction: s - 1 - r >= 1 required");
    const int n = L * classes;
    SimpleDigraph t = regular_tournament(L);
    std::vector<std::tuple<int, int, int>> es;
    int fresh = n; // cross-class palette lives above the vertex-id palette
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (u / L == v / L) {
                int base = (u / L) * L;
                int a = u - base, b = v - base;
                int head = t.has_arc(a, b) ? v : u;
                es.push_back({u, v, head});
            } else {
                es.push_back({u, v, fresh++});
            }
        }
    return EdgeColoredGraph(n, std::move(es));
}

/// K_n with c(ij) = max(i, j): the average-color-degree sharpness example.
/// Both edges of any triangle into its largest vertex share that vertex's
/// color, so no triangle is rainbow.
inline EdgeColoredGraph li_average_construction(int n) {
    if (n < 2) throw std::invalid_argument("li_average_construction: n >= 2 required");
    std::vector<std::tuple<int, int, int>> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.push_back({i, j, j});
    return EdgeColoredGraph(n, std::move(es));
}

/// Reproducible random instance: each pair kept with probability edge_prob,
/// colors uniform over the palette.  The raw mt19937_64 stream is mapped
/// explicitly so outputs are identical across platforms.
inline EdgeColoredGraph random_colored_graph(int n, double edge_prob, int palette,
                                             std::uint64_t seed) {
    if (n < 0 || edge_prob < 0.0 || edge_prob > 1.0 || palette < 1)
        throw std::invalid_argument("random_colored_graph: bad parameters");
    std::mt19937_64 rng(seed);
    auto unit = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    std::vector<std::tuple<int, int, int>> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            double roll = unit();
            int c = static_cast<int>(rng() % static_cast<std::uint64_t>(palette));
            if (roll < edge_prob) es.push_back({u, v, c});
        }
    return EdgeColoredGraph(n, std::move(es));
}

// ---------------------------------------------------------------------------
// Near-complete digraph patterns (canonical instances)

/// Complete digraph on s vertices minus the oriented matching
/// (0,1),(2,3),...,(2r-2,2r-1).
inline SimpleDigraph pattern_ks_minus_matching(int s, int r) {
    if (s < 1 || r < 0 || 2 * r > s)
        throw std::invalid_argument("pattern_ks_minus_matching: 0 <= r <= s/2 required");
    std::vector<Arc> as;
    for (int u = 0; u < s; ++u)
        for (int v = 0; v < s; ++v) {
            if (u == v) continue;
            bool removed = u + 1 == v && u % 2 == 0 && u < 2 * r;
            if (!removed) as.push_back({u, v});
        }
    return SimpleDigraph(s, std::move(as));
}

/// Complete digraph on s vertices minus one cyclic triangle (0,1),(1,2),(2,0)
/// and the oriented matching (3,4),(5,6),...
inline SimpleDigraph pattern_ks_minus_tri_matching(int s, int r) {
    if (s < 3 || r < 0 || 2 * r > s - 3)
        throw std::invalid_argument("pattern_ks_minus_tri_matching: 0 <= r <= (s-3)/2 required");
    std::vector<Arc> as;
    for (int u = 0; u < s; ++u)
        for (int v = 0; v < s; ++v) {
            if (u == v) continue;
            bool tri = (u == 0 && v == 1) || (u == 1 && v == 2) || (u == 2 && v == 0);
            bool match = u >= 3 && u + 1 == v && (u - 3) % 2 == 0 && u < 3 + 2 * r;
            if (!tri && !match) as.push_back({u, v});
        }
    return SimpleDigraph(s, std::move(as));
}

} // namespace rainbow
