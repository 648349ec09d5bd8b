#pragma once

// Canonical forms for small simple graphs via iterative refinement plus
// backtracking individualization.  Used by the verify campaigns to enumerate
// host graphs up to isomorphism.  Intended for n <= 11 (codes are packed into
// the C(n,2) low bits of a 64-bit word).

#include <array>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "rainbow/core.hpp"

namespace rainbow {

namespace detail {

constexpr int kMaxCanonVertices = 11;

inline std::uint64_t code_under_order(const SimpleGraph& g, const std::vector<int>& order) {
    // Bit b(i,j) for i<j in the *new* labeling, row-major over pairs.
    const int n = g.order();
    std::uint64_t code = 0;
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if (g.has_edge(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]))
                code |= (std::uint64_t{1} << bit);
    return code;
}

// Equitable refinement: repeatedly split cells by neighbor counts into every
// cell until stable.  Cells are kept in a deterministic order.
inline std::vector<std::vector<int>> refine_partition(const SimpleGraph& g,
                                                      std::vector<std::vector<int>> cells) {
    const int n = g.order();
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t ci = 0; ci < cells.size(); ++ci) {
            if (cells[ci].size() <= 1) continue;
            // Signature of v: counts of neighbors in each current cell.
            std::vector<std::pair<std::vector<int>, int>> sigs;
            sigs.reserve(cells[ci].size());
            for (int v : cells[ci]) {
                std::vector<int> sig;
                sig.reserve(cells.size());
                for (const auto& cell : cells) {
                    int cnt = 0;
                    for (int w : cell)
                        if (v != w && g.has_edge(v, w)) ++cnt;
                    sig.push_back(cnt);
                }
                sigs.push_back({std::move(sig), v});
            }
            std::stable_sort(sigs.begin(), sigs.end(),
                             [](const auto& a, const auto& b) { return a.first < b.first; });
            bool split = false;
            for (std::size_t i = 1; i < sigs.size(); ++i)
                if (sigs[i].first != sigs[0].first) { split = true; break; }
            if (!split) continue;
            std::vector<std::vector<int>> pieces;
            for (std::size_t i = 0; i < sigs.size(); ++i) {
                if (i == 0 || sigs[i].first != sigs[i - 1].first) pieces.push_back({});
                pieces.back().push_back(sigs[i].second);
            }
            cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(ci));
            cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(ci), pieces.begin(), pieces.end());
            changed = true;
            break;
        }
        (void)n;
    }
    return cells;
}

inline void canon_search(const SimpleGraph& g, std::vector<std::vector<int>> cells,
                         std::uint64_t& best, bool& have_best) {
    cells = refine_partition(g, std::move(cells));
    // Find first non-singleton cell.
    std::size_t target = cells.size();
    for (std::size_t i = 0; i < cells.size(); ++i)
        if (cells[i].size() > 1) { target = i; break; }
    if (target == cells.size()) {
        std::vector<int> order;
        order.reserve(static_cast<std::size_t>(g.order()));
        for (const auto& cell : cells) order.push_back(cell.front());
        std::uint64_t code = code_under_order(g, order);
        if (!have_best || code < best) { best = code; have_best = true; }
        return;
    }
    for (int v : cells[target]) {
        std::vector<std::vector<int>> next = cells;
        auto& cell = next[target];
        cell.erase(std::find(cell.begin(), cell.end(), v));
        next.insert(next.begin() + static_cast<std::ptrdiff_t>(target), {v});
        canon_search(g, std::move(next), best, have_best);
    }
}

} // namespace detail

/// Canonical edge-set code of g: identical for isomorphic graphs, distinct
/// otherwise (over graphs of the same order).
inline std::uint64_t canonical_code(const SimpleGraph& g) {
    if (g.order() > detail::kMaxCanonVertices)
        throw std::invalid_argument("canonical_code: supported only for n <= 11");
    if (g.order() == 0) return 0;
    // Initial partition by degree (ascending).
    std::vector<int> vs(static_cast<std::size_t>(g.order()));
    std::iota(vs.begin(), vs.end(), 0);
    std::stable_sort(vs.begin(), vs.end(),
                     [&](int a, int b) { return g.degree(a) < g.degree(b); });
    std::vector<std::vector<int>> cells;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i == 0 || g.degree(vs[i]) != g.degree(vs[i - 1])) cells.push_back({});
        cells.back().push_back(vs[i]);
    }
    std::uint64_t best = 0;
    bool have = false;
    detail::canon_search(g, std::move(cells), best, have);
    return best;
}

inline bool is_isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    return canonical_code(a) == canonical_code(b);
}

/// Reconstruct a graph from a canonical code (inverse of code packing).
inline SimpleGraph graph_from_code(int n, std::uint64_t code) {
    std::vector<Edge> es;
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if (code & (std::uint64_t{1} << bit)) es.push_back({i, j});
    return SimpleGraph(n, std::move(es));
}

/// All n-vertex graphs up to isomorphism with minimum degree >= min_degree,
/// as canonical representatives sorted by (edge count, code).
inline std::vector<SimpleGraph> all_graphs_up_to_iso(int n, int min_degree = 0) {
    if (n > 7) throw std::invalid_argument("all_graphs_up_to_iso: supported only for n <= 7");
    const int pairs = n * (n - 1) / 2;
    std::vector<std::uint64_t> codes;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
        SimpleGraph g = graph_from_code(n, mask);
        if (g.min_degree() < min_degree) continue;
        std::uint64_t canon = canonical_code(g);
        if (canon == mask) codes.push_back(mask);
    }
    std::sort(codes.begin(), codes.end(), [&](std::uint64_t a, std::uint64_t b) {
        int pa = static_cast<int>(Bitset(64, a).count());
        int pb = static_cast<int>(Bitset(64, b).count());
        return std::tie(pa, a) < std::tie(pb, b);
    });
    std::vector<SimpleGraph> out;
    out.reserve(codes.size());
    for (auto c : codes) out.push_back(graph_from_code(n, c));
    return out;
}

} // namespace rainbow
