#pragma once

// Test-side oracles, kept independent of the library's search/enumeration
// paths: naive subset enumeration for every pattern, a walk-based
// edge-minimality predicate, Bell numbers from the triangle recurrence,
// brute-force canonical codes, and plain seeded generators.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <tuple>
#include <vector>

#include "rainbow/core.hpp"

namespace testutil {

using rainbow::Arc;
using rainbow::Edge;
using rainbow::EdgeColoredGraph;
using rainbow::SimpleDigraph;
using rainbow::SimpleGraph;
using rainbow::StandardMultigraph;

// ---------------------------------------------------------------------------
// Subset machinery

inline void for_each_subset_of_size(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int lo) {
        if (static_cast<int>(cur.size()) == k) {
            fn(cur);
            return;
        }
        for (int v = lo; v < n; ++v) {
            cur.push_back(v);
            rec(v + 1);
            cur.pop_back();
        }
    };
    rec(0);
}

// ---------------------------------------------------------------------------
// Naive pattern oracles

inline bool subset_is_rainbow_clique(const EdgeColoredGraph& g, const std::vector<int>& s_set) {
    std::vector<int> colors;
    for (std::size_t i = 0; i < s_set.size(); ++i)
        for (std::size_t j = i + 1; j < s_set.size(); ++j) {
            if (!g.has_edge(s_set[i], s_set[j])) return false;
            colors.push_back(g.color(s_set[i], s_set[j]));
        }
    std::sort(colors.begin(), colors.end());
    return std::adjacent_find(colors.begin(), colors.end()) == colors.end();
}

inline bool naive_rainbow_clique(const EdgeColoredGraph& g, int s) {
    bool found = false;
    for_each_subset_of_size(g.order(), s, [&](const std::vector<int>& vs) {
        found = found || subset_is_rainbow_clique(g, vs);
    });
    return found;
}

/// Rainbow K_r v K^ell_{s-r} by labeled brute force: every subset of the right
/// size, every arrangement of the label multiset over it.
inline bool naive_rainbow_join(const EdgeColoredGraph& g, int r, int s, int ell) {
    const int total = r + (s - r) * ell;
    if (total > g.order()) return false;
    // label 0..r-1 = join singletons, r + c = class c
    std::vector<int> labels;
    for (int i = 0; i < r; ++i) labels.push_back(i);
    for (int c = 0; c < s - r; ++c)
        for (int i = 0; i < ell; ++i) labels.push_back(r + c);
    std::sort(labels.begin(), labels.end());
    bool found = false;
    for_each_subset_of_size(g.order(), total, [&](const std::vector<int>& vs) {
        if (found) return;
        std::vector<int> lab = labels;
        do {
            bool ok = true;
            std::vector<int> colors;
            for (int i = 0; i < total && ok; ++i)
                for (int j = i + 1; j < total && ok; ++j) {
                    bool same_class = lab[static_cast<std::size_t>(i)] >= r &&
                                      lab[static_cast<std::size_t>(i)] == lab[static_cast<std::size_t>(j)];
                    if (same_class) continue;
                    if (!g.has_edge(vs[static_cast<std::size_t>(i)], vs[static_cast<std::size_t>(j)])) {
                        ok = false;
                        break;
                    }
                    colors.push_back(g.color(vs[static_cast<std::size_t>(i)], vs[static_cast<std::size_t>(j)]));
                }
            if (ok) {
                std::sort(colors.begin(), colors.end());
                ok = std::adjacent_find(colors.begin(), colors.end()) == colors.end();
            }
            if (ok) {
                found = true;
                return;
            }
        } while (std::next_permutation(lab.begin(), lab.end()));
    });
    return found;
}

inline bool subset_is_ks_mr(const StandardMultigraph& m, const std::vector<int>& s_set, int r,
                            bool exact) {
    int lights = 0;
    std::vector<int> touched;
    for (std::size_t i = 0; i < s_set.size(); ++i)
        for (std::size_t j = i + 1; j < s_set.size(); ++j) {
            int mu = m.multiplicity(s_set[i], s_set[j]);
            if (mu == 0) return false;
            if (mu == 1) {
                ++lights;
                touched.push_back(s_set[i]);
                touched.push_back(s_set[j]);
            }
        }
    std::sort(touched.begin(), touched.end());
    if (std::adjacent_find(touched.begin(), touched.end()) != touched.end()) return false;
    return exact ? lights == r : lights <= r;
}

inline bool naive_multigraph_pattern(const StandardMultigraph& m, int s, int r, bool exact) {
    bool found = false;
    for_each_subset_of_size(m.order(), s, [&](const std::vector<int>& vs) {
        found = found || subset_is_ks_mr(m, vs, r, exact);
    });
    return found;
}

/// Enumerate every triangle placement and every oriented matching of size at
/// most r and test the superset containment directly.
inline bool naive_digraph_pattern(const SimpleDigraph& d, int s, int r, bool with_triangle) {
    bool found = false;
    for_each_subset_of_size(d.order(), s, [&](const std::vector<int>& vs) {
        if (found) return;
        auto contained = [&](const std::vector<Arc>& removed) {
            for (int a : vs)
                for (int b : vs) {
                    if (a == b) continue;
                    if (std::find(removed.begin(), removed.end(), Arc{a, b}) != removed.end())
                        continue;
                    if (!d.has_arc(a, b)) return false;
                }
            return true;
        };
        std::function<bool(std::vector<Arc>&, std::vector<int>&, int)> extend_matching =
            [&](std::vector<Arc>& removed, std::vector<int>& used, int budget) {
                if (contained(removed)) return true;
                if (budget == 0) return false;
                for (std::size_t i = 0; i < vs.size(); ++i)
                    for (std::size_t j = 0; j < vs.size(); ++j) {
                        if (i == j) continue;
                        int a = vs[i], b = vs[j];
                        if (std::find(used.begin(), used.end(), a) != used.end()) continue;
                        if (std::find(used.begin(), used.end(), b) != used.end()) continue;
                        removed.push_back({a, b});
                        used.push_back(a);
                        used.push_back(b);
                        if (extend_matching(removed, used, budget - 1)) return true;
                        used.pop_back();
                        used.pop_back();
                        removed.pop_back();
                    }
                return false;
            };
        if (with_triangle) {
            for (std::size_t a = 0; a < vs.size() && !found; ++a)
                for (std::size_t b = 0; b < vs.size() && !found; ++b) {
                    if (b == a) continue;
                    for (std::size_t c = 0; c < vs.size() && !found; ++c) {
                        if (c == a || c == b) continue;
                        std::vector<Arc> removed = {{vs[a], vs[b]}, {vs[b], vs[c]}, {vs[c], vs[a]}};
                        std::vector<int> used = {vs[a], vs[b], vs[c]};
                        if (extend_matching(removed, used, r)) found = true;
                    }
                }
        } else {
            std::vector<Arc> removed;
            std::vector<int> used;
            if (extend_matching(removed, used, r)) found = true;
        }
    });
    return found;
}

inline bool naive_cyclic_triangle(const SimpleDigraph& d) {
    for (int x = 0; x < d.order(); ++x)
        for (int y = 0; y < d.order(); ++y)
            for (int z = 0; z < d.order(); ++z) {
                if (x == y || y == z || x == z) continue;
                if (d.has_arc(x, y) && d.has_arc(y, z) && d.has_arc(z, x)) return true;
            }
    return false;
}

// ---------------------------------------------------------------------------
// Edge-minimality via monochromatic three-edge walks

inline bool has_mono_three_edge_walk(const EdgeColoredGraph& g) {
    const int n = g.order();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    if (a == b || b == c || c == d || a == c || b == d) continue;
                    if (!g.has_edge(a, b) || !g.has_edge(b, c) || !g.has_edge(c, d)) continue;
                    int q = g.color(b, c);
                    if (g.color(a, b) == q && g.color(c, d) == q) return true;
                }
    return false;
}

// ---------------------------------------------------------------------------
// Bell numbers (triangle recurrence)

inline std::vector<unsigned long long> bell_numbers(int up_to) {
    std::vector<std::vector<unsigned long long>> tri;
    tri.push_back({1});
    for (int i = 1; i <= up_to; ++i) {
        std::vector<unsigned long long> row;
        row.push_back(tri.back().back());
        for (std::size_t j = 0; j < tri.back().size(); ++j)
            row.push_back(row.back() + tri.back()[j]);
        tri.push_back(std::move(row));
    }
    std::vector<unsigned long long> bell;
    for (int i = 0; i <= up_to; ++i) bell.push_back(tri[static_cast<std::size_t>(i)].front());
    return bell;
}

// ---------------------------------------------------------------------------
// Independent set-partition enumerator (restricted growth strings)

inline void for_each_set_partition(int m, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> colors(static_cast<std::size_t>(m), 0);
    std::function<void(int, int)> rec = [&](int i, int used) {
        if (i == m) {
            fn(colors);
            return;
        }
        for (int c = 0; c <= used; ++c) {
            colors[static_cast<std::size_t>(i)] = c;
            rec(i + 1, std::max(used, c + 1));
        }
    };
    if (m == 0)
        fn(colors);
    else
        rec(0, 0);
}

// ---------------------------------------------------------------------------
// Brute-force canonical code (all permutations)

/// Isomorphism by trying every vertex bijection.
inline bool brute_is_isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    const int n = a.order();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = i + 1; j < n && ok; ++j)
                if (a.has_edge(i, j) != b.has_edge(perm[static_cast<std::size_t>(i)],
                                                   perm[static_cast<std::size_t>(j)]))
                    ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// ---------------------------------------------------------------------------
// Seeded generators

inline StandardMultigraph random_multigraph(int n, std::mt19937_64& rng) {
    std::vector<std::tuple<int, int, int>> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int mult = static_cast<int>(rng() % 3);
            if (mult > 0) es.push_back({u, v, mult});
        }
    return StandardMultigraph(n, es);
}

inline SimpleDigraph random_digraph(int n, std::mt19937_64& rng, int pct_arc = 50) {
    std::vector<Arc> as;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && static_cast<int>(rng() % 100) < pct_arc) as.push_back({u, v});
    return SimpleDigraph(n, std::move(as));
}

inline SimpleDigraph random_tournament(int n, std::mt19937_64& rng) {
    std::vector<Arc> as;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (rng() % 2)
                as.push_back({u, v});
            else
                as.push_back({v, u});
        }
    return SimpleDigraph(n, std::move(as));
}

} // namespace testutil
