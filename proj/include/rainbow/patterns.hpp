#pragma once

// Exact backtracking searchers for the structures the theory asks about:
// rainbow cliques and joins in edge-colored graphs, near-complete multigraph
// patterns, near-complete digraph patterns, and cyclic triangles.
//
// Searchers report a found / absent / exhausted trichotomy: "absent" is only
// ever returned after full exhaustion, and an optional node cap turns long
// runs into an honest "exhausted".

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rainbow/core.hpp"

namespace rainbow {

enum class PatternKind { RainbowClique, RainbowJoin, MultigraphKsMr, DigraphKsTriMr, CyclicTriangle };

struct PatternSpec {
    PatternKind kind = PatternKind::RainbowClique;
    int s = 2;
    int r = 0;
    int ell = 1;
    bool with_triangle = false;
    bool exact_induced = false;

    void validate() const {
        switch (kind) {
        case PatternKind::RainbowClique:
            if (s < 2) throw std::invalid_argument("RainbowClique: s >= 2 required");
            break;
        case PatternKind::RainbowJoin:
            if (ell < 1) throw std::invalid_argument("RainbowJoin: ell >= 1 required");
            if (r < 0 || s < std::max(1 + 2 * r, 2))
                throw std::invalid_argument("RainbowJoin: s >= max{1+2r, 2} required");
            break;
        case PatternKind::MultigraphKsMr:
            if (s < 1 || r < 0 || 2 * r > s)
                throw std::invalid_argument("MultigraphKsMr: 0 <= r <= s/2 required");
            break;
        case PatternKind::DigraphKsTriMr:
            if (with_triangle) {
                if (s < 3 || r < 0 || 2 * r > s - 3)
                    throw std::invalid_argument("DigraphKsTriMr: 0 <= r <= (s-3)/2 required");
            } else if (s < 1 || r < 0 || 2 * r > s) {
                throw std::invalid_argument("DigraphKsTriMr: 0 <= r <= s/2 required");
            }
            break;
        case PatternKind::CyclicTriangle:
            break;
        }
    }
};

/// A located copy: the vertex list plus, where meaningful, the part structure
/// (join parts, matched pairs, triangle triple).
struct Witness {
    std::vector<int> vertices;
    std::vector<std::vector<int>> parts;
};

enum class SearchStatus { Found, Absent, Exhausted };

struct SearchLimits {
    std::uint64_t node_cap = 0; // 0 = unlimited
};

struct SearchResult {
    SearchStatus status = SearchStatus::Absent;
    std::optional<Witness> witness;
    std::uint64_t nodes = 0;

    bool found() const { return status == SearchStatus::Found; }
};

// ---------------------------------------------------------------------------
// Predicates

/// True iff all edges inside S carry pairwise distinct colors.
inline bool is_rainbow(const EdgeColoredGraph& g, const std::vector<int>& s_set) {
    std::vector<int> cs;
    for (std::size_t i = 0; i < s_set.size(); ++i) {
        detail::check_vertex(s_set[i], g.order(), "is_rainbow");
        for (std::size_t j = i + 1; j < s_set.size(); ++j)
            if (g.has_edge(s_set[i], s_set[j])) cs.push_back(g.color(s_set[i], s_set[j]));
    }
    std::sort(cs.begin(), cs.end());
    return std::adjacent_find(cs.begin(), cs.end()) == cs.end();
}

/// True iff within G[S] no two edges sharing an endpoint share a color.
inline bool is_properly_colored(const EdgeColoredGraph& g, const std::vector<int>& s_set) {
    for (int v : s_set) {
        detail::check_vertex(v, g.order(), "is_properly_colored");
        std::vector<int> cs;
        for (int w : s_set)
            if (v != w && g.has_edge(v, w)) cs.push_back(g.color(v, w));
        std::sort(cs.begin(), cs.end());
        if (std::adjacent_find(cs.begin(), cs.end()) != cs.end()) return false;
    }
    return true;
}

inline bool is_properly_colored(const EdgeColoredGraph& g) {
    std::vector<int> all(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) all[static_cast<std::size_t>(v)] = v;
    return is_properly_colored(g, all);
}

namespace detail {

// Dense color ids for fast used-color bitsets during search.
struct ColorIndex {
    std::vector<int> dense;   // per edge index of g
    int k = 0;

    explicit ColorIndex(const EdgeColoredGraph& g) {
        std::vector<int> palette;
        for (std::size_t i = 0; i < g.edges().size(); ++i) palette.push_back(g.color_of_index(i));
        std::sort(palette.begin(), palette.end());
        palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
        k = static_cast<int>(palette.size());
        dense.reserve(g.edges().size());
        for (std::size_t i = 0; i < g.edges().size(); ++i) {
            auto it = std::lower_bound(palette.begin(), palette.end(), g.color_of_index(i));
            dense.push_back(static_cast<int>(it - palette.begin()));
        }
    }
};

struct Budget {
    std::uint64_t cap;
    std::uint64_t nodes = 0;
    bool exhausted = false;

    explicit Budget(std::uint64_t c) : cap(c) {}
    bool tick() {
        ++nodes;
        if (cap != 0 && nodes > cap) { exhausted = true; return false; }
        return true;
    }
};

} // namespace detail

// ---------------------------------------------------------------------------
// Rainbow clique search

namespace detail {

struct CliqueSearch {
    const EdgeColoredGraph& g;
    int s;
    std::vector<int> order;          // vertices by descending degree
    std::vector<Bitset> adj;         // adjacency in ordered-position space
    std::vector<std::vector<int>> cid; // dense color per position pair (-1 absent)
    Budget budget;
    std::vector<int> chosen;         // positions
    Bitset used;                     // dense colors in use

    CliqueSearch(const EdgeColoredGraph& graph, int target, std::uint64_t cap)
        : g(graph), s(target), budget(cap) {
        const int n = g.order();
        order.resize(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return g.degree(a) > g.degree(b); });
        std::vector<int> pos(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
        ColorIndex ci(g);
        adj.assign(static_cast<std::size_t>(n), Bitset(static_cast<std::size_t>(n)));
        cid.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
        for (std::size_t e = 0; e < g.edges().size(); ++e) {
            auto [u, v] = g.edges()[e];
            int pu = pos[static_cast<std::size_t>(u)], pv = pos[static_cast<std::size_t>(v)];
            adj[static_cast<std::size_t>(pu)].set(static_cast<std::size_t>(pv));
            adj[static_cast<std::size_t>(pv)].set(static_cast<std::size_t>(pu));
            cid[static_cast<std::size_t>(pu)][static_cast<std::size_t>(pv)] = ci.dense[e];
            cid[static_cast<std::size_t>(pv)][static_cast<std::size_t>(pu)] = ci.dense[e];
        }
        used.resize(static_cast<std::size_t>(ci.k));
    }

    bool extend(const Bitset& cands, std::optional<Witness>& out) {
        if (!budget.tick()) return false;
        if (static_cast<int>(chosen.size()) == s) {
            Witness w;
            for (int p : chosen) w.vertices.push_back(order[static_cast<std::size_t>(p)]);
            std::sort(w.vertices.begin(), w.vertices.end());
            out = std::move(w);
            return true;
        }
        if (static_cast<int>(chosen.size()) + static_cast<int>(cands.count()) < s) return false;
        for (std::size_t p = cands.find_first(); p != Bitset::npos; p = cands.find_next(p)) {
            // Colors of the edges from p into the current clique must be new
            // and pairwise distinct.
            std::vector<int> fresh;
            bool ok = true;
            for (int q : chosen) {
                int c = cid[p][static_cast<std::size_t>(q)];
                if (c < 0 || used.test(static_cast<std::size_t>(c))) { ok = false; break; }
                for (int f : fresh)
                    if (f == c) { ok = false; break; }
                if (!ok) break;
                fresh.push_back(c);
            }
            if (ok) {
                chosen.push_back(static_cast<int>(p));
                for (int c : fresh) used.set(static_cast<std::size_t>(c));
                Bitset next = cands & adj[p];
                // only positions after p, keeping each vertex set visited once
                for (std::size_t q = next.find_first(); q != Bitset::npos && q <= p;
                     q = next.find_next(q))
                    next.reset(q);
                if (extend(next, out)) return true;
                for (int c : fresh) used.reset(static_cast<std::size_t>(c));
                chosen.pop_back();
                if (budget.exhausted) return false;
            }
        }
        return false;
    }
};

} // namespace detail

/// Exact search for a vertex s-set spanning a rainbow K_s.
inline SearchResult find_rainbow_clique(const EdgeColoredGraph& g, int s,
                                        SearchLimits limits = {}) {
    PatternSpec{PatternKind::RainbowClique, s}.validate();
    SearchResult res;
    if (s > g.order()) return res;
    detail::CliqueSearch search(g, s, limits.node_cap);
    Bitset all(static_cast<std::size_t>(g.order()));
    all.set();
    std::optional<Witness> w;
    bool found = search.extend(all, w);
    res.nodes = search.budget.nodes;
    if (found) {
        res.status = SearchStatus::Found;
        res.witness = std::move(w);
    } else {
        res.status = search.budget.exhausted ? SearchStatus::Exhausted : SearchStatus::Absent;
    }
    return res;
}

// ---------------------------------------------------------------------------
// Rainbow join search: K_r v K^ell_{s-r}

namespace detail {

struct JoinSearch {
    const EdgeColoredGraph& g;
    int r, s, ell;
    ColorIndex ci;
    std::vector<std::vector<int>> cid; // dense color matrix (-1 absent)
    Budget budget;
    Bitset used;
    std::vector<int> joins;
    std::vector<std::vector<int>> classes;

    JoinSearch(const EdgeColoredGraph& graph, int jr, int js, int jl, std::uint64_t cap)
        : g(graph), r(jr), s(js), ell(jl), ci(graph), budget(cap) {
        const int n = g.order();
        cid.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
        for (std::size_t e = 0; e < g.edges().size(); ++e) {
            auto [u, v] = g.edges()[e];
            cid[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = ci.dense[e];
            cid[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = ci.dense[e];
        }
        used.resize(static_cast<std::size_t>(ci.k));
        classes.assign(static_cast<std::size_t>(s - r), {});
    }

    // Pattern neighbors of a candidate: all join vertices plus every chosen
    // vertex of *other* classes.
    bool try_place(int v, int own_class, std::vector<int>& fresh) {
        fresh.clear();
        auto need = [&](int w) {
            int c = cid[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)];
            if (c < 0 || used.test(static_cast<std::size_t>(c))) return false;
            for (int f : fresh)
                if (f == c) return false;
            fresh.push_back(c);
            return true;
        };
        for (int w : joins)
            if (!need(w)) return false;
        for (int ci2 = 0; ci2 < static_cast<int>(classes.size()); ++ci2) {
            if (ci2 == own_class) continue;
            for (int w : classes[static_cast<std::size_t>(ci2)])
                if (!need(w)) return false;
        }
        return true;
    }

    bool place_class(int cls, int idx, std::optional<Witness>& out) {
        if (!budget.tick()) return false;
        if (cls == static_cast<int>(classes.size())) {
            Witness w;
            w.parts.reserve(static_cast<std::size_t>(s - r) + joins.size());
            for (int j : joins) {
                w.vertices.push_back(j);
                w.parts.push_back({j});
            }
            for (const auto& c : classes) {
                for (int v : c) w.vertices.push_back(v);
                w.parts.push_back(c);
            }
            out = std::move(w);
            return true;
        }
        auto& cur = classes[static_cast<std::size_t>(cls)];
        int lo;
        if (idx > 0)
            lo = cur.back() + 1; // ascending within a class
        else if (cls > 0)
            lo = classes[static_cast<std::size_t>(cls - 1)].front() + 1; // leaders ascending
        else
            lo = 0;
        std::vector<int> fresh;
        for (int v = lo; v < g.order(); ++v) {
            bool taken = std::find(joins.begin(), joins.end(), v) != joins.end();
            for (const auto& c : classes)
                taken = taken || std::find(c.begin(), c.end(), v) != c.end();
            if (taken) continue;
            if (!try_place(v, cls, fresh)) continue;
            cur.push_back(v);
            for (int c : fresh) used.set(static_cast<std::size_t>(c));
            bool done = (idx + 1 == ell) ? place_class(cls + 1, 0, out) : place_class(cls, idx + 1, out);
            if (done) return true;
            for (int c : fresh) used.reset(static_cast<std::size_t>(c));
            cur.pop_back();
            if (budget.exhausted) return false;
        }
        return false;
    }

    bool place_join(int idx, std::optional<Witness>& out) {
        if (idx == r) return place_class(0, 0, out);
        if (!budget.tick()) return false;
        int lo = idx > 0 ? joins.back() + 1 : 0;
        std::vector<int> fresh;
        for (int v = lo; v < g.order(); ++v) {
            if (!try_place(v, -1, fresh)) continue;
            joins.push_back(v);
            for (int c : fresh) used.set(static_cast<std::size_t>(c));
            if (place_join(idx + 1, out)) return true;
            for (int c : fresh) used.reset(static_cast<std::size_t>(c));
            joins.pop_back();
            if (budget.exhausted) return false;
        }
        return false;
    }
};

} // namespace detail

/// Exact search for a rainbow K_r v K^ell_{s-r}: r join vertices adjacent to
/// the whole pattern plus s-r parts of exactly ell vertices, every pattern
/// edge present and the pattern edge set rainbow.
inline SearchResult find_rainbow_join(const EdgeColoredGraph& g, int r, int s, int ell,
                                      SearchLimits limits = {}) {
    PatternSpec spec;
    spec.kind = PatternKind::RainbowJoin;
    spec.s = s;
    spec.r = r;
    spec.ell = ell;
    spec.validate();
    SearchResult res;
    if (r + (s - r) * ell > g.order()) return res;
    detail::JoinSearch search(g, r, s, ell, limits.node_cap);
    std::optional<Witness> w;
    bool found = search.place_join(0, w);
    res.nodes = search.budget.nodes;
    if (found) {
        res.status = SearchStatus::Found;
        res.witness = std::move(w);
    } else {
        res.status = search.budget.exhausted ? SearchStatus::Exhausted : SearchStatus::Absent;
    }
    return res;
}

// ---------------------------------------------------------------------------
// Multigraph pattern search: Ks - Mr

namespace detail {

struct MultigraphSearch {
    const StandardMultigraph& m;
    int s, r;
    bool exact;
    Budget budget;
    std::vector<int> chosen;
    std::vector<int> partner; // light partner within chosen, -1 = none
    int lights = 0;

    MultigraphSearch(const StandardMultigraph& mm, int ss, int rr, bool ex, std::uint64_t cap)
        : m(mm), s(ss), r(rr), exact(ex), budget(cap),
          partner(static_cast<std::size_t>(mm.order()), -1) {}

    bool extend(int lo, std::optional<Witness>& out) {
        if (!budget.tick()) return false;
        if (static_cast<int>(chosen.size()) == s) {
            if (exact && lights != r) return false;
            Witness w;
            w.vertices = chosen;
            for (int v : chosen)
                if (partner[static_cast<std::size_t>(v)] > v)
                    w.parts.push_back({v, partner[static_cast<std::size_t>(v)]});
            out = std::move(w);
            return true;
        }
        int need = s - static_cast<int>(chosen.size());
        for (int v = lo; v + need <= m.order(); ++v) {
            bool ok = true;
            int light_with = -1;
            for (int u : chosen) {
                int mu = m.multiplicity(u, v);
                if (mu == 0) { ok = false; break; }
                if (mu == 1) {
                    // light pairs must stay a matching
                    if (light_with != -1 || partner[static_cast<std::size_t>(u)] != -1) { ok = false; break; }
                    light_with = u;
                }
            }
            if (ok && light_with != -1 && lights + 1 > r) ok = false;
            if (ok && exact && lights + (light_with != -1 ? 1 : 0) + (need - 1) < r) ok = false;
            if (ok) {
                chosen.push_back(v);
                if (light_with != -1) {
                    partner[static_cast<std::size_t>(v)] = light_with;
                    partner[static_cast<std::size_t>(light_with)] = v;
                    ++lights;
                }
                if (extend(v + 1, out)) return true;
                if (light_with != -1) {
                    partner[static_cast<std::size_t>(v)] = -1;
                    partner[static_cast<std::size_t>(light_with)] = -1;
                    --lights;
                }
                chosen.pop_back();
                if (budget.exhausted) return false;
            }
        }
        return false;
    }
};

} // namespace detail

/// Search for an s-set S whose complement restriction is a matching of light
/// pairs.  Default is the not-necessarily-induced reading (at most r light
/// pairs, everything else heavy); exact_induced demands exactly r light pairs.
inline SearchResult find_multigraph_pattern(const StandardMultigraph& m, int s, int r,
                                            bool exact_induced = false, SearchLimits limits = {}) {
    PatternSpec spec;
    spec.kind = PatternKind::MultigraphKsMr;
    spec.s = s;
    spec.r = r;
    spec.exact_induced = exact_induced;
    spec.validate();
    SearchResult res;
    if (s > m.order()) return res;
    detail::MultigraphSearch search(m, s, r, exact_induced, limits.node_cap);
    std::optional<Witness> w;
    bool found = search.extend(0, w);
    res.nodes = search.budget.nodes;
    if (found) {
        res.status = SearchStatus::Found;
        res.witness = std::move(w);
    } else {
        res.status = search.budget.exhausted ? SearchStatus::Exhausted : SearchStatus::Absent;
    }
    return res;
}

// ---------------------------------------------------------------------------
// Digraph pattern search: Ks - tri - Mr and Ks - Mr

namespace detail {

struct DigraphSearch {
    const SimpleDigraph& d;
    int s, r;
    bool with_triangle;
    Budget budget;
    std::vector<int> chosen;
    std::vector<Arc> deficient;  // missing directions among chosen pairs
    std::vector<int> def_degree; // per vertex

    DigraphSearch(const SimpleDigraph& dd, int ss, int rr, bool tri, std::uint64_t cap)
        : d(dd), s(ss), r(rr), with_triangle(tri), budget(cap),
          def_degree(static_cast<std::size_t>(dd.order()), 0) {}

    // Exact cover check once |S| = s: deficient arcs must fit inside one
    // cyclically oriented triangle (optional) plus a disjoint matching of at
    // most r arcs.
    bool cover(std::optional<Witness>& out) {
        auto matching_ok = [&](const std::vector<Arc>& rest, const std::vector<int>& tri) {
            if (static_cast<int>(rest.size()) > r) return false;
            for (std::size_t i = 0; i < rest.size(); ++i) {
                for (int t : tri)
                    if (rest[i].first == t || rest[i].second == t) return false;
                for (std::size_t j = i + 1; j < rest.size(); ++j) {
                    const auto& a = rest[i];
                    const auto& b = rest[j];
                    if (a.first == b.first || a.first == b.second || a.second == b.first ||
                        a.second == b.second)
                        return false;
                }
            }
            return true;
        };
        if (!with_triangle) {
            if (!matching_ok(deficient, {})) return false;
            Witness w;
            w.vertices = chosen;
            for (const auto& a : deficient) w.parts.push_back({a.first, a.second});
            out = std::move(w);
            return true;
        }
        for (int i : chosen)
            for (int j : chosen) {
                if (j == i) continue;
                for (int k : chosen) {
                    if (k == i || k == j) continue;
                    // removed arcs of the candidate triangle placement
                    auto removed = [&](const Arc& a) {
                        return (a == Arc{i, j}) || (a == Arc{j, k}) || (a == Arc{k, i});
                    };
                    std::vector<Arc> rest;
                    bool ok = true;
                    for (const auto& a : deficient) {
                        if (removed(a)) continue;
                        bool touches = a.first == i || a.first == j || a.first == k ||
                                       a.second == i || a.second == j || a.second == k;
                        if (touches) { ok = false; break; }
                        rest.push_back(a);
                    }
                    if (!ok || !matching_ok(rest, {i, j, k})) continue;
                    Witness w;
                    w.vertices = chosen;
                    w.parts.push_back({i, j, k});
                    for (const auto& a : rest) w.parts.push_back({a.first, a.second});
                    out = std::move(w);
                    return true;
                }
            }
        return false;
    }

    bool extend(int lo, std::optional<Witness>& out) {
        if (!budget.tick()) return false;
        if (static_cast<int>(chosen.size()) == s) return cover(out);
        int need = s - static_cast<int>(chosen.size());
        const int max_def = with_triangle ? 3 + r : r;
        const int max_def_deg = with_triangle ? 2 : 1;
        for (int v = lo; v + need <= d.order(); ++v) {
            bool ok = true;
            std::vector<Arc> added;
            for (int u : chosen) {
                bool uv = d.has_arc(u, v), vu = d.has_arc(v, u);
                if (!uv && !vu) { ok = false; break; }
                if (!uv) added.push_back({u, v});
                else if (!vu) added.push_back({v, u});
            }
            if (ok && static_cast<int>(deficient.size() + added.size()) > max_def) ok = false;
            if (ok) {
                // per-vertex load of the new deficiencies
                for (const auto& a : added) {
                    if (def_degree[static_cast<std::size_t>(a.first)] + 1 > max_def_deg ||
                        def_degree[static_cast<std::size_t>(a.second)] + 1 > max_def_deg) {
                        ok = false;
                        break;
                    }
                }
                if (ok) {
                    int at_v = 0;
                    for (const auto& a : added) at_v += (a.first == v || a.second == v) ? 1 : 0;
                    if (at_v > max_def_deg) ok = false;
                }
            }
            if (ok) {
                chosen.push_back(v);
                for (const auto& a : added) {
                    deficient.push_back(a);
                    ++def_degree[static_cast<std::size_t>(a.first)];
                    ++def_degree[static_cast<std::size_t>(a.second)];
                }
                if (extend(v + 1, out)) return true;
                for (std::size_t k = 0; k < added.size(); ++k) {
                    --def_degree[static_cast<std::size_t>(deficient.back().first)];
                    --def_degree[static_cast<std::size_t>(deficient.back().second)];
                    deficient.pop_back();
                }
                chosen.pop_back();
                if (budget.exhausted) return false;
            }
        }
        return false;
    }
};

} // namespace detail

/// Search for an s-set whose missing arcs fit inside one cyclically oriented
/// triangle (when with_triangle) plus a disjoint oriented matching of at most
/// r arcs; containment is in the superset sense, so a complete digraph hosts
/// every legal pattern.
inline SearchResult find_digraph_pattern(const SimpleDigraph& d, int s, int r, bool with_triangle,
                                         SearchLimits limits = {}) {
    PatternSpec spec;
    spec.kind = PatternKind::DigraphKsTriMr;
    spec.s = s;
    spec.r = r;
    spec.with_triangle = with_triangle;
    spec.validate();
    SearchResult res;
    if (s > d.order()) return res;
    detail::DigraphSearch search(d, s, r, with_triangle, limits.node_cap);
    std::optional<Witness> w;
    bool found = search.extend(0, w);
    res.nodes = search.budget.nodes;
    if (found) {
        res.status = SearchStatus::Found;
        res.witness = std::move(w);
    } else {
        res.status = search.budget.exhausted ? SearchStatus::Exhausted : SearchStatus::Absent;
    }
    return res;
}

/// First cyclic triangle (x,y),(y,z),(z,x), scanning arcs in sorted order.
inline SearchResult find_cyclic_triangle(const SimpleDigraph& d) {
    SearchResult res;
    for (const auto& [u, v] : d.arcs()) {
        ++res.nodes;
        Bitset w = d.out_neighbors(v) & d.in_neighbors(u);
        std::size_t x = w.find_first();
        if (x != Bitset::npos) {
            res.status = SearchStatus::Found;
            Witness wit;
            wit.vertices = {u, v, static_cast<int>(x)};
            wit.parts = {{u, v, static_cast<int>(x)}};
            res.witness = std::move(wit);
            return res;
        }
    }
    return res;
}

// ---------------------------------------------------------------------------
// Iterative rainbow growth (fresh-color selection)

/// Fresh-color vertex selection: the first b in B all of whose existing edges
/// into A carry colors outside c(E(G[A])).  Guaranteed to exist when
/// |B| > |A| * e(G[A]) and G[A,B] is properly colored.
inline std::optional<int> find_fresh_color_vertex(const EdgeColoredGraph& g,
                                                  const std::vector<int>& a_set,
                                                  const std::vector<int>& b_set) {
    std::vector<int> forbidden;
    for (std::size_t i = 0; i < a_set.size(); ++i)
        for (std::size_t j = i + 1; j < a_set.size(); ++j)
            if (g.has_edge(a_set[i], a_set[j])) forbidden.push_back(g.color(a_set[i], a_set[j]));
    std::sort(forbidden.begin(), forbidden.end());
    for (int b : b_set) {
        bool ok = true;
        for (int a : a_set) {
            if (!g.has_edge(a, b)) continue;
            if (std::binary_search(forbidden.begin(), forbidden.end(), g.color(a, b))) {
                ok = false;
                break;
            }
        }
        if (ok) return b;
    }
    return std::nullopt;
}

/// Grow a rainbow join greedily: starting from a rainbow base set, pick
/// per_class vertices from each pool so that every new vertex is joined to the
/// base and to the picks of other pools with fresh, pairwise distinct colors.
/// First-fit per pool; returns the witness (base part first) or nullopt when
/// the greedy pass gets stuck.
inline std::optional<Witness> grow_rainbow_join(const EdgeColoredGraph& g,
                                                const std::vector<int>& base,
                                                const std::vector<std::vector<int>>& pools,
                                                int per_class) {
    if (!is_rainbow(g, base)) return std::nullopt;
    std::vector<int> used;
    for (std::size_t i = 0; i < base.size(); ++i)
        for (std::size_t j = i + 1; j < base.size(); ++j)
            if (g.has_edge(base[i], base[j])) used.push_back(g.color(base[i], base[j]));
    std::vector<std::vector<int>> picks(pools.size());
    std::vector<int> joined = base; // everything later picks must connect to, minus own pool
    for (std::size_t p = 0; p < pools.size(); ++p) {
        for (int t = 0; t < per_class; ++t) {
            bool placed = false;
            for (int b : pools[p]) {
                if (std::find(picks[p].begin(), picks[p].end(), b) != picks[p].end()) continue;
                std::vector<int> fresh;
                bool ok = true;
                for (int w : joined) {
                    bool own = false;
                    for (int q : picks[p]) own = own || (q == w);
                    if (own) continue;
                    if (!g.has_edge(w, b)) { ok = false; break; }
                    int c = g.color(w, b);
                    if (std::find(used.begin(), used.end(), c) != used.end() ||
                        std::find(fresh.begin(), fresh.end(), c) != fresh.end()) {
                        ok = false;
                        break;
                    }
                    fresh.push_back(c);
                }
                if (!ok) continue;
                picks[p].push_back(b);
                joined.push_back(b);
                used.insert(used.end(), fresh.begin(), fresh.end());
                placed = true;
                break;
            }
            if (!placed) return std::nullopt;
        }
    }
    Witness w;
    w.vertices = base;
    w.parts.push_back(base);
    for (const auto& pk : picks) {
        w.parts.push_back(pk);
        for (int v : pk) w.vertices.push_back(v);
    }
    return w;
}

// ---------------------------------------------------------------------------
// Properly colored subgraph scan (small vertex sets)

/// Largest properly colored edge subset of G[S]: maximum set of edges of
/// G[S] no two of which share an endpoint and a color.
inline int max_properly_colored_edges(const EdgeColoredGraph& g, const std::vector<int>& s_set) {
    std::vector<std::tuple<int, int, int>> es; // (u, v, color)
    for (std::size_t i = 0; i < s_set.size(); ++i)
        for (std::size_t j = i + 1; j < s_set.size(); ++j)
            if (g.has_edge(s_set[i], s_set[j]))
                es.push_back({s_set[i], s_set[j], g.color(s_set[i], s_set[j])});
    int best = 0;
    std::vector<int> in;
    auto conflicts = [&](int a, int b) {
        auto [u1, v1, c1] = es[static_cast<std::size_t>(a)];
        auto [u2, v2, c2] = es[static_cast<std::size_t>(b)];
        if (c1 != c2) return false;
        return u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2;
    };
    std::function<void(std::size_t)> dfs = [&](std::size_t idx) {
        if (static_cast<int>(in.size() + (es.size() - idx)) <= best) return;
        if (idx == es.size()) {
            best = std::max(best, static_cast<int>(in.size()));
            return;
        }
        bool ok = true;
        for (int k : in)
            if (conflicts(k, static_cast<int>(idx))) { ok = false; break; }
        if (ok) {
            in.push_back(static_cast<int>(idx));
            dfs(idx + 1);
            in.pop_back();
        }
        dfs(idx + 1);
    };
    dfs(0);
    return best;
}

/// Exhaustive scan over vertex subsets of size <= max_size: returns a subset
/// S carrying a properly colored subgraph with more edges than |S|, or
/// nullopt when none exists.
inline std::optional<std::vector<int>> find_properly_colored_excess(const EdgeColoredGraph& g,
                                                                    int max_size) {
    std::vector<int> cur;
    std::optional<std::vector<int>> out;
    std::function<bool(int)> rec = [&](int lo) {
        if (!cur.empty() && static_cast<int>(cur.size()) >= 3) {
            if (max_properly_colored_edges(g, cur) > static_cast<int>(cur.size())) {
                out = cur;
                return true;
            }
        }
        if (static_cast<int>(cur.size()) == max_size) return false;
        for (int v = lo; v < g.order(); ++v) {
            cur.push_back(v);
            if (rec(v + 1)) return true;
            cur.pop_back();
        }
        return false;
    };
    rec(0);
    return out;
}

// ---------------------------------------------------------------------------
// Witness re-validation

inline bool validate_witness(const EdgeColoredGraph& g, const PatternSpec& spec, const Witness& w) {
    if (spec.kind == PatternKind::RainbowClique) {
        if (static_cast<int>(w.vertices.size()) != spec.s) return false;
        for (std::size_t i = 0; i < w.vertices.size(); ++i)
            for (std::size_t j = i + 1; j < w.vertices.size(); ++j)
                if (w.vertices[i] == w.vertices[j] || !g.has_edge(w.vertices[i], w.vertices[j]))
                    return false;
        return is_rainbow(g, w.vertices);
    }
    if (spec.kind == PatternKind::RainbowJoin) {
        if (static_cast<int>(w.parts.size()) != spec.s) return false;
        std::vector<int> all;
        for (int i = 0; i < spec.s; ++i) {
            int expect = i < spec.r ? 1 : spec.ell;
            if (static_cast<int>(w.parts[static_cast<std::size_t>(i)].size()) != expect) return false;
            for (int v : w.parts[static_cast<std::size_t>(i)]) all.push_back(v);
        }
        std::vector<int> sorted = all;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
        std::vector<int> colors;
        for (std::size_t i = 0; i < w.parts.size(); ++i)
            for (std::size_t j = i + 1; j < w.parts.size(); ++j)
                for (int u : w.parts[i])
                    for (int v : w.parts[j]) {
                        if (!g.has_edge(u, v)) return false;
                        colors.push_back(g.color(u, v));
                    }
        std::sort(colors.begin(), colors.end());
        return std::adjacent_find(colors.begin(), colors.end()) == colors.end();
    }
    return false;
}

inline bool validate_witness(const StandardMultigraph& m, const PatternSpec& spec, const Witness& w) {
    if (spec.kind != PatternKind::MultigraphKsMr) return false;
    if (static_cast<int>(w.vertices.size()) != spec.s) return false;
    std::vector<int> vs = w.vertices;
    std::sort(vs.begin(), vs.end());
    if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) return false;
    int lights = 0;
    std::vector<int> touched;
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            int mu = m.multiplicity(vs[i], vs[j]);
            if (mu == 0) return false;
            if (mu == 1) {
                ++lights;
                touched.push_back(vs[i]);
                touched.push_back(vs[j]);
            }
        }
    std::sort(touched.begin(), touched.end());
    if (std::adjacent_find(touched.begin(), touched.end()) != touched.end()) return false;
    return spec.exact_induced ? lights == spec.r : lights <= spec.r;
}

inline bool validate_witness(const SimpleDigraph& d, const PatternSpec& spec, const Witness& w) {
    if (spec.kind == PatternKind::CyclicTriangle) {
        if (w.vertices.size() != 3) return false;
        int x = w.vertices[0], y = w.vertices[1], z = w.vertices[2];
        return x != y && y != z && x != z && d.has_arc(x, y) && d.has_arc(y, z) && d.has_arc(z, x);
    }
    if (spec.kind != PatternKind::DigraphKsTriMr) return false;
    if (static_cast<int>(w.vertices.size()) != spec.s) return false;
    std::vector<Arc> removed;
    std::size_t p = 0;
    std::vector<int> blocked;
    if (spec.with_triangle) {
        if (w.parts.empty() || w.parts[0].size() != 3) return false;
        int i = w.parts[0][0], j = w.parts[0][1], k = w.parts[0][2];
        removed.push_back({i, j});
        removed.push_back({j, k});
        removed.push_back({k, i});
        blocked = {i, j, k};
        p = 1;
    }
    int pairs = 0;
    for (; p < w.parts.size(); ++p) {
        if (w.parts[p].size() != 2) return false;
        int gch = w.parts[p][0], h = w.parts[p][1];
        for (int b : blocked)
            if (b == gch || b == h) return false;
        blocked.push_back(gch);
        blocked.push_back(h);
        removed.push_back({gch, h});
        ++pairs;
    }
    if (pairs > spec.r) return false;
    for (std::size_t a = 0; a < w.vertices.size(); ++a)
        for (std::size_t b = 0; b < w.vertices.size(); ++b) {
            if (a == b) continue;
            Arc arc{w.vertices[a], w.vertices[b]};
            bool is_removed = std::find(removed.begin(), removed.end(), arc) != removed.end();
            if (!is_removed && !d.has_arc(arc.first, arc.second)) return false;
        }
    return true;
}

} // namespace rainbow
