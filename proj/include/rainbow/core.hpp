#pragma once

// Fundamental immutable graph types: edge-colored graphs, simple digraphs,
// standard multigraphs, plain simple graphs, and the degree / color-degree
// arithmetic everything else consumes.
//
// Conventions used across the library:
//   - vertices are 0-indexed everywhere,
//   - colors are small nonnegative integers (canonicalize_colors() maps an
//     arbitrary labeling onto 0..k-1 by first appearance),
//   - degrees, counts and averages are exact (integers / rationals),
//   - all types are immutable after construction and safe to share between
//     threads.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>
#include <boost/rational.hpp>

namespace rainbow {

using Bitset = boost::dynamic_bitset<std::uint64_t>;
using Rational = boost::rational<long long>;

/// Unordered vertex pair, stored with first < second.
using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("self-loop {" + std::to_string(u) + "} is not an edge");
    return u < v ? Edge{u, v} : Edge{v, u};
}

namespace detail {

inline void check_vertex(int v, int n, const char* what) {
    if (v < 0 || v >= n)
        throw std::out_of_range(std::string(what) + ": vertex " + std::to_string(v) +
                                " out of range [0," + std::to_string(n) + ")");
}

inline Bitset set_to_bits(int n, const std::vector<int>& vs, const char* what) {
    Bitset b(static_cast<std::size_t>(n));
    for (int v : vs) {
        check_vertex(v, n, what);
        b.set(static_cast<std::size_t>(v));
    }
    return b;
}

} // namespace detail

// ---------------------------------------------------------------------------
// SimpleGraph

class SimpleGraph {
public:
    SimpleGraph() : n_(0) {}

    SimpleGraph(int n, std::vector<Edge> edges) : n_(n) {
        if (n < 0) throw std::invalid_argument("negative vertex count");
        for (auto& [u, v] : edges) {
            if (u > v) std::swap(u, v);
            if (u == v) throw std::invalid_argument("self-loop in SimpleGraph");
            detail::check_vertex(u, n, "SimpleGraph");
            detail::check_vertex(v, n, "SimpleGraph");
        }
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
            throw std::invalid_argument("duplicate edge in SimpleGraph");
        edges_ = std::move(edges);
        adj_.assign(static_cast<std::size_t>(n), Bitset(static_cast<std::size_t>(n)));
        for (const auto& [u, v] : edges_) {
            adj_[static_cast<std::size_t>(u)].set(static_cast<std::size_t>(v));
            adj_[static_cast<std::size_t>(v)].set(static_cast<std::size_t>(u));
        }
    }

    static SimpleGraph complete(int n) {
        std::vector<Edge> es;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) es.push_back({u, v});
        return SimpleGraph(n, std::move(es));
    }

    int order() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_edge(int u, int v) const {
        detail::check_vertex(u, n_, "has_edge");
        detail::check_vertex(v, n_, "has_edge");
        return u != v && adj_[static_cast<std::size_t>(u)].test(static_cast<std::size_t>(v));
    }

    const Bitset& neighbors(int v) const {
        detail::check_vertex(v, n_, "neighbors");
        return adj_[static_cast<std::size_t>(v)];
    }

    int degree(int v) const { return static_cast<int>(neighbors(v).count()); }

    int min_degree() const {
        int d = n_ > 0 ? n_ : 0;
        for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
        return n_ > 0 ? d : 0;
    }

    bool operator==(const SimpleGraph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    int n_;
    std::vector<Edge> edges_;
    std::vector<Bitset> adj_;
};

// ---------------------------------------------------------------------------
// EdgeColoredGraph

/// Simple graph plus a total edge -> color map.  Color ids are arbitrary
/// nonnegative integers; rainbow / proper predicates only depend on the
/// partition of E into color classes.
class EdgeColoredGraph {
public:
    EdgeColoredGraph() : n_(0) {}

    EdgeColoredGraph(int n, std::vector<std::tuple<int, int, int>> colored_edges) : n_(n) {
        if (n < 0) throw std::invalid_argument("negative vertex count");
        std::vector<std::pair<Edge, int>> es;
        es.reserve(colored_edges.size());
        for (auto& [u, v, c] : colored_edges) {
            detail::check_vertex(u, n, "EdgeColoredGraph");
            detail::check_vertex(v, n, "EdgeColoredGraph");
            if (c < 0) throw std::invalid_argument("negative color id");
            es.push_back({make_edge(u, v), c});
        }
        std::sort(es.begin(), es.end());
        for (std::size_t i = 1; i < es.size(); ++i)
            if (es[i].first == es[i - 1].first)
                throw std::invalid_argument("duplicate edge in EdgeColoredGraph");
        edges_.reserve(es.size());
        colors_.reserve(es.size());
        for (auto& [e, c] : es) {
            edges_.push_back(e);
            colors_.push_back(c);
        }
        adj_.assign(static_cast<std::size_t>(n), Bitset(static_cast<std::size_t>(n)));
        color_at_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            auto [u, v] = edges_[i];
            adj_[static_cast<std::size_t>(u)].set(static_cast<std::size_t>(v));
            adj_[static_cast<std::size_t>(v)].set(static_cast<std::size_t>(u));
            color_at_[static_cast<std::size_t>(u) * n_ + v] = colors_[i];
            color_at_[static_cast<std::size_t>(v) * n_ + u] = colors_[i];
        }
    }

    int order() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    int color_of_index(std::size_t i) const { return colors_[i]; }

    bool has_edge(int u, int v) const {
        detail::check_vertex(u, n_, "has_edge");
        detail::check_vertex(v, n_, "has_edge");
        return u != v && adj_[static_cast<std::size_t>(u)].test(static_cast<std::size_t>(v));
    }

    /// Color of edge uv; throws if uv is not an edge.
    int color(int u, int v) const {
        detail::check_vertex(u, n_, "color");
        detail::check_vertex(v, n_, "color");
        int c = u == v ? -1 : color_at_[static_cast<std::size_t>(u) * n_ + v];
        if (c < 0)
            throw std::invalid_argument("color: {" + std::to_string(u) + "," + std::to_string(v) +
                                        "} is not an edge");
        return c;
    }

    const Bitset& neighbors(int v) const {
        detail::check_vertex(v, n_, "neighbors");
        return adj_[static_cast<std::size_t>(v)];
    }

    int degree(int v) const { return static_cast<int>(neighbors(v).count()); }

    /// Underlying uncolored graph.
    SimpleGraph underlying() const { return SimpleGraph(n_, edges_); }

    /// Number of distinct color ids in use.
    int palette_size() const {
        std::vector<int> cs = colors_;
        std::sort(cs.begin(), cs.end());
        cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
        return static_cast<int>(cs.size());
    }

    bool operator==(const EdgeColoredGraph& o) const {
        return n_ == o.n_ && edges_ == o.edges_ && colors_ == o.colors_;
    }

private:
    int n_;
    std::vector<Edge> edges_;
    std::vector<int> colors_;        // parallel to edges_
    std::vector<int> color_at_;      // n*n lookup, -1 = non-edge
    std::vector<Bitset> adj_;
};

// ---------------------------------------------------------------------------
// SimpleDigraph

using Arc = std::pair<int, int>;

class SimpleDigraph {
public:
    SimpleDigraph() : n_(0) {}

    SimpleDigraph(int n, std::vector<Arc> arcs) : n_(n) {
        if (n < 0) throw std::invalid_argument("negative vertex count");
        for (const auto& [u, v] : arcs) {
            detail::check_vertex(u, n, "SimpleDigraph");
            detail::check_vertex(v, n, "SimpleDigraph");
            if (u == v) throw std::invalid_argument("loop arc in SimpleDigraph");
        }
        std::sort(arcs.begin(), arcs.end());
        if (std::adjacent_find(arcs.begin(), arcs.end()) != arcs.end())
            throw std::invalid_argument("duplicate arc in SimpleDigraph");
        arcs_ = std::move(arcs);
        out_.assign(static_cast<std::size_t>(n), Bitset(static_cast<std::size_t>(n)));
        in_.assign(static_cast<std::size_t>(n), Bitset(static_cast<std::size_t>(n)));
        for (const auto& [u, v] : arcs_) {
            out_[static_cast<std::size_t>(u)].set(static_cast<std::size_t>(v));
            in_[static_cast<std::size_t>(v)].set(static_cast<std::size_t>(u));
        }
    }

    static SimpleDigraph complete(int n) {
        std::vector<Arc> as;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (u != v) as.push_back({u, v});
        return SimpleDigraph(n, std::move(as));
    }

    int order() const { return n_; }
    int arc_count() const { return static_cast<int>(arcs_.size()); }
    const std::vector<Arc>& arcs() const { return arcs_; }

    bool has_arc(int u, int v) const {
        detail::check_vertex(u, n_, "has_arc");
        detail::check_vertex(v, n_, "has_arc");
        return u != v && out_[static_cast<std::size_t>(u)].test(static_cast<std::size_t>(v));
    }

    const Bitset& out_neighbors(int v) const {
        detail::check_vertex(v, n_, "out_neighbors");
        return out_[static_cast<std::size_t>(v)];
    }
    const Bitset& in_neighbors(int v) const {
        detail::check_vertex(v, n_, "in_neighbors");
        return in_[static_cast<std::size_t>(v)];
    }

    int out_degree(int v) const { return static_cast<int>(out_neighbors(v).count()); }
    int in_degree(int v) const { return static_cast<int>(in_neighbors(v).count()); }

    /// True when no pair carries both arc directions.
    bool is_oriented() const {
        for (const auto& [u, v] : arcs_)
            if (u < v && has_arc(v, u)) return false;
        return true;
    }

    bool operator==(const SimpleDigraph& o) const { return n_ == o.n_ && arcs_ == o.arcs_; }

private:
    int n_;
    std::vector<Arc> arcs_;
    std::vector<Bitset> out_, in_;
};

// ---------------------------------------------------------------------------
// StandardMultigraph

/// Loop-free multigraph with multiplicities in {0,1,2}.  Heavy = 2, light = 1.
class StandardMultigraph {
public:
    StandardMultigraph() : n_(0) {}

    explicit StandardMultigraph(int n) : n_(n) {
        if (n < 0) throw std::invalid_argument("negative vertex count");
        mult_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    }

    StandardMultigraph(int n, const std::vector<std::tuple<int, int, int>>& weighted_edges)
        : StandardMultigraph(n) {
        std::vector<bool> seen(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), false);
        for (const auto& [u, v, m] : weighted_edges) {
            detail::check_vertex(u, n, "StandardMultigraph");
            detail::check_vertex(v, n, "StandardMultigraph");
            if (u == v) throw std::invalid_argument("loop in StandardMultigraph");
            if (m < 1 || m > 2) throw std::invalid_argument("multiplicity must be 1 or 2");
            auto [a, b] = make_edge(u, v);
            std::size_t idx = static_cast<std::size_t>(a) * n + b;
            if (seen[idx]) throw std::invalid_argument("duplicate pair in StandardMultigraph");
            seen[idx] = true;
            mult_[idx] = static_cast<std::uint8_t>(m);
            mult_[static_cast<std::size_t>(b) * n + a] = static_cast<std::uint8_t>(m);
        }
    }

    static StandardMultigraph all_heavy(int n) {
        StandardMultigraph m(n);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (u != v) m.mult_[static_cast<std::size_t>(u) * n + v] = 2;
        return m;
    }

    static StandardMultigraph from_simple(const SimpleGraph& g) {
        StandardMultigraph m(g.order());
        for (const auto& [u, v] : g.edges()) {
            m.mult_[static_cast<std::size_t>(u) * g.order() + v] = 1;
            m.mult_[static_cast<std::size_t>(v) * g.order() + u] = 1;
        }
        return m;
    }

    int order() const { return n_; }

    int multiplicity(int u, int v) const {
        detail::check_vertex(u, n_, "multiplicity");
        detail::check_vertex(v, n_, "multiplicity");
        return u == v ? 0 : mult_[static_cast<std::size_t>(u) * n_ + v];
    }

    /// e(M) = sum of multiplicities over unordered pairs.
    long long edge_total() const {
        long long s = 0;
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v) s += mult_[static_cast<std::size_t>(u) * n_ + v];
        return s;
    }

    long long degree(int v) const {
        detail::check_vertex(v, n_, "degree");
        long long s = 0;
        for (int u = 0; u < n_; ++u) s += mult_[static_cast<std::size_t>(v) * n_ + u];
        return s;
    }

    long long degree_into(int v, const Bitset& set) const {
        detail::check_vertex(v, n_, "degree_into");
        long long s = 0;
        for (std::size_t u = set.find_first(); u != Bitset::npos; u = set.find_next(u))
            s += mult_[static_cast<std::size_t>(v) * n_ + u];
        return s;
    }

    /// Pairs with a given multiplicity, as a simple graph.
    SimpleGraph level_graph(int level) const {
        std::vector<Edge> es;
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (mult_[static_cast<std::size_t>(u) * n_ + v] == level) es.push_back({u, v});
        return SimpleGraph(n_, std::move(es));
    }

    /// Induced submultigraph on the given vertex set (vertices relabeled by rank).
    StandardMultigraph induced(const std::vector<int>& vs) const {
        StandardMultigraph m(static_cast<int>(vs.size()));
        for (std::size_t i = 0; i < vs.size(); ++i) {
            detail::check_vertex(vs[i], n_, "induced");
            for (std::size_t j = i + 1; j < vs.size(); ++j) {
                int w = multiplicity(vs[i], vs[j]);
                m.mult_[i * vs.size() + j] = static_cast<std::uint8_t>(w);
                m.mult_[j * vs.size() + i] = static_cast<std::uint8_t>(w);
            }
        }
        return m;
    }

    bool operator==(const StandardMultigraph& o) const { return n_ == o.n_ && mult_ == o.mult_; }

private:
    int n_;
    std::vector<std::uint8_t> mult_; // n*n symmetric, 0 on the diagonal
};

// ---------------------------------------------------------------------------
// Color-degree arithmetic

/// d^c(v): number of distinct colors on the edges at v.
inline int color_degree(const EdgeColoredGraph& g, int v) {
    detail::check_vertex(v, g.order(), "color_degree");
    std::vector<int> cs;
    const Bitset& nb = g.neighbors(v);
    for (std::size_t w = nb.find_first(); w != Bitset::npos; w = nb.find_next(w))
        cs.push_back(g.color(v, static_cast<int>(w)));
    std::sort(cs.begin(), cs.end());
    cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
    return static_cast<int>(cs.size());
}

struct ColorDegreeProfile {
    int minimum;
    Rational average;
};

/// (delta^c(G), E[d^c]) with the average exact.
inline ColorDegreeProfile color_degree_profile(const EdgeColoredGraph& g) {
    if (g.order() < 1) throw std::invalid_argument("color_degree_profile: empty vertex set");
    long long sum = 0;
    int mn = g.order();
    for (int v = 0; v < g.order(); ++v) {
        int d = color_degree(g, v);
        sum += d;
        mn = std::min(mn, d);
    }
    return {mn, Rational(sum, g.order())};
}

struct MultigraphStats {
    long long min_degree;   // delta(M)
    long long max_degree;   // Delta(M)
    long long edge_total;   // e(M)
    long long cross_count;  // e_M(U, U')
};

/// Degree extremes, e(M), and e_M(U,U') = sum over u in U of d_M(u, U').
inline MultigraphStats multigraph_stats(const StandardMultigraph& m, const std::vector<int>& u_set,
                                        const std::vector<int>& u_prime) {
    Bitset a = detail::set_to_bits(m.order(), u_set, "multigraph_stats");
    Bitset b = detail::set_to_bits(m.order(), u_prime, "multigraph_stats");
    long long mn = 0, mx = 0;
    for (int v = 0; v < m.order(); ++v) {
        long long d = m.degree(v);
        if (v == 0 || d < mn) mn = d;
        if (v == 0 || d > mx) mx = d;
    }
    long long cross = 0;
    for (std::size_t v = a.find_first(); v != Bitset::npos; v = a.find_next(v))
        cross += m.degree_into(static_cast<int>(v), b);
    return {m.order() > 0 ? mn : 0, m.order() > 0 ? mx : 0, m.edge_total(), cross};
}

/// mu_complement(e) = 2 - mu(e); an involution.
inline StandardMultigraph multigraph_complement(const StandardMultigraph& m) {
    std::vector<std::tuple<int, int, int>> es;
    for (int u = 0; u < m.order(); ++u)
        for (int v = u + 1; v < m.order(); ++v) {
            int w = 2 - m.multiplicity(u, v);
            if (w > 0) es.push_back({u, v, w});
        }
    return StandardMultigraph(m.order(), es);
}

/// H(M): simple graph of heavy (multiplicity 2) pairs.
inline SimpleGraph heavy_edge_graph(const StandardMultigraph& m) { return m.level_graph(2); }

/// L = M \ H: simple graph of light (multiplicity 1) pairs.
inline SimpleGraph light_edge_graph(const StandardMultigraph& m) { return m.level_graph(1); }

/// G(M): simple graph of pairs with multiplicity >= 1.
inline SimpleGraph underlying_graph(const StandardMultigraph& m) {
    std::vector<Edge> es;
    for (int u = 0; u < m.order(); ++u)
        for (int v = u + 1; v < m.order(); ++v)
            if (m.multiplicity(u, v) >= 1) es.push_back({u, v});
    return SimpleGraph(m.order(), std::move(es));
}

/// G(D): orientation-blind simple graph of D.
inline SimpleGraph underlying_graph(const SimpleDigraph& d) {
    std::vector<Edge> es;
    for (int u = 0; u < d.order(); ++u)
        for (int v = u + 1; v < d.order(); ++v)
            if (d.has_arc(u, v) || d.has_arc(v, u)) es.push_back({u, v});
    return SimpleGraph(d.order(), std::move(es));
}

/// Relabel the palette onto 0..k-1 by first appearance over the sorted edge
/// list.  Color degrees and every rainbow / proper predicate are unchanged.
inline EdgeColoredGraph canonicalize_colors(const EdgeColoredGraph& g) {
    std::vector<std::pair<int, int>> remap; // (old color, new color), linear scan is fine here
    std::vector<std::tuple<int, int, int>> es;
    es.reserve(g.edges().size());
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
        int c = g.color_of_index(i);
        int mapped = -1;
        for (const auto& [from, to] : remap)
            if (from == c) { mapped = to; break; }
        if (mapped < 0) {
            mapped = static_cast<int>(remap.size());
            remap.push_back({c, mapped});
        }
        es.push_back({g.edges()[i].first, g.edges()[i].second, mapped});
    }
    return EdgeColoredGraph(g.order(), std::move(es));
}

} // namespace rainbow
