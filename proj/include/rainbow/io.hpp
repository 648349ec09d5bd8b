#pragma once

// Text formats for instances and reports.
//
//   ecg <n> <m>   then m lines "u v color"   (edge-colored graph)
//   mg  <n> <m>   then m lines "u v mult"    (standard multigraph, mult in {1,2})
//   dg  <n> <m>   then m lines "u v"         (simple digraph, ordered pairs)
//
// Vertices are 0-based, serializers emit edges in sorted order, and
// parse(serialize(x)) == x.  Parse failures carry 1-based line numbers.

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "rainbow/core.hpp"

namespace rainbow {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int ln, const std::string& msg)
        : std::runtime_error("line " + std::to_string(ln) + ": " + msg), line(ln) {}
};

namespace detail {

constexpr int kMaxFileVertices = 4096;

struct LineReader {
    std::istream& in;
    int line_no = 0;

    // Next non-empty line split into tokens.
    bool next(std::vector<std::string>& tokens) {
        std::string line;
        while (std::getline(in, line)) {
            ++line_no;
            tokens.clear();
            std::istringstream ss(line);
            std::string t;
            while (ss >> t) tokens.push_back(t);
            if (!tokens.empty()) return true;
        }
        return false;
    }
};

inline long long parse_int(const std::string& tok, int line) {
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(tok, &used);
    } catch (const std::exception&) {
        throw ParseError(line, "expected integer, got '" + tok + "'");
    }
    if (used != tok.size()) throw ParseError(line, "trailing characters in '" + tok + "'");
    return v;
}

inline std::pair<int, long long> parse_header(LineReader& r, const char* magic) {
    std::vector<std::string> toks;
    if (!r.next(toks)) throw ParseError(1, "empty input");
    if (toks.size() != 3 || toks[0] != magic)
        throw ParseError(r.line_no, std::string("expected header '") + magic + " <n> <m>'");
    long long n = parse_int(toks[1], r.line_no);
    long long m = parse_int(toks[2], r.line_no);
    if (n < 0 || n > kMaxFileVertices)
        throw ParseError(r.line_no, "vertex count out of supported range [0, 4096]");
    if (m < 0) throw ParseError(r.line_no, "negative edge count");
    return {static_cast<int>(n), m};
}

inline void expect_end(LineReader& r) {
    std::vector<std::string> toks;
    if (r.next(toks)) throw ParseError(r.line_no, "unexpected extra line");
}

inline void check_pair(int n, long long u, long long v, int line) {
    if (u < 0 || u >= n || v < 0 || v >= n)
        throw ParseError(line, "vertex id out of range [0," + std::to_string(n) + ")");
    if (u == v) throw ParseError(line, "self-loop");
}

} // namespace detail

// ---------------------------------------------------------------------------
// Parsers

inline EdgeColoredGraph parse_ecg(std::istream& in) {
    detail::LineReader r{in};
    auto [n, m] = detail::parse_header(r, "ecg");
    std::vector<std::tuple<int, int, int>> es;
    std::set<Edge> seen;
    std::vector<std::string> toks;
    for (long long i = 0; i < m; ++i) {
        if (!r.next(toks)) throw ParseError(r.line_no + 1, "unexpected end of input");
        if (toks.size() != 3) throw ParseError(r.line_no, "expected 'u v color'");
        long long u = detail::parse_int(toks[0], r.line_no);
        long long v = detail::parse_int(toks[1], r.line_no);
        long long c = detail::parse_int(toks[2], r.line_no);
        detail::check_pair(n, u, v, r.line_no);
        if (c < 0) throw ParseError(r.line_no, "negative color");
        if (!seen.insert(make_edge(static_cast<int>(u), static_cast<int>(v))).second)
            throw ParseError(r.line_no, "duplicate edge");
        es.push_back({static_cast<int>(u), static_cast<int>(v), static_cast<int>(c)});
    }
    detail::expect_end(r);
    return EdgeColoredGraph(n, std::move(es));
}

inline StandardMultigraph parse_mg(std::istream& in) {
    detail::LineReader r{in};
    auto [n, m] = detail::parse_header(r, "mg");
    std::vector<std::tuple<int, int, int>> es;
    std::set<Edge> seen;
    std::vector<std::string> toks;
    for (long long i = 0; i < m; ++i) {
        if (!r.next(toks)) throw ParseError(r.line_no + 1, "unexpected end of input");
        if (toks.size() != 3) throw ParseError(r.line_no, "expected 'u v mult'");
        long long u = detail::parse_int(toks[0], r.line_no);
        long long v = detail::parse_int(toks[1], r.line_no);
        long long w = detail::parse_int(toks[2], r.line_no);
        detail::check_pair(n, u, v, r.line_no);
        if (w < 1 || w > 2) throw ParseError(r.line_no, "multiplicity must be 1 or 2");
        if (!seen.insert(make_edge(static_cast<int>(u), static_cast<int>(v))).second)
            throw ParseError(r.line_no, "duplicate pair");
        es.push_back({static_cast<int>(u), static_cast<int>(v), static_cast<int>(w)});
    }
    detail::expect_end(r);
    return StandardMultigraph(n, es);
}

inline SimpleDigraph parse_dg(std::istream& in) {
    detail::LineReader r{in};
    auto [n, m] = detail::parse_header(r, "dg");
    std::vector<Arc> as;
    std::set<Arc> seen;
    std::vector<std::string> toks;
    for (long long i = 0; i < m; ++i) {
        if (!r.next(toks)) throw ParseError(r.line_no + 1, "unexpected end of input");
        if (toks.size() != 2) throw ParseError(r.line_no, "expected 'u v'");
        long long u = detail::parse_int(toks[0], r.line_no);
        long long v = detail::parse_int(toks[1], r.line_no);
        detail::check_pair(n, u, v, r.line_no);
        Arc a{static_cast<int>(u), static_cast<int>(v)};
        if (!seen.insert(a).second) throw ParseError(r.line_no, "duplicate arc");
        as.push_back(a);
    }
    detail::expect_end(r);
    return SimpleDigraph(n, std::move(as));
}

// ---------------------------------------------------------------------------
// Serializers (sorted, diff-friendly)

inline std::string serialize(const EdgeColoredGraph& g) {
    std::ostringstream out;
    out << "ecg " << g.order() << ' ' << g.edge_count() << '\n';
    for (std::size_t i = 0; i < g.edges().size(); ++i)
        out << g.edges()[i].first << ' ' << g.edges()[i].second << ' ' << g.color_of_index(i)
            << '\n';
    return out.str();
}

inline std::string serialize(const StandardMultigraph& m) {
    std::ostringstream out;
    std::vector<std::tuple<int, int, int>> es;
    for (int u = 0; u < m.order(); ++u)
        for (int v = u + 1; v < m.order(); ++v)
            if (int w = m.multiplicity(u, v); w > 0) es.push_back({u, v, w});
    out << "mg " << m.order() << ' ' << es.size() << '\n';
    for (const auto& [u, v, w] : es) out << u << ' ' << v << ' ' << w << '\n';
    return out.str();
}

inline std::string serialize(const SimpleDigraph& d) {
    std::ostringstream out;
    out << "dg " << d.order() << ' ' << d.arc_count() << '\n';
    for (const auto& [u, v] : d.arcs()) out << u << ' ' << v << '\n';
    return out.str();
}

// ---------------------------------------------------------------------------
// Files

using AnyGraph = std::variant<EdgeColoredGraph, StandardMultigraph, SimpleDigraph>;

inline AnyGraph parse_any(std::istream& in) {
    std::string all((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    std::istringstream probe(all);
    std::string magic;
    probe >> magic;
    std::istringstream body(all);
    if (magic == "ecg") return parse_ecg(body);
    if (magic == "mg") return parse_mg(body);
    if (magic == "dg") return parse_dg(body);
    throw ParseError(1, "unknown format '" + magic + "' (expected ecg, mg or dg)");
}

inline AnyGraph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return parse_any(in);
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << content;
}

} // namespace rainbow
