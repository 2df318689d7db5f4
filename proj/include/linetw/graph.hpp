#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "linetw/errors.hpp"

namespace linetw {

using Edge = std::pair<int, int>; // normalized: first < second

inline Edge make_edge(int u, int v) {
    return u < v ? Edge{u, v} : Edge{v, u};
}

// Part sizes n_1..n_k of a complete multipartite graph K_{n_1,...,n_k}.
struct MultipartiteSpec {
    std::vector<int> parts;

    int k() const { return static_cast<int>(parts.size()); }
    int n() const { return std::accumulate(parts.begin(), parts.end(), 0); }

    bool is_complete() const {
        return !parts.empty() &&
               std::all_of(parts.begin(), parts.end(), [](int p) { return p == 1; });
    }
    // K_{1,m}: exactly two classes, one a singleton (K_{1,1} is both star and complete).
    bool is_star() const {
        return parts.size() == 2 && std::min(parts[0], parts[1]) == 1;
    }
    bool is_regular() const {
        return !parts.empty() &&
               std::all_of(parts.begin(), parts.end(), [&](int p) { return p == parts[0]; });
    }
    int common_part_size() const {
        if (!is_regular()) throw domain_error("common_part_size: spec is not regular");
        return parts[0];
    }

    void check() const {
        if (parts.empty()) throw invalid_spec_error("spec needs at least one part");
        for (int p : parts)
            if (p < 1) throw invalid_spec_error("part sizes must be >= 1");
    }

    // Parses "n1,n2,..." (e.g. "2,2,3").
    static MultipartiteSpec parse(const std::string& text) {
        if (text.empty() || text.back() == ',')
            throw parse_error("empty or dangling spec string '" + text + "'");
        MultipartiteSpec spec;
        std::string token;
        std::istringstream in(text);
        while (std::getline(in, token, ',')) {
            const auto first = token.find_first_not_of(" \t");
            const auto last = token.find_last_not_of(" \t");
            token = first == std::string::npos ? "" : token.substr(first, last - first + 1);
            size_t used = 0;
            int value = 0;
            try {
                value = std::stoi(token, &used);
            } catch (const std::exception&) {
                throw parse_error("bad part size '" + token + "' in spec '" + text + "'");
            }
            if (used != token.size())
                throw parse_error("bad part size '" + token + "' in spec '" + text + "'");
            spec.parts.push_back(value);
        }
        if (spec.parts.empty()) throw parse_error("empty spec string");
        spec.check();
        return spec;
    }

    std::string to_string() const {
        std::string out;
        for (size_t i = 0; i < parts.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(parts[i]);
        }
        return out;
    }

    bool operator==(const MultipartiteSpec&) const = default;
};

// Simple undirected graph. Edges are kept normalized and sorted lexicographically,
// which fixes the edge enumeration order everywhere (line graphs, .gr files, maps).
struct Graph {
    int vertex_count = 0;
    std::vector<Edge> edges;
    std::vector<int> colour_of; // colour class per vertex; empty when uncoloured

    bool has_colours() const { return !colour_of.empty(); }
    int edge_count() const { return static_cast<int>(edges.size()); }

    void normalize() {
        for (auto& e : edges) e = make_edge(e.first, e.second);
        std::sort(edges.begin(), edges.end());
    }

    void check() const {
        for (const auto& [u, v] : edges) {
            if (u < 0 || v >= vertex_count || u >= v)
                throw domain_error("edge out of range or not normalized");
        }
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
            throw domain_error("duplicate edge");
        if (!std::is_sorted(edges.begin(), edges.end()))
            throw domain_error("edges not in canonical order");
        if (has_colours() && static_cast<int>(colour_of.size()) != vertex_count)
            throw domain_error("colour vector length mismatch");
    }

    bool has_edge(int u, int v) const {
        if (u == v) return false;
        return std::binary_search(edges.begin(), edges.end(), make_edge(u, v));
    }

    std::vector<std::vector<int>> adjacency_lists() const {
        std::vector<std::vector<int>> adj(vertex_count);
        for (const auto& [u, v] : edges) {
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
        return adj;
    }

    // Bitmask adjacency for the exhaustive solvers; only graphs that fit one word.
    std::vector<std::uint32_t> adjacency_masks() const {
        if (vertex_count > 31) throw budget_error("adjacency masks need at most 31 vertices");
        std::vector<std::uint32_t> adj(vertex_count, 0);
        for (const auto& [u, v] : edges) {
            adj[u] |= std::uint32_t{1} << v;
            adj[v] |= std::uint32_t{1} << u;
        }
        return adj;
    }

    bool operator==(const Graph&) const = default;
};

// Bijection between the edges of a graph and the vertices of its line graph.
// Line-graph vertex i corresponds to edge_of[i] (canonical edge order).
struct EdgeVertexMap {
    std::vector<Edge> edge_of;

    int index_of(int u, int v) const {
        Edge e = make_edge(u, v);
        auto it = std::lower_bound(edge_of.begin(), edge_of.end(), e);
        if (it == edge_of.end() || *it != e)
            throw domain_error("edge (" + std::to_string(u) + "," + std::to_string(v) +
                               ") is not in the graph");
        return static_cast<int>(it - edge_of.begin());
    }
    int size() const { return static_cast<int>(edge_of.size()); }
};

// K_{n_1,...,n_k}: classes are contiguous vertex ranges in spec order, so class i
// covers vertices [offset_i, offset_i + n_i). Edges join distinct classes.
inline Graph complete_multipartite(const MultipartiteSpec& spec) {
    spec.check();
    Graph g;
    g.vertex_count = spec.n();
    g.colour_of.reserve(g.vertex_count);
    for (int c = 0; c < spec.k(); ++c)
        for (int i = 0; i < spec.parts[c]; ++i) g.colour_of.push_back(c);
    for (int u = 0; u < g.vertex_count; ++u)
        for (int v = u + 1; v < g.vertex_count; ++v)
            if (g.colour_of[u] != g.colour_of[v]) g.edges.emplace_back(u, v);
    return g; // already normalized: u < v and lexicographic by construction
}

// First vertex of each colour class (contiguous layout).
inline std::vector<int> class_offsets(const MultipartiteSpec& spec) {
    std::vector<int> off(spec.k() + 1, 0);
    for (int c = 0; c < spec.k(); ++c) off[c + 1] = off[c] + spec.parts[c];
    return off;
}

// Line graph: one vertex per edge of g, adjacent when the edges share an endpoint.
// Two distinct edges of a simple graph share at most one endpoint, so generating
// pairs of incident edges per shared vertex emits each line-graph edge exactly once.
inline std::pair<Graph, EdgeVertexMap> line_graph(const Graph& g) {
    g.check();
    EdgeVertexMap map;
    map.edge_of = g.edges;
    std::vector<std::vector<int>> incident(g.vertex_count);
    for (int e = 0; e < g.edge_count(); ++e) {
        incident[g.edges[e].first].push_back(e);
        incident[g.edges[e].second].push_back(e);
    }
    Graph lg;
    lg.vertex_count = g.edge_count();
    for (int u = 0; u < g.vertex_count; ++u)
        for (size_t a = 0; a < incident[u].size(); ++a)
            for (size_t b = a + 1; b < incident[u].size(); ++b)
                lg.edges.push_back(make_edge(incident[u][a], incident[u][b]));
    std::sort(lg.edges.begin(), lg.edges.end());
    return {std::move(lg), std::move(map)};
}

// --- PACE-style .gr serialization -------------------------------------------
//
// Canonical form written here: one "p tw <n> <m>" line, then the edges in
// canonical order, 1-indexed, LF line endings, no comments.

inline void write_gr(const Graph& g, std::ostream& out) {
    out << "p tw " << g.vertex_count << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges) out << u + 1 << ' ' << v + 1 << '\n';
}

inline std::string to_gr(const Graph& g) {
    std::ostringstream out;
    write_gr(g, out);
    return out.str();
}

inline Graph read_gr(std::istream& in) {
    Graph g;
    bool seen_header = false;
    long long declared_edges = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        if (!seen_header) {
            std::string p, tw;
            if (!(ls >> p >> tw >> g.vertex_count >> declared_edges) || p != "p" || tw != "tw")
                throw parse_error("expected 'p tw <n> <m>' header, got '" + line + "'");
            if (g.vertex_count < 0 || declared_edges < 0)
                throw parse_error("negative counts in .gr header");
            std::string extra;
            if (ls >> extra) throw parse_error("trailing tokens in .gr header");
            seen_header = true;
            continue;
        }
        int u = 0, v = 0;
        if (!(ls >> u >> v)) throw parse_error("bad edge line '" + line + "'");
        std::string extra;
        if (ls >> extra) throw parse_error("trailing tokens on edge line '" + line + "'");
        if (u < 1 || u > g.vertex_count || v < 1 || v > g.vertex_count || u == v)
            throw parse_error("edge endpoints out of range on line '" + line + "'");
        g.edges.push_back(make_edge(u - 1, v - 1));
    }
    if (!seen_header) throw parse_error("missing .gr header");
    if (static_cast<long long>(g.edges.size()) != declared_edges)
        throw parse_error("edge count does not match header");
    g.normalize();
    if (std::adjacent_find(g.edges.begin(), g.edges.end()) != g.edges.end())
        throw parse_error("duplicate edge in .gr input");
    return g;
}

inline Graph gr_from_string(const std::string& text) {
    std::istringstream in(text);
    return read_gr(in);
}

} // namespace linetw
