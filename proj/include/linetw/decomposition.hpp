#pragma once

#include <algorithm>
#include <optional>
#include <queue>
#include <sstream>
#include <string>
#include <vector>

#include "linetw/graph.hpp"

namespace linetw {

// Tree decomposition: one bag of graph vertices per tree node. Bags are kept
// sorted ascending; graph_vertex_count is the size of the decomposed graph's
// vertex set (needed to serialize, since bags may not mention every vertex).
struct TreeDecomposition {
    int graph_vertex_count = 0;
    std::vector<std::vector<int>> bags;
    std::vector<std::pair<int, int>> tree_edges; // node indices, normalized

    int node_count() const { return static_cast<int>(bags.size()); }

    void normalize() {
        for (auto& b : bags) std::sort(b.begin(), b.end());
        for (auto& e : tree_edges) e = make_edge(e.first, e.second);
        std::sort(tree_edges.begin(), tree_edges.end());
    }

    bool operator==(const TreeDecomposition&) const = default;
};

// Path decomposition: bags in path order; node i is adjacent to node i+1.
struct PathDecomposition {
    int graph_vertex_count = 0;
    std::vector<std::vector<int>> bags;

    int node_count() const { return static_cast<int>(bags.size()); }

    TreeDecomposition as_tree() const {
        TreeDecomposition td;
        td.graph_vertex_count = graph_vertex_count;
        td.bags = bags;
        for (int i = 0; i + 1 < node_count(); ++i) td.tree_edges.emplace_back(i, i + 1);
        return td;
    }

    bool operator==(const PathDecomposition&) const = default;
};

// Recovers a PathDecomposition when the tree edges are exactly (i, i+1).
inline std::optional<PathDecomposition> as_path(const TreeDecomposition& td) {
    std::vector<std::pair<int, int>> expected;
    for (int i = 0; i + 1 < td.node_count(); ++i) expected.emplace_back(i, i + 1);
    std::vector<std::pair<int, int>> got = td.tree_edges;
    std::sort(got.begin(), got.end());
    if (got != expected) return std::nullopt;
    return PathDecomposition{td.graph_vertex_count, td.bags};
}

// Outcome of checking the three decomposition axioms. Each failed axiom carries
// one witness: a vertex missing from every bag, a vertex whose bags do not form
// a connected subtree, or an edge no bag covers.
struct ValidationReport {
    bool vertex_coverage_ok = true;
    bool connectivity_ok = true;
    bool edge_coverage_ok = true;
    std::optional<int> missing_vertex;
    std::optional<int> disconnected_vertex;
    std::optional<Edge> uncovered_edge;

    bool valid() const { return vertex_coverage_ok && connectivity_ok && edge_coverage_ok; }

    std::string describe() const {
        if (valid()) return "valid";
        std::string out;
        if (!vertex_coverage_ok)
            out += "vertex " + std::to_string(*missing_vertex) + " is in no bag; ";
        if (!connectivity_ok)
            out += "bags containing vertex " + std::to_string(*disconnected_vertex) +
                   " are not connected in the tree; ";
        if (!edge_coverage_ok)
            out += "edge (" + std::to_string(uncovered_edge->first) + "," +
                   std::to_string(uncovered_edge->second) + ") is covered by no bag; ";
        out.resize(out.size() - 2);
        return out;
    }
};

namespace detail {

// Structural sanity distinct from the axioms: bags reference real vertices and
// the edges form a tree over the nodes.
inline void check_decomposition_shape(const Graph& g, const TreeDecomposition& td) {
    if (td.node_count() == 0)
        throw malformed_decomposition_error("decomposition has no bags");
    if (td.graph_vertex_count != g.vertex_count)
        throw malformed_decomposition_error("decomposition vertex count does not match graph");
    for (const auto& bag : td.bags)
        for (int v : bag)
            if (v < 0 || v >= g.vertex_count)
                throw malformed_decomposition_error("bag references vertex " +
                                                    std::to_string(v) +
                                                    " outside the graph");
    if (static_cast<int>(td.tree_edges.size()) != td.node_count() - 1)
        throw malformed_decomposition_error("tree edge count must be #bags - 1");
    std::vector<std::vector<int>> adj(td.node_count());
    for (const auto& [a, b] : td.tree_edges) {
        if (a < 0 || b < 0 || a >= td.node_count() || b >= td.node_count() || a == b)
            throw malformed_decomposition_error("tree edge references missing node");
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<char> seen(td.node_count(), 0);
    std::queue<int> frontier;
    frontier.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!frontier.empty()) {
        int a = frontier.front();
        frontier.pop();
        for (int b : adj[a])
            if (!seen[b]) {
                seen[b] = 1;
                ++reached;
                frontier.push(b);
            }
    }
    if (reached != td.node_count())
        throw malformed_decomposition_error("tree edges do not connect all bags");
}

} // namespace detail

// Checks the three axioms: every vertex in some bag, the bags holding each
// vertex induce a connected subtree, and both endpoints of every edge share a
// bag. Structurally broken input throws instead of reporting a failure.
inline ValidationReport validate(const Graph& g, const TreeDecomposition& td) {
    g.check();
    detail::check_decomposition_shape(g, td);

    std::vector<std::vector<int>> nodes_with(g.vertex_count);
    for (int node = 0; node < td.node_count(); ++node)
        for (int v : td.bags[node]) nodes_with[v].push_back(node);

    ValidationReport report;
    for (int v = 0; v < g.vertex_count && report.vertex_coverage_ok; ++v)
        if (nodes_with[v].empty()) {
            report.vertex_coverage_ok = false;
            report.missing_vertex = v;
        }

    std::vector<std::vector<int>> adj(td.node_count());
    for (const auto& [a, b] : td.tree_edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<char> in_set(td.node_count(), 0);
    for (int v = 0; v < g.vertex_count && report.connectivity_ok; ++v) {
        if (nodes_with[v].size() < 2) continue;
        for (int node : nodes_with[v]) in_set[node] = 1;
        std::queue<int> frontier;
        frontier.push(nodes_with[v][0]);
        in_set[nodes_with[v][0]] = 2;
        size_t reached = 1;
        while (!frontier.empty()) {
            int a = frontier.front();
            frontier.pop();
            for (int b : adj[a])
                if (in_set[b] == 1) {
                    in_set[b] = 2;
                    ++reached;
                    frontier.push(b);
                }
        }
        for (int node : nodes_with[v]) in_set[node] = 0;
        if (reached != nodes_with[v].size()) {
            report.connectivity_ok = false;
            report.disconnected_vertex = v;
        }
    }

    for (const auto& [u, v] : g.edges) {
        bool covered = false;
        // bags are sorted, so membership is a binary search
        for (int node : nodes_with[u]) {
            const auto& bag = td.bags[node];
            if (std::binary_search(bag.begin(), bag.end(), v)) {
                covered = true;
                break;
            }
        }
        if (!covered) {
            report.edge_coverage_ok = false;
            report.uncovered_edge = Edge{u, v};
            break;
        }
    }
    return report;
}

inline ValidationReport validate(const Graph& g, const PathDecomposition& pd) {
    return validate(g, pd.as_tree());
}

// Width = largest bag size minus one. A decomposition whose bags are all empty
// (only sensible for the empty graph) has raw width -1.
inline int width(const TreeDecomposition& td) {
    if (td.node_count() == 0) throw domain_error("width of a decomposition with no bags");
    size_t largest = 0;
    for (const auto& bag : td.bags) largest = std::max(largest, bag.size());
    return static_cast<int>(largest) - 1;
}

inline int width(const PathDecomposition& pd) { return width(pd.as_tree()); }

struct WidthInfo {
    int value = 0;        // raw width clamped to >= 0
    bool degenerate = false; // true when every bag was empty (raw width -1)
};

inline WidthInfo width_info(const TreeDecomposition& td) {
    int raw = width(td);
    return {std::max(raw, 0), raw < 0};
}

inline WidthInfo width_info(const PathDecomposition& pd) { return width_info(pd.as_tree()); }

// --- PACE-style .td serialization --------------------------------------------
//
// Canonical form: "s td <#bags> <max bag size> <n>", bags in node order with
// ascending 1-indexed vertices, then tree edges in canonical order.

inline void write_td(const TreeDecomposition& td, std::ostream& out) {
    size_t largest = 0;
    for (const auto& bag : td.bags) largest = std::max(largest, bag.size());
    out << "s td " << td.node_count() << ' ' << largest << ' ' << td.graph_vertex_count
        << '\n';
    for (int node = 0; node < td.node_count(); ++node) {
        out << "b " << node + 1;
        for (int v : td.bags[node]) out << ' ' << v + 1;
        out << '\n';
    }
    std::vector<std::pair<int, int>> es = td.tree_edges;
    std::sort(es.begin(), es.end());
    for (const auto& [a, b] : es) out << a + 1 << ' ' << b + 1 << '\n';
}

inline void write_td(const PathDecomposition& pd, std::ostream& out) {
    write_td(pd.as_tree(), out);
}

inline std::string to_td(const TreeDecomposition& td) {
    std::ostringstream out;
    write_td(td, out);
    return out.str();
}

inline std::string to_td(const PathDecomposition& pd) { return to_td(pd.as_tree()); }

inline TreeDecomposition read_td(std::istream& in) {
    TreeDecomposition td;
    bool seen_header = false;
    int declared_bags = 0;
    long long declared_largest = 0;
    std::vector<char> bag_seen;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        if (!seen_header) {
            std::string s, kind;
            if (!(ls >> s >> kind >> declared_bags >> declared_largest >>
                  td.graph_vertex_count) ||
                s != "s" || kind != "td")
                throw parse_error("expected 's td <bags> <size> <n>' header, got '" + line +
                                  "'");
            if (declared_bags < 0 || declared_largest < 0 || td.graph_vertex_count < 0)
                throw parse_error("negative counts in .td header");
            std::string extra;
            if (ls >> extra) throw parse_error("trailing tokens in .td header");
            td.bags.assign(declared_bags, {});
            bag_seen.assign(declared_bags, 0);
            seen_header = true;
            continue;
        }
        if (line[0] == 'b') {
            char b = 0;
            int id = 0;
            ls >> b >> id;
            if (ls.fail() || id < 1 || id > declared_bags)
                throw parse_error("bad bag line '" + line + "'");
            if (bag_seen[id - 1]) throw parse_error("duplicate bag id " + std::to_string(id));
            bag_seen[id - 1] = 1;
            int v = 0;
            while (ls >> v) {
                if (v < 1 || v > td.graph_vertex_count)
                    throw parse_error("bag vertex out of range on line '" + line + "'");
                td.bags[id - 1].push_back(v - 1);
            }
            if (!ls.eof()) throw parse_error("bad token on bag line '" + line + "'");
            continue;
        }
        int a = 0, b = 0;
        if (!(ls >> a >> b)) throw parse_error("bad tree edge line '" + line + "'");
        std::string extra;
        if (ls >> extra) throw parse_error("trailing tokens on tree edge line '" + line + "'");
        if (a < 1 || a > declared_bags || b < 1 || b > declared_bags || a == b)
            throw parse_error("tree edge endpoints out of range on line '" + line + "'");
        td.tree_edges.push_back(make_edge(a - 1, b - 1));
    }
    if (!seen_header) throw parse_error("missing .td header");
    for (int id = 0; id < declared_bags; ++id)
        if (!bag_seen[id]) throw parse_error("bag " + std::to_string(id + 1) + " never defined");
    size_t largest = 0;
    for (const auto& bag : td.bags) largest = std::max(largest, bag.size());
    if (static_cast<long long>(largest) != declared_largest)
        throw parse_error("largest bag size does not match header");
    td.normalize();
    return td;
}

inline TreeDecomposition td_from_string(const std::string& text) {
    std::istringstream in(text);
    return read_td(in);
}

} // namespace linetw
