#pragma once

#include <algorithm>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "linetw/decomposition.hpp"
#include "linetw/graph.hpp"

namespace linetw {

// --- Complete graphs ----------------------------------------------------------

// Optimal path decomposition of the line graph of K_n: one bag per vertex i of
// K_n holding every edge {u, w} with u <= i <= w. Width matches tw_line_kn(n).
inline PathDecomposition kn_decomposition(int n) {
    if (n < 1) throw domain_error("kn_decomposition needs n >= 1");
    MultipartiteSpec ones;
    ones.parts.assign(n, 1);
    auto [lg, map] = line_graph(complete_multipartite(ones));
    PathDecomposition pd;
    pd.graph_vertex_count = lg.vertex_count;
    pd.bags.resize(n);
    for (int i = 0; i < n; ++i)
        for (int e = 0; e < map.size(); ++e)
            if (map.edge_of[e].first <= i && i <= map.edge_of[e].second)
                pd.bags[i].push_back(e);
    return pd;
}

// --- Vertex partitions for multipartite graphs ---------------------------------

// Partition of the vertices into q1, q2 and a single vertex z, with a
// distinguished vertex v. Cutting all edges between the three parts leaves
// components small enough to hit the canonical line-bramble, and the part
// sizes and per-class splits below are what the width bounds rely on.
struct TriPartition {
    std::vector<int> q1, q2; // ascending
    int z = -1;
    int v = -1;

    void check(const MultipartiteSpec& spec) const {
        spec.check();
        const int n = spec.n();
        if (z < 0 || z >= n || v < 0 || v >= n)
            throw domain_error("tri-partition: z or v out of range");
        std::vector<int> seen(n, 0);
        for (int u : q1) ++seen.at(u);
        for (int u : q2) ++seen.at(u);
        ++seen[z];
        for (int u = 0; u < n; ++u)
            if (seen[u] != 1) throw domain_error("tri-partition does not partition V");
        if (!std::is_sorted(q1.begin(), q1.end()) || !std::is_sorted(q2.begin(), q2.end()))
            throw domain_error("tri-partition parts must be ascending");
        const int t1 = (n % 2 == 1) ? (n - 1) / 2 : n / 2;
        const int t2 = n - 1 - t1;
        if (static_cast<int>(q1.size()) != t1 || static_cast<int>(q2.size()) != t2)
            throw domain_error("tri-partition part sizes must be (" + std::to_string(t1) +
                               "," + std::to_string(t2) + ",1)");
        std::vector<int> colour;
        for (int c = 0; c < spec.k(); ++c)
            for (int i = 0; i < spec.parts[c]; ++i) colour.push_back(c);
        std::vector<int> a(spec.k(), 0), b(spec.k(), 0);
        for (int u : q1) ++a[colour[u]];
        for (int u : q2) ++b[colour[u]];
        for (int c = 0; c < spec.k(); ++c) {
            const int low = std::max(0, (spec.parts[c] - 2 + 1) / 2); // ceil((n_c-2)/2)
            const int high = (spec.parts[c] + 1) / 2;                 // floor((n_c+1)/2)
            if (a[c] < low || a[c] > high || b[c] < low || b[c] > high)
                throw domain_error("tri-partition class " + std::to_string(c) +
                                   " split (" + std::to_string(a[c]) + "," +
                                   std::to_string(b[c]) + ") outside [" +
                                   std::to_string(low) + "," + std::to_string(high) + "]");
        }
        if (z != v && colour[z] == colour[v])
            throw domain_error("tri-partition: z shares v's colour class");
        if (n % 2 == 0 && std::binary_search(q1.begin(), q1.end(), v))
            throw domain_error("tri-partition: v must avoid q1 when n is even");
    }

    bool operator==(const TriPartition&) const = default;
};

// Deterministic partition construction. Classes are processed in descending
// size (ties by index); v is the first vertex of the first class, z the first
// vertex of the last. Each class splits as evenly as possible between q1 and
// q2 (q1 favoured), then the earliest-processed classes with odd remainders
// are flipped until |q1| hits its target. Within a class the lowest-indexed
// vertices go to q1, except that v goes to q2 when n is even.
inline TriPartition good_partition(const MultipartiteSpec& spec) {
    spec.check();
    const int n = spec.n(), k = spec.k();
    if (k < 2) throw unsupported_shape_error("good_partition needs k >= 2");
    if (spec.is_complete())
        throw unsupported_shape_error("complete specs take the K_n construction");
    if (spec.is_star()) throw unsupported_shape_error("stars take the single-bag construction");

    std::vector<int> order(k);
    for (int c = 0; c < k; ++c) order[c] = c;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return spec.parts[a] > spec.parts[b]; });
    const auto offset = class_offsets(spec);

    TriPartition p;
    p.v = offset[order.front()];
    p.z = offset[order.back()];

    const int t1 = (n % 2 == 1) ? (n - 1) / 2 : n / 2;
    std::vector<int> take(k, 0); // how many vertices of each class go to q1
    int planned = 0, odd_count = 0;
    for (int c : order) {
        const int m = spec.parts[c] - (c == order.back() ? 1 : 0);
        take[c] = (m + 1) / 2;
        planned += take[c];
        odd_count += m % 2;
    }
    int flips = planned - t1; // provably in [0, odd_count]
    for (int c : order) {
        if (flips == 0) break;
        const int m = spec.parts[c] - (c == order.back() ? 1 : 0);
        if (m % 2 == 1) {
            --take[c]; // ceil(m/2) -> floor(m/2)
            --flips;
        }
    }

    for (int c = 0; c < k; ++c) {
        std::vector<int> members;
        for (int u = offset[c]; u < offset[c + 1]; ++u) {
            if (u == p.z) continue;
            if (u == p.v && n % 2 == 0) continue; // v joins q2 below
            members.push_back(u);
        }
        for (int i = 0; i < static_cast<int>(members.size()); ++i)
            (i < take[c] ? p.q1 : p.q2).push_back(members[i]);
        if (p.v >= offset[c] && p.v < offset[c + 1] && n % 2 == 0) p.q2.push_back(p.v);
    }
    std::sort(p.q1.begin(), p.q1.end());
    std::sort(p.q2.begin(), p.q2.end());
    p.check(spec);
    return p;
}

// Edges whose endpoints lie in different parts, in canonical edge order.
inline std::vector<Edge> crossing_edges(const Graph& g,
                                        const std::vector<std::vector<int>>& parts) {
    g.check();
    std::vector<int> part_of(g.vertex_count, -1);
    for (size_t p = 0; p < parts.size(); ++p)
        for (int u : parts[p]) {
            if (u < 0 || u >= g.vertex_count || part_of[u] != -1)
                throw domain_error("parts must partition the vertex set");
            part_of[u] = static_cast<int>(p);
        }
    for (int u = 0; u < g.vertex_count; ++u)
        if (part_of[u] == -1) throw domain_error("parts must partition the vertex set");
    std::vector<Edge> out;
    for (const auto& e : g.edges)
        if (part_of[e.first] != part_of[e.second]) out.push_back(e);
    return out;
}

inline std::vector<Edge> crossing_edges(const Graph& g, const TriPartition& p) {
    return crossing_edges(g, std::vector<std::vector<int>>{p.q1, p.q2, {p.z}});
}

// --- Vertex orderings -----------------------------------------------------------

enum class OrderingFlavour { red, blue };

inline OrderingFlavour parse_flavour(const std::string& name) {
    if (name == "red") return OrderingFlavour::red;
    if (name == "blue") return OrderingFlavour::blue;
    throw parse_error("unknown ordering flavour '" + name + "'");
}

// Sequences x (over q1) and y (over q2) that fix the bag order of the
// multipartite construction. Red orders each part by ascending colour-class
// size and works for every spec; blue exists for regular specs and orders by
// vertex type, which pins the crossing-edge bag as the largest one.
struct VertexOrdering {
    std::vector<int> x, y;
    OrderingFlavour flavour = OrderingFlavour::red;
    std::vector<int> type_of; // blue only: 1, 2 or 3 per vertex; empty for red
};

inline VertexOrdering make_ordering(const MultipartiteSpec& spec, const TriPartition& p,
                                    OrderingFlavour flavour) {
    p.check(spec);
    std::vector<int> colour;
    for (int c = 0; c < spec.k(); ++c)
        for (int i = 0; i < spec.parts[c]; ++i) colour.push_back(c);

    VertexOrdering ord;
    ord.flavour = flavour;
    ord.x = p.q1;
    ord.y = p.q2;

    if (flavour == OrderingFlavour::red) {
        auto by_class_size = [&](int a, int b) {
            return spec.parts[colour[a]] < spec.parts[colour[b]];
        };
        std::stable_sort(ord.x.begin(), ord.x.end(), by_class_size);
        std::stable_sort(ord.y.begin(), ord.y.end(), by_class_size);
        return ord;
    }

    if (!spec.is_regular())
        throw unsupported_shape_error("blue ordering needs a regular spec");
    // Per-class splits decide the types: the class holding z is Type 3
    // throughout; a skew class is Type 1 on its majority side and Type 2 on
    // the other; balanced classes are Type 1 throughout.
    std::vector<int> a(spec.k(), 0), b(spec.k(), 0);
    for (int u : p.q1) ++a[colour[u]];
    for (int u : p.q2) ++b[colour[u]];
    ord.type_of.assign(spec.n(), 0);
    for (int u = 0; u < spec.n(); ++u) {
        const int c = colour[u];
        if (c == colour[p.z])
            ord.type_of[u] = 3;
        else if (a[c] == b[c])
            ord.type_of[u] = 1;
        else if (std::binary_search(p.q1.begin(), p.q1.end(), u))
            ord.type_of[u] = a[c] > b[c] ? 1 : 2;
        else
            ord.type_of[u] = b[c] > a[c] ? 1 : 2;
    }
    auto by_type = [&](int s, int t) { return ord.type_of[s] < ord.type_of[t]; };
    std::stable_sort(ord.x.begin(), ord.x.end(), by_type);
    std::stable_sort(ord.y.begin(), ord.y.end(), by_type);
    return ord;
}

// --- Path decomposition of a multipartite line graph ----------------------------

struct MultipartiteConstruction {
    PathDecomposition decomposition;
    std::optional<TriPartition> partition; // absent for the complete / star dispatch
    std::optional<VertexOrdering> ordering;
    std::string dispatch; // "complete", "star" or "general"
};

// Path decomposition of the line graph of K_{n_1,...,n_k}. Complete specs take
// the K_n construction and stars collapse to a single clique bag; otherwise
// the bags run beta_|q2|, ..., beta_1, gamma, alpha_1, ..., alpha_|q1| where
// gamma holds the crossing edges of a good partition, alpha_i holds the edges
// of x_1..x_i into q1 plus the edges of x_i..x_|q1| out of q1, and the betas
// mirror that on q2. Every edge then occupies one contiguous run of bags.
inline MultipartiteConstruction build_multipartite_decomposition(
    const MultipartiteSpec& spec, OrderingFlavour flavour) {
    spec.check();
    MultipartiteConstruction out;
    if (spec.is_complete()) {
        out.decomposition = kn_decomposition(spec.n());
        out.dispatch = "complete";
        return out;
    }
    if (spec.k() < 2)
        throw unsupported_shape_error("decomposition needs k >= 2 classes");
    const Graph g = complete_multipartite(spec);
    auto [lg, map] = line_graph(g);
    if (spec.is_star()) {
        PathDecomposition pd;
        pd.graph_vertex_count = lg.vertex_count;
        pd.bags.emplace_back();
        for (int e = 0; e < map.size(); ++e) pd.bags[0].push_back(e);
        out.decomposition = std::move(pd);
        out.dispatch = "star";
        return out;
    }

    const TriPartition p = good_partition(spec);
    const VertexOrdering ord = make_ordering(spec, p, flavour);
    std::vector<char> in_q1(spec.n(), 0), in_q2(spec.n(), 0);
    for (int u : p.q1) in_q1[u] = 1;
    for (int u : p.q2) in_q2[u] = 1;

    auto side_bag = [&](const std::vector<int>& seq, const std::vector<char>& inside,
                        int i) {
        std::vector<int> bag;
        for (int l = 0; l <= i; ++l)
            for (int u = 0; u < spec.n(); ++u)
                if (inside[u] && g.has_edge(seq[l], u))
                    bag.push_back(map.index_of(seq[l], u));
        for (int j = i; j < static_cast<int>(seq.size()); ++j)
            for (int w = 0; w < spec.n(); ++w)
                if (!inside[w] && g.has_edge(seq[j], w))
                    bag.push_back(map.index_of(seq[j], w));
        std::sort(bag.begin(), bag.end());
        bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
        return bag;
    };

    PathDecomposition pd;
    pd.graph_vertex_count = lg.vertex_count;
    for (int j = static_cast<int>(ord.y.size()) - 1; j >= 0; --j)
        pd.bags.push_back(side_bag(ord.y, in_q2, j));
    std::vector<int> gamma;
    for (const auto& e : crossing_edges(g, p)) gamma.push_back(map.index_of(e.first, e.second));
    std::sort(gamma.begin(), gamma.end());
    pd.bags.push_back(std::move(gamma));
    for (int i = 0; i < static_cast<int>(ord.x.size()); ++i)
        pd.bags.push_back(side_bag(ord.x, in_q1, i));

    out.decomposition = std::move(pd);
    out.partition = p;
    out.ordering = ord;
    out.dispatch = "general";
    return out;
}

inline PathDecomposition multipartite_decomposition(const MultipartiteSpec& spec,
                                                    OrderingFlavour flavour) {
    return build_multipartite_decomposition(spec, flavour).decomposition;
}

// Records which part, colour class, type and sequence position each vertex got,
// so a construction run can be reproduced and audited. 1-indexed like the PACE
// files; part is 1 for q1, 2 for q2, 3 for z; type is 0 for red orderings;
// position counts within x / y and is 0 for z.
inline void write_partition_sidecar(std::ostream& out, const MultipartiteSpec& spec,
                                    const TriPartition& p, const VertexOrdering& ord) {
    std::vector<int> colour;
    for (int c = 0; c < spec.k(); ++c)
        for (int i = 0; i < spec.parts[c]; ++i) colour.push_back(c);
    const int n = spec.n();
    std::vector<int> part(n, 0), pos(n, 0);
    for (size_t i = 0; i < ord.x.size(); ++i) {
        part[ord.x[i]] = 1;
        pos[ord.x[i]] = static_cast<int>(i) + 1;
    }
    for (size_t j = 0; j < ord.y.size(); ++j) {
        part[ord.y[j]] = 2;
        pos[ord.y[j]] = static_cast<int>(j) + 1;
    }
    part[p.z] = 3;
    out << "c partition sidecar for spec " << spec.to_string() << " flavour "
        << (ord.flavour == OrderingFlavour::red ? "red" : "blue") << '\n';
    out << "c columns: vertex part colour type position\n";
    for (int u = 0; u < n; ++u) {
        const int type = ord.type_of.empty() ? 0 : ord.type_of[u];
        out << u + 1 << ' ' << part[u] << ' ' << colour[u] + 1 << ' ' << type << ' '
            << pos[u] << '\n';
    }
}

} // namespace linetw
