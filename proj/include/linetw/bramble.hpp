#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "linetw/graph.hpp"

namespace linetw {

// The canonical line-bramble of a graph G with distinguished vertex v is the
// family of connected subgraphs X with |V(X)| > n/2, together with those with
// |V(X)| = n/2 that contain v (n even). An edge set hits it when every element
// contains at least one of the edges.

// Default distinguished vertex: lowest-indexed vertex of the first largest
// colour class.
inline int default_bramble_vertex(const MultipartiteSpec& spec) {
    spec.check();
    int best = 0;
    for (int c = 1; c < spec.k(); ++c)
        if (spec.parts[c] > spec.parts[best]) best = c;
    return class_offsets(spec)[best];
}

// Decides whether h hits every element of the canonical line-bramble, via the
// component characterization: h is a hitting set exactly when every component
// of g - h has at most n/2 vertices and, for even n, v's component has fewer
// than n/2.
inline bool is_canonical_hitting_set(const Graph& g, int v,
                                     const std::vector<Edge>& h) {
    g.check();
    const int n = g.vertex_count;
    if (n < 3) throw domain_error("canonical line-bramble needs at least 3 vertices");
    if (v < 0 || v >= n) throw domain_error("distinguished vertex out of range");
    std::vector<Edge> removed;
    removed.reserve(h.size());
    for (const auto& [a, b] : h) {
        if (!g.has_edge(a, b))
            throw domain_error("hitting-set edge (" + std::to_string(a) + "," +
                               std::to_string(b) + ") is not an edge of the graph");
        removed.push_back(make_edge(a, b));
    }
    std::sort(removed.begin(), removed.end());
    std::vector<std::vector<int>> adj(n);
    for (const auto& e : g.edges)
        if (!std::binary_search(removed.begin(), removed.end(), e)) {
            adj[e.first].push_back(e.second);
            adj[e.second].push_back(e.first);
        }
    std::vector<int> comp(n, -1);
    std::vector<int> comp_size;
    for (int start = 0; start < n; ++start) {
        if (comp[start] >= 0) continue;
        const int id = static_cast<int>(comp_size.size());
        int size = 0;
        std::vector<int> stack{start};
        comp[start] = id;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            ++size;
            for (int w : adj[u])
                if (comp[w] < 0) {
                    comp[w] = id;
                    stack.push_back(w);
                }
        }
        comp_size.push_back(size);
    }
    for (int size : comp_size)
        if (2 * size > n) return false;
    if (n % 2 == 0 && 2 * comp_size[comp[v]] == n) return false;
    return true;
}

// A minimum hitting set together with the vertex partition that produces it as
// its crossing-edge set. part_of is the partition's canonical assignment
// vector (first vertex in part 0, first vertex outside part 0 in part 1, ...).
struct MinHittingSetResult {
    int size = 0;
    std::vector<int> part_of;

    std::vector<std::vector<int>> parts() const {
        int count = 0;
        for (int p : part_of) count = std::max(count, p + 1);
        std::vector<std::vector<int>> out(count);
        for (size_t u = 0; u < part_of.size(); ++u)
            out[part_of[u]].push_back(static_cast<int>(u));
        return out;
    }
};

namespace detail {

struct PartitionSearch {
    int n = 0, k = 0, v = 0;
    int cap = 0, cap_v = 0;
    std::vector<int> colour;
    std::vector<int> class_size;
    std::vector<int> assign;
    std::vector<int> part_size;
    std::vector<std::vector<int>> tally; // part x colour
    int best = -1;
    std::vector<int> best_assign;

    // Crossing edges of the current full assignment: pairs in different parts
    // minus same-coloured pairs in different parts, from the part/colour tallies.
    int crossing() const {
        long long parts_sq = 0;
        for (int p : part_size) parts_sq += static_cast<long long>(p) * p;
        long long same_colour_sq = 0;
        for (const auto& row : tally)
            for (int t : row) same_colour_sq += static_cast<long long>(t) * t;
        long long colour_sq = 0;
        for (int s : class_size) colour_sq += static_cast<long long>(s) * s;
        const long long diff_part_pairs = (static_cast<long long>(n) * n - parts_sq) / 2;
        const long long same_colour_diff_part = (colour_sq - same_colour_sq) / 2;
        return static_cast<int>(diff_part_pairs - same_colour_diff_part);
    }

    void run(int u, int used) {
        if (u == n) {
            const int value = crossing();
            if (best < 0 || value < best) {
                best = value;
                best_assign = assign;
            }
            return;
        }
        const int limit = std::min(used + 1, n);
        for (int p = 0; p < limit; ++p) {
            const int part_cap = (u == v || (v < u && assign[v] == p)) ? cap_v : cap;
            if (part_size[p] + 1 > part_cap) continue;
            assign[u] = p;
            ++part_size[p];
            ++tally[p][colour[u]];
            run(u + 1, std::max(used, p + 1));
            --tally[p][colour[u]];
            --part_size[p];
            assign[u] = -1;
        }
    }
};

} // namespace detail

// Minimum canonical-line-bramble hitting set size for K_{n_1,...,n_k}, by
// exhaustive search over vertex partitions whose parts hold at most n/2
// vertices each (v's part strictly fewer when n is even). The crossing edges
// of such a partition always form a hitting set, and the components of an
// optimal hitting set always form such a partition, so the search is exact.
// Ties take the lexicographically smallest assignment vector. Pass v = -1 for
// the default distinguished vertex.
inline MinHittingSetResult min_canonical_hitting_set(const MultipartiteSpec& spec,
                                                     int v = -1, int budget = 10) {
    spec.check();
    const int n = spec.n();
    if (n < 3) throw domain_error("canonical line-bramble needs at least 3 vertices");
    if (n > budget)
        throw budget_error("spec has " + std::to_string(n) +
                           " vertices, hitting-set budget is " + std::to_string(budget));
    if (v < 0) v = default_bramble_vertex(spec);
    if (v >= n) throw domain_error("distinguished vertex out of range");

    detail::PartitionSearch search;
    search.n = n;
    search.k = spec.k();
    search.v = v;
    search.cap = n / 2;
    search.cap_v = (n % 2 == 0) ? n / 2 - 1 : n / 2;
    search.class_size = spec.parts;
    search.colour.reserve(n);
    for (int c = 0; c < spec.k(); ++c)
        for (int i = 0; i < spec.parts[c]; ++i) search.colour.push_back(c);
    search.assign.assign(n, -1);
    search.part_size.assign(n, 0);
    search.tally.assign(n, std::vector<int>(spec.k(), 0));
    search.run(0, 0);

    MinHittingSetResult result;
    result.size = search.best;
    result.part_of = search.best_assign;
    return result;
}

// Lists every canonical line-bramble element as a vertex set: the connected
// induced subgraphs of more than n/2 vertices, plus those of exactly n/2
// vertices containing v. (Elements with the same vertex set but fewer edges
// are hit exactly when the induced one minus the candidate edges disconnects,
// so vertex sets are the faithful representation.)
inline std::vector<std::vector<int>> enumerate_bramble(const Graph& g, int v,
                                                       int budget = 8) {
    g.check();
    const int n = g.vertex_count;
    if (n < 3) throw domain_error("canonical line-bramble needs at least 3 vertices");
    if (v < 0 || v >= n) throw domain_error("distinguished vertex out of range");
    if (n > budget)
        throw budget_error("graph has " + std::to_string(n) +
                           " vertices, enumeration budget is " + std::to_string(budget));
    const auto adj = g.adjacency_masks();
    std::vector<std::vector<int>> elements;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
        const int size = std::popcount(mask);
        if (2 * size < n) continue;
        if (2 * size == n && !(mask >> v & 1)) continue;
        // connectivity of the induced subgraph
        std::uint32_t comp = mask & (~mask + 1); // lowest set bit
        std::uint32_t frontier = comp;
        while (frontier) {
            std::uint32_t nbhd = 0;
            for (std::uint32_t f = frontier; f;) {
                const int u = std::countr_zero(f);
                f &= f - 1;
                nbhd |= adj[u];
            }
            const std::uint32_t grown = comp | (nbhd & mask);
            frontier = grown & ~comp;
            comp = grown;
        }
        if (comp != mask) continue;
        std::vector<int> vertices;
        for (std::uint32_t m = mask; m;) {
            vertices.push_back(std::countr_zero(m));
            m &= m - 1;
        }
        elements.push_back(std::move(vertices));
    }
    return elements;
}

} // namespace linetw
