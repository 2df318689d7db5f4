#pragma once

#include <bit>
#include <cstdint>
#include <set>
#include <vector>

#include "linetw/graph.hpp"

namespace linetw {

// Result of an exhaustive width computation. For treewidth the witness is an
// elimination ordering (first eliminated first); for pathwidth it is a vertex
// layout (leftmost first). Replaying the witness reproduces the value.
struct OracleResult {
    int value = 0;
    std::vector<int> ordering;
};

namespace detail {

inline void check_oracle_budget(const Graph& g, int budget) {
    if (budget > 26) throw budget_error("oracle budget capped at 26 vertices (memory)");
    if (g.vertex_count > budget)
        throw budget_error("graph has " + std::to_string(g.vertex_count) +
                           " vertices, oracle budget is " + std::to_string(budget));
}

inline void check_permutation(const Graph& g, const std::vector<int>& order) {
    if (static_cast<int>(order.size()) != g.vertex_count)
        throw domain_error("ordering length does not match vertex count");
    std::vector<char> seen(g.vertex_count, 0);
    for (int v : order) {
        if (v < 0 || v >= g.vertex_count || seen[v])
            throw domain_error("ordering is not a permutation of the vertices");
        seen[v] = 1;
    }
}

} // namespace detail

// Max back-degree when eliminating vertices in the given order: each vertex, at
// its turn, counts its not-yet-eliminated neighbours, which then become a clique.
// The minimum over all orderings is the treewidth. Any graph size is accepted.
inline int width_of_elimination(const Graph& g, const std::vector<int>& order) {
    g.check();
    detail::check_permutation(g, order);
    std::vector<std::set<int>> adj(g.vertex_count);
    for (const auto& [u, v] : g.edges) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    std::vector<char> gone(g.vertex_count, 0);
    int widest = 0;
    for (int v : order) {
        std::vector<int> later;
        for (int u : adj[v])
            if (!gone[u]) later.push_back(u);
        widest = std::max(widest, static_cast<int>(later.size()));
        for (size_t a = 0; a < later.size(); ++a)
            for (size_t b = a + 1; b < later.size(); ++b) {
                adj[later[a]].insert(later[b]);
                adj[later[b]].insert(later[a]);
            }
        gone[v] = 1;
    }
    return widest;
}

// Max boundary size over prefixes of the layout: after each prefix, counts the
// placed vertices that still have a neighbour outside the prefix. The minimum
// over all layouts is the vertex separation number, which equals pathwidth.
inline int boundary_of_layout(const Graph& g, const std::vector<int>& order) {
    g.check();
    detail::check_permutation(g, order);
    auto adj = g.adjacency_lists();
    std::vector<int> unplaced_nbrs(g.vertex_count, 0);
    for (int v = 0; v < g.vertex_count; ++v)
        unplaced_nbrs[v] = static_cast<int>(adj[v].size());
    std::vector<char> placed(g.vertex_count, 0);
    int boundary = 0, widest = 0;
    for (int v : order) {
        placed[v] = 1;
        for (int u : adj[v])
            if (--unplaced_nbrs[u] == 0 && placed[u]) --boundary;
        if (unplaced_nbrs[v] > 0) ++boundary;
        widest = std::max(widest, boundary);
    }
    return widest;
}

// Exact treewidth by dynamic programming over subsets: dp[S] is the best width
// achievable when S is eliminated first, and the cost of eliminating v after
// S \ {v} is the number of vertices outside S reachable from v through S \ {v}
// (v's fill-in degree at that point).
inline OracleResult exact_treewidth(const Graph& g, int budget = 22) {
    g.check();
    detail::check_oracle_budget(g, budget);
    const int n = g.vertex_count;
    if (n == 0) return {0, {}};
    const auto adj = g.adjacency_masks();
    const std::uint32_t full = (n == 31) ? 0x7fffffffu : ((std::uint32_t{1} << n) - 1);
    std::vector<std::int8_t> dp(std::size_t{1} << n, 0);
    std::vector<std::int8_t> pick(std::size_t{1} << n, -1);
    for (std::uint32_t s = 1; s <= full; ++s) {
        int best = n, best_v = -1;
        for (std::uint32_t rest = s; rest;) {
            const int v = std::countr_zero(rest);
            rest &= rest - 1;
            const std::uint32_t prev = s & ~(std::uint32_t{1} << v);
            // grow v's component within prev ∪ {v}, collecting its neighbourhood
            std::uint32_t comp = std::uint32_t{1} << v;
            std::uint32_t frontier = comp, nbhd = 0;
            while (frontier) {
                for (std::uint32_t f = frontier; f;) {
                    const int u = std::countr_zero(f);
                    f &= f - 1;
                    nbhd |= adj[u];
                }
                const std::uint32_t grown = comp | (nbhd & prev);
                frontier = grown & ~comp;
                comp = grown;
            }
            const int cost = std::popcount(nbhd & ~s);
            const int value = std::max<int>(dp[prev], cost);
            if (value < best) {
                best = value;
                best_v = v;
            }
        }
        dp[s] = static_cast<std::int8_t>(best);
        pick[s] = static_cast<std::int8_t>(best_v);
    }
    OracleResult result;
    result.value = dp[full];
    result.ordering.assign(n, -1);
    for (std::uint32_t s = full; s;) {
        const int v = pick[s];
        result.ordering[std::popcount(s) - 1] = v;
        s &= ~(std::uint32_t{1} << v);
    }
    return result;
}

// Exact pathwidth by the same scheme over layouts: dp[S] is the best boundary
// achievable when S forms the prefix, and placing the last vertex of S costs
// the number of prefix vertices with a neighbour outside S.
inline OracleResult exact_pathwidth(const Graph& g, int budget = 22) {
    g.check();
    detail::check_oracle_budget(g, budget);
    const int n = g.vertex_count;
    if (n == 0) return {0, {}};
    const auto adj = g.adjacency_masks();
    const std::uint32_t full = (n == 31) ? 0x7fffffffu : ((std::uint32_t{1} << n) - 1);
    std::vector<std::int8_t> dp(std::size_t{1} << n, 0);
    std::vector<std::int8_t> pick(std::size_t{1} << n, -1);
    for (std::uint32_t s = 1; s <= full; ++s) {
        int boundary = 0;
        for (std::uint32_t rest = s; rest;) {
            const int u = std::countr_zero(rest);
            rest &= rest - 1;
            if (adj[u] & ~s) ++boundary;
        }
        int best = n, best_v = -1;
        for (std::uint32_t rest = s; rest;) {
            const int v = std::countr_zero(rest);
            rest &= rest - 1;
            const int value = std::max<int>(dp[s & ~(std::uint32_t{1} << v)], boundary);
            if (value < best) {
                best = value;
                best_v = v;
            }
        }
        dp[s] = static_cast<std::int8_t>(best);
        pick[s] = static_cast<std::int8_t>(best_v);
    }
    OracleResult result;
    result.value = dp[full];
    result.ordering.assign(n, -1);
    for (std::uint32_t s = full; s;) {
        const int v = pick[s];
        result.ordering[std::popcount(s) - 1] = v;
        s &= ~(std::uint32_t{1} << v);
    }
    return result;
}

} // namespace linetw
