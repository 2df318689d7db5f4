#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "test_util.hpp"

using namespace linetw;

namespace {

// Brute-force reading of the hitting condition straight from the definition:
// h hits every bramble element iff no element's induced subgraph stays
// connected once the edges of h are removed.
bool hits_by_definition(const Graph& g, int v, const std::vector<Edge>& h) {
    for (const auto& element : enumerate_bramble(g, v))
        if (testutil::induced_minus_connected(g, element, h)) return false;
    return true;
}

} // namespace

TEST_CASE("default distinguished vertex picks the first largest class", "[bramble]") {
    REQUIRE(default_bramble_vertex(MultipartiteSpec{{2, 3}}) == 2);
    REQUIRE(default_bramble_vertex(MultipartiteSpec{{3, 3}}) == 0);
    REQUIRE(default_bramble_vertex(MultipartiteSpec{{1, 1, 1}}) == 0);
    REQUIRE(default_bramble_vertex(MultipartiteSpec{{1, 2, 3}}) == 3);
}

TEST_CASE("bramble enumeration on the four-cycle", "[bramble]") {
    const auto g = complete_multipartite(MultipartiteSpec{{2, 2}});
    const auto elements = enumerate_bramble(g, 0);
    REQUIRE(elements.size() == 7); // {0,2},{0,3}, all four triples, the whole cycle
    for (const auto& s : elements) {
        REQUIRE(2 * s.size() >= 4u);
        if (2 * s.size() == 4u)
            REQUIRE(std::find(s.begin(), s.end(), 0) != s.end());
    }
}

TEST_CASE("bramble elements pairwise touch", "[bramble]") {
    // the defining property of a bramble: any two elements share a vertex or
    // are joined by an edge
    const auto g = complete_multipartite(MultipartiteSpec{{1, 2, 3}});
    const auto elements = enumerate_bramble(g, default_bramble_vertex(MultipartiteSpec{{1, 2, 3}}));
    REQUIRE_FALSE(elements.empty());
    for (const auto& a : elements)
        for (const auto& b : elements) {
            bool touch = false;
            for (int u : a)
                for (int w : b)
                    if (u == w || g.has_edge(u, w)) touch = true;
            REQUIRE(touch);
        }
}

TEST_CASE("hitting test matches the component characterization by definition",
          "[bramble]") {
    const auto g = complete_multipartite(MultipartiteSpec{{2, 2}});
    const int v = 0;
    // all 16 edge subsets of the four-cycle
    for (int mask = 0; mask < 16; ++mask) {
        std::vector<Edge> h;
        for (int e = 0; e < 4; ++e)
            if (mask >> e & 1) h.push_back(g.edges[e]);
        REQUIRE(is_canonical_hitting_set(g, v, h) == hits_by_definition(g, v, h));
    }
}

TEST_CASE("hitting test matches the definition on random edge sets", "[bramble]") {
    std::mt19937 rng(55221);
    for (const auto& spec : testutil::canonical_specs(3, 6)) {
        const auto g = complete_multipartite(spec);
        const int v = default_bramble_vertex(spec);
        for (int iter = 0; iter < 40; ++iter) {
            std::vector<Edge> h;
            for (const auto& e : g.edges)
                if (rng() % 3 == 0) h.push_back(e);
            REQUIRE(is_canonical_hitting_set(g, v, h) == hits_by_definition(g, v, h));
        }
    }
}

TEST_CASE("empty and full edge sets behave as expected", "[bramble]") {
    const auto g = complete_multipartite(MultipartiteSpec{{1, 1, 1}});
    REQUIRE_FALSE(is_canonical_hitting_set(g, 0, {}));
    REQUIRE(is_canonical_hitting_set(g, 0, g.edges));
}

TEST_CASE("minimum hitting set sizes match the closed forms", "[bramble]") {
    REQUIRE(min_canonical_hitting_set(MultipartiteSpec{{1, 1, 1}}).size == 3);
    REQUIRE(min_canonical_hitting_set(MultipartiteSpec{{1, 1, 1, 1}}).size == 5);
    REQUIRE(min_canonical_hitting_set(MultipartiteSpec{{1, 1, 1, 1, 1}}).size == 8);
    REQUIRE(min_canonical_hitting_set(MultipartiteSpec{{2, 2}}).size == 3);
    REQUIRE(min_canonical_hitting_set(MultipartiteSpec{{3, 3}}).size == 6);
    REQUIRE(min_canonical_hitting_set(MultipartiteSpec{{2, 2, 2}}).size == 8);
    REQUIRE(min_canonical_hitting_set(MultipartiteSpec{{2, 3}}).size == 4);
}

TEST_CASE("minimum hitting set witnesses are consistent", "[bramble]") {
    for (const auto& spec : testutil::canonical_specs(3, 7)) {
        const auto g = complete_multipartite(spec);
        const int v = default_bramble_vertex(spec);
        const auto result = min_canonical_hitting_set(spec);
        const auto parts = result.parts();

        // every part obeys the size caps
        const int n = spec.n();
        for (const auto& part : parts) REQUIRE(2 * static_cast<int>(part.size()) <= n);
        if (n % 2 == 0)
            for (const auto& part : parts)
                if (std::find(part.begin(), part.end(), v) != part.end())
                    REQUIRE(2 * static_cast<int>(part.size()) < n);

        // the crossing edges realize the reported size and do hit
        const auto h = crossing_edges(g, parts);
        REQUIRE(static_cast<int>(h.size()) == result.size);
        REQUIRE(is_canonical_hitting_set(g, v, h));

        // minimality against is_canonical_hitting_set over all edge subsets
        // (only for tiny graphs)
        if (g.edge_count() <= 9) {
            int brute = g.edge_count();
            for (int mask = 0; mask < (1 << g.edge_count()); ++mask) {
                std::vector<Edge> cand;
                for (int e = 0; e < g.edge_count(); ++e)
                    if (mask >> e & 1) cand.push_back(g.edges[e]);
                if (static_cast<int>(cand.size()) < brute &&
                    is_canonical_hitting_set(g, v, cand))
                    brute = static_cast<int>(cand.size());
            }
            REQUIRE(result.size == brute);
        }
    }
}

TEST_CASE("bramble order sits one above the treewidth on exact families", "[bramble]") {
    const std::vector<MultipartiteSpec> exact = {
        {{1, 1, 1}}, {{1, 1, 1, 1}}, {{1, 1, 1, 1, 1}}, {{2, 2}}, {{3, 3}}, {{2, 2, 2}}};
    for (const auto& spec : exact) {
        const auto [lg, map] = line_graph(complete_multipartite(spec));
        REQUIRE(min_canonical_hitting_set(spec).size - 1 == exact_treewidth(lg).value);
    }
}

TEST_CASE("bramble interfaces reject bad input", "[bramble]") {
    const auto g = complete_multipartite(MultipartiteSpec{{1, 1}});
    REQUIRE_THROWS_AS(enumerate_bramble(g, 0), domain_error);
    REQUIRE_THROWS_AS(is_canonical_hitting_set(g, 0, {}), domain_error);
    REQUIRE_THROWS_AS(min_canonical_hitting_set(MultipartiteSpec{{1, 1}}), domain_error);

    const auto k3 = complete_multipartite(MultipartiteSpec{{1, 1, 1}});
    REQUIRE_THROWS_AS(is_canonical_hitting_set(k3, 5, {}), domain_error);
    REQUIRE_THROWS_AS(is_canonical_hitting_set(k3, 0, {{0, 0}}), domain_error);
    REQUIRE_THROWS_AS(min_canonical_hitting_set(MultipartiteSpec{{4, 4, 4}}), budget_error);
    REQUIRE_THROWS_AS(enumerate_bramble(complete_multipartite(MultipartiteSpec{{5, 5}}), 0),
                      budget_error);
}
