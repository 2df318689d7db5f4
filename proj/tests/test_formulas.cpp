#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "test_util.hpp"

using namespace linetw;

TEST_CASE("complete graph closed form values", "[formulas]") {
    const std::vector<long long> expect = {0, 2, 4, 7, 10, 14, 18, 23};
    for (int n = 2; n <= 9; ++n) {
        const auto f = tw_line_kn(n);
        REQUIRE(f.value == expect[n - 2]);
        REQUIRE(f.case_tag == (n % 2 ? "n odd" : "n even"));
    }
    REQUIRE_THROWS_AS(tw_line_kn(1), domain_error);
}

TEST_CASE("complete graph hitting set size is treewidth plus one", "[formulas]") {
    REQUIRE(h_size_kn(3).value == 3);
    REQUIRE(h_size_kn(4).value == 5);
    REQUIRE(h_size_kn(5).value == 8);
    for (int n = 3; n <= 40; ++n)
        REQUIRE(h_size_kn(n).value == tw_line_kn(n).value + 1);
    REQUIRE_THROWS_AS(h_size_kn(2), domain_error);
}

TEST_CASE("regular multipartite closed form values", "[formulas]") {
    REQUIRE(tw_line_regular(2, 2).value == 2);
    REQUIRE(tw_line_regular(2, 3).value == 7);
    REQUIRE(tw_line_regular(3, 2).value == 5);
    REQUIRE(tw_line_regular(4, 2).value == 9);
    REQUIRE(tw_line_regular(3, 3).value == 16);
    REQUIRE(tw_line_regular(1, 5).value == 7);
    REQUIRE(tw_line_regular(2, 2).case_tag == "c even");
    REQUIRE(tw_line_regular(3, 3).case_tag == "k odd, c odd");
    REQUIRE(tw_line_regular(3, 2).case_tag == "k even, c odd");
    REQUIRE_THROWS_AS(tw_line_regular(0, 2), domain_error);
    REQUIRE_THROWS_AS(tw_line_regular(1, 1), domain_error);
}

TEST_CASE("one-element classes reduce the regular form to the complete form",
          "[formulas]") {
    for (int k = 2; k <= 30; ++k)
        REQUIRE(tw_line_regular(1, k).value == tw_line_kn(k).value);
    for (int k = 3; k <= 30; ++k)
        REQUIRE(h_size_regular(1, k).value == h_size_kn(k).value);
}

TEST_CASE("regular hitting set size is treewidth plus one", "[formulas]") {
    REQUIRE(h_size_regular(2, 2).value == 3);
    REQUIRE(h_size_regular(2, 3).value == 8);
    REQUIRE(h_size_regular(3, 2).value == 6);
    REQUIRE(h_size_regular(1, 5).value == 8);
    for (int c = 1; c <= 8; ++c)
        for (int k = 2; k <= 10; ++k)
            REQUIRE(h_size_regular(c, k).value == tw_line_regular(c, k).value + 1);
}

TEST_CASE("closed forms match the exhaustive solvers on small instances",
          "[formulas]") {
    for (int n = 3; n <= 6; ++n) {
        std::vector<int> ones(n, 1);
        const auto [lg, map] = line_graph(complete_multipartite(MultipartiteSpec{ones}));
        REQUIRE(exact_treewidth(lg).value == tw_line_kn(n).value);
        REQUIRE(exact_pathwidth(lg).value == tw_line_kn(n).value);
    }
    const std::vector<std::pair<int, int>> shapes = {{2, 2}, {3, 2}, {2, 3}};
    for (const auto& [c, k] : shapes) {
        const MultipartiteSpec spec{std::vector<int>(k, c)};
        const auto [lg, map] = line_graph(complete_multipartite(spec));
        REQUIRE(exact_treewidth(lg).value == tw_line_regular(c, k).value);
        REQUIRE(exact_pathwidth(lg).value == tw_line_regular(c, k).value);
    }
}

TEST_CASE("general bounds bracket the regular closed form", "[formulas]") {
    for (int c = 1; c <= 5; ++c)
        for (int k = 2; k <= 7; ++k) {
            const MultipartiteSpec spec{std::vector<int>(k, c)};
            const auto b = bounds_line_multipartite(spec);
            const auto tw = tw_line_regular(c, k).value;
            REQUIRE(b.lower <= tw);
            REQUIRE(tw <= b.upper);
            REQUIRE(b.lower >= 0);
            REQUIRE(b.raw_lower <= b.lower);
        }
}

TEST_CASE("general bounds on a thin spec clamp the raw lower bound", "[formulas]") {
    const auto b = bounds_line_multipartite(MultipartiteSpec{{2, 3}});
    REQUIRE(b.raw_lower == -2);
    REQUIRE(b.lower == 0);
    REQUIRE(b.upper == 17);
    REQUIRE_THROWS_AS(bounds_line_multipartite(MultipartiteSpec{{5}}), domain_error);
}

TEST_CASE("hitting set order bounds sit one numerator unit above the width bounds",
          "[formulas]") {
    for (const auto& spec : testutil::canonical_specs(2, 10)) {
        const auto hs = hitting_set_order_bounds(spec);
        const long long k = spec.k(), n = spec.n();
        long long s2 = 0;
        for (size_t i = 0; i < spec.parts.size(); ++i)
            for (size_t j = i + 1; j < spec.parts.size(); ++j)
                s2 += 2LL * spec.parts[i] * spec.parts[j];
        const long long tw_lower_num4 = s2 - 4 * n * (k - 1) + 3 * k * (k - 1) - 4;
        REQUIRE(hs.lower_num4 == tw_lower_num4 + 4);
        REQUIRE(hs.lower <= hs.upper);
    }
    REQUIRE_THROWS_AS(hitting_set_order_bounds(MultipartiteSpec{{4}}), domain_error);
}

TEST_CASE("hitting set order bounds bracket the regular closed form", "[formulas]") {
    for (int c = 1; c <= 5; ++c)
        for (int k = 2; k <= 7; ++k) {
            const MultipartiteSpec spec{std::vector<int>(k, c)};
            const auto hs = hitting_set_order_bounds(spec);
            const auto h = h_size_regular(c, k).value;
            REQUIRE(hs.lower <= h);
            REQUIRE(h <= hs.upper);
        }
}
