#pragma once

#include <algorithm>
#include <string>

#include "linetw/graph.hpp"

namespace linetw {

// All closed forms below are quarter-integers: they are computed as exact
// integer numerators over denominator 4, then divided (with a divisibility
// check where the result is proven integral on the domain).

struct FormulaValue {
    long long value = 0;
    std::string case_tag;
};

namespace detail {

inline long long floor_div4(long long a) { return a >= 0 ? a / 4 : -((-a + 3) / 4); }
inline long long ceil_div4(long long a) { return a >= 0 ? (a + 3) / 4 : -((-a) / 4); }

inline long long exact_div4(long long a, const char* what) {
    if (a % 4 != 0)
        throw domain_error(std::string(what) + ": numerator " + std::to_string(a) +
                           " is not divisible by 4");
    return a / 4;
}

inline long long pair_product_sum(const MultipartiteSpec& spec) {
    long long total = 0;
    for (size_t i = 0; i < spec.parts.size(); ++i)
        for (size_t j = i + 1; j < spec.parts.size(); ++j)
            total += static_cast<long long>(spec.parts[i]) * spec.parts[j];
    return total; // = |E(K_{n_1,...,n_k})|
}

} // namespace detail

// Treewidth (= pathwidth) of the line graph of the complete graph K_n.
inline FormulaValue tw_line_kn(long long n) {
    if (n < 2) throw domain_error("tw_line_kn needs n >= 2");
    if (n % 2 == 1) return {(n - 1) / 2 * ((n - 1) / 2) + n - 2, "n odd"};
    return {(n - 2) / 2 * (n / 2) + n - 2, "n even"};
}

// Size of a minimum canonical-line-bramble hitting set in K_n.
inline FormulaValue h_size_kn(long long n) {
    if (n < 3) throw domain_error("h_size_kn needs n >= 3");
    if (n % 2 == 1) return {(n - 1) / 2 * ((n - 1) / 2) + n - 1, "n odd"};
    return {(n - 2) / 2 * (n / 2) + n - 1, "n even"};
}

// Treewidth (= pathwidth) of the line graph of the regular complete
// multipartite graph with k classes of size c each.
inline FormulaValue tw_line_regular(long long c, long long k) {
    if (c < 1 || k < 2) throw domain_error("tw_line_regular needs c >= 1, k >= 2");
    const long long base = c * c * k * k - c * c * k + 2 * c * k - 2 * c;
    if (c % 2 == 0)
        return {detail::exact_div4(base - 4, "tw_line_regular"), "c even"};
    if (k % 2 == 1)
        return {detail::exact_div4(base + k - 5, "tw_line_regular"), "k odd, c odd"};
    return {detail::exact_div4(base + k - 6, "tw_line_regular"), "k even, c odd"};
}

// Size of a minimum canonical-line-bramble hitting set in the regular complete
// multipartite graph; always exactly tw_line_regular(c, k) + 1.
inline FormulaValue h_size_regular(long long c, long long k) {
    if (c < 1 || k < 2) throw domain_error("h_size_regular needs c >= 1, k >= 2");
    const long long base = c * c * k * k - c * c * k + 2 * c * k - 2 * c;
    if (c % 2 == 0)
        return {detail::exact_div4(base, "h_size_regular"), "c even"};
    if (k % 2 == 1)
        return {detail::exact_div4(base + k - 1, "h_size_regular"), "ck odd"};
    return {detail::exact_div4(base + k - 2, "h_size_regular"), "k even, c odd"};
}

// Two-sided bounds on the treewidth of the line graph of an arbitrary complete
// multipartite graph. The raw lower bound can be negative on thin specs; the
// reported lower bound is clamped at 0 with the raw (floored) value kept.
struct MultipartiteBounds {
    long long lower = 0;     // max(raw_lower, 0)
    long long upper = 0;     // ceiled
    long long raw_lower = 0; // floored, unclamped
};

inline MultipartiteBounds bounds_line_multipartite(const MultipartiteSpec& spec) {
    spec.check();
    const long long k = spec.k(), n = spec.n();
    if (k < 2) throw domain_error("bounds_line_multipartite needs k >= 2");
    const long long s2 = 2 * detail::pair_product_sum(spec);
    const long long lower_num4 = s2 - 4 * n * (k - 1) + 3 * k * (k - 1) - 4;
    const long long upper_num4 = s2 + 2 * n * (k + 5) + k * (k - 1) - 16;
    MultipartiteBounds b;
    b.raw_lower = detail::floor_div4(lower_num4);
    b.lower = std::max<long long>(b.raw_lower, 0);
    b.upper = detail::ceil_div4(upper_num4);
    return b;
}

// Two-sided bounds on the minimum canonical-line-bramble hitting set size (the
// bramble order) of an arbitrary complete multipartite graph. The lower bound
// numerator exceeds the tw lower bound numerator by exactly 4 (one unit),
// reflecting that the bramble order is treewidth + 1 at the optimum.
struct HittingSetOrderBounds {
    long long lower = 0;      // floored
    long long upper = 0;      // ceiled
    long long lower_num4 = 0; // exact numerators over 4, for exact comparisons
    long long upper_num4 = 0;
};

inline HittingSetOrderBounds hitting_set_order_bounds(const MultipartiteSpec& spec) {
    spec.check();
    const long long k = spec.k(), n = spec.n();
    if (k < 2) throw domain_error("hitting_set_order_bounds needs k >= 2");
    const long long s2 = 2 * detail::pair_product_sum(spec);
    HittingSetOrderBounds b;
    b.lower_num4 = s2 + 3 * k * k - 4 * k * n - 3 * k + 4 * n;
    b.upper_num4 = s2 + 2 * n * (k + 1) + k * (k - 1) - 4;
    b.lower = detail::floor_div4(b.lower_num4);
    b.upper = detail::ceil_div4(b.upper_num4);
    return b;
}

} // namespace linetw
