#pragma once

#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "linetw/bramble.hpp"
#include "linetw/construction.hpp"
#include "linetw/formulas.hpp"
#include "linetw/oracle.hpp"

namespace linetw {

struct VerifyOptions {
    int oracle_budget = 22;  // max line-graph vertices for the exhaustive solvers
    int bramble_budget = 10; // max spec vertices for the hitting-set search
};

// Everything the consistency sweep measured for one spec, plus the list of
// cross-check failures (empty means all applicable quantities agreed).
struct VerifyReport {
    MultipartiteSpec spec;
    std::string family;               // complete | star | regular | general
    std::optional<long long> formula; // exact predicted treewidth where known
    std::optional<MultipartiteBounds> bounds; // k >= 2 only
    std::string flavour_used;
    std::optional<int> construction_width;
    std::optional<int> oracle_tw, oracle_pw;
    std::optional<int> hitting_set_order;
    std::vector<std::string> failures;

    bool consistent() const { return failures.empty(); }
};

// Computes every quantity that is in budget for the spec and cross-checks:
// closed formula, constructed decomposition width, exhaustive treewidth and
// pathwidth, and minimum hitting-set size (which must exceed the treewidth by
// exactly one where the theory pins it).
inline VerifyReport run_verify(const MultipartiteSpec& spec, const VerifyOptions& opt = {}) {
    spec.check();
    VerifyReport r;
    r.spec = spec;
    const int n = spec.n(), k = spec.k();
    auto fail = [&](const std::string& msg) { r.failures.push_back(msg); };

    if (spec.is_complete()) {
        r.family = "complete";
        r.formula = n >= 2 ? tw_line_kn(n).value : 0;
    } else if (spec.is_star()) {
        r.family = "star"; // line graph is the clique on the n-1 spokes
        r.formula = n - 2;
    } else if (spec.is_regular() && k >= 2) {
        r.family = "regular";
        r.formula = tw_line_regular(spec.common_part_size(), k).value;
    } else {
        r.family = "general";
    }
    if (k >= 2) r.bounds = bounds_line_multipartite(spec);

    const Graph g = complete_multipartite(spec);
    auto [lg, map] = line_graph(g);

    if (k >= 2 || spec.is_complete()) {
        const OrderingFlavour flavour =
            r.family == "regular" ? OrderingFlavour::blue : OrderingFlavour::red;
        const auto built = build_multipartite_decomposition(spec, flavour);
        r.flavour_used = built.dispatch == "general"
                             ? (flavour == OrderingFlavour::blue ? "blue" : "red")
                             : built.dispatch;
        const auto report = validate(lg, built.decomposition);
        if (!report.valid())
            fail("constructed decomposition invalid: " + report.describe());
        r.construction_width = width_info(built.decomposition).value;
        if (r.formula && *r.construction_width != *r.formula)
            fail("construction width " + std::to_string(*r.construction_width) +
                 " != formula " + std::to_string(*r.formula));
    }

    if (lg.vertex_count <= opt.oracle_budget) {
        r.oracle_tw = exact_treewidth(lg, opt.oracle_budget).value;
        r.oracle_pw = exact_pathwidth(lg, opt.oracle_budget).value;
        if (*r.oracle_tw > *r.oracle_pw)
            fail("treewidth exceeds pathwidth");
        if (r.formula) {
            if (*r.oracle_tw != *r.formula)
                fail("oracle treewidth " + std::to_string(*r.oracle_tw) + " != formula " +
                     std::to_string(*r.formula));
            if (*r.oracle_pw != *r.formula)
                fail("oracle pathwidth " + std::to_string(*r.oracle_pw) + " != formula " +
                     std::to_string(*r.formula));
        }
        if (r.bounds) {
            if (*r.oracle_tw < r.bounds->lower)
                fail("oracle treewidth below formula lower bound");
            if (*r.oracle_pw > r.bounds->upper)
                fail("oracle pathwidth above formula upper bound");
        }
        if (r.construction_width && *r.construction_width < *r.oracle_pw)
            fail("construction width below exact pathwidth (decomposition bug)");
    }

    if (k >= 2 && n >= 3 && n <= opt.bramble_budget) {
        r.hitting_set_order = min_canonical_hitting_set(spec).size;
        if (r.oracle_tw && *r.hitting_set_order - 1 > *r.oracle_tw)
            fail("hitting-set lower bound exceeds exact treewidth");
        // order = treewidth + 1 is only pinned for regular specs (stars and
        // general specs admit smaller hitting sets than the width suggests)
        if (spec.is_regular()) {
            const long long expect = h_size_regular(spec.common_part_size(), k).value;
            if (*r.hitting_set_order != expect)
                fail("hitting-set order != closed form " + std::to_string(expect));
        }
        const auto hb = hitting_set_order_bounds(spec);
        if (4LL * *r.hitting_set_order < hb.lower_num4)
            fail("hitting-set order below its formula lower bound");
        if (4LL * *r.hitting_set_order > hb.upper_num4)
            fail("hitting-set order above its formula upper bound");
    }
    return r;
}

inline std::string describe_row(const VerifyReport& r) {
    auto opt_str = [](const std::optional<int>& x) {
        return x ? std::to_string(*x) : std::string("-");
    };
    std::ostringstream out;
    out << std::left << std::setw(14) << r.spec.to_string() << std::setw(10) << r.family;
    std::string predicted;
    if (r.formula)
        predicted = std::to_string(*r.formula);
    else if (r.bounds)
        predicted = "[" + std::to_string(r.bounds->lower) + "," +
                    std::to_string(r.bounds->upper) + "]";
    else
        predicted = "-";
    out << std::setw(10) << predicted << std::setw(5) << opt_str(r.oracle_tw)
        << std::setw(5) << opt_str(r.oracle_pw) << std::setw(9)
        << opt_str(r.hitting_set_order) << std::setw(7) << opt_str(r.construction_width)
        << (r.consistent() ? "ok" : "FAIL");
    return out.str();
}

// Text table of run_verify results: one row per spec with the predicted value
// (or bound interval), exhaustive treewidth/pathwidth, minimum hitting-set
// size and constructed width.
inline std::string reproduction_table(const std::vector<MultipartiteSpec>& specs,
                                      const VerifyOptions& opt = {}) {
    std::ostringstream out;
    out << std::left << std::setw(14) << "spec" << std::setw(10) << "family"
        << std::setw(10) << "predicted" << std::setw(5) << "tw" << std::setw(5) << "pw"
        << std::setw(9) << "bramble" << std::setw(7) << "width" << "status" << '\n';
    for (const auto& spec : specs) out << describe_row(run_verify(spec, opt)) << '\n';
    return out.str();
}

} // namespace linetw
