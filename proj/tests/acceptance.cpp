// End-to-end acceptance checks. Each criterion prints one [PASS]/[FAIL] line;
// the process exits nonzero if any criterion fails. Frozen expected values were
// confirmed with the exhaustive solvers before being written down here.

#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "test_util.hpp"

using namespace linetw;

namespace {

int failures = 0;

void report(int index, const std::string& what, bool ok, const std::string& detail) {
    std::printf("[%s] %d. %s%s%s\n", ok ? "PASS" : "FAIL", index, what.c_str(),
                detail.empty() ? "" : " — ", detail.c_str());
    if (!ok) ++failures;
}

MultipartiteSpec regular_spec(int c, int k) {
    return MultipartiteSpec{std::vector<int>(k, c)};
}

// Regular shapes whose line graphs the exhaustive solvers can handle.
std::vector<std::pair<int, int>> tractable_regular_shapes() {
    std::vector<std::pair<int, int>> shapes;
    for (int c = 1; c <= 12; ++c)
        for (int k = 2; c * k <= 12; ++k)
            if (c * c * k * (k - 1) / 2 <= 22) shapes.emplace_back(c, k);
    return shapes;
}

// 1. The exact solvers reproduce the frozen complete-graph widths.
void criterion_1() {
    const std::vector<int> frozen = {2, 4, 7, 10, 14}; // n = 3..7
    bool ok = true;
    std::string detail;
    for (int n = 3; n <= 7; ++n) {
        const auto [lg, map] = line_graph(complete_multipartite(regular_spec(1, n)));
        const int tw = exact_treewidth(lg).value;
        const int pw = exact_pathwidth(lg).value;
        const int want = frozen[n - 3];
        if (tw != want || pw != want || tw_line_kn(n).value != want) {
            ok = false;
            detail = "n=" + std::to_string(n) + " gave tw=" + std::to_string(tw) +
                     " pw=" + std::to_string(pw) + " want " + std::to_string(want);
            break;
        }
    }
    report(1, "exhaustive treewidth and pathwidth of complete-graph line graphs match "
              "the closed form for n = 3..7", ok, detail);
}

// 2. Same for every tractable regular multipartite shape.
void criterion_2() {
    bool ok = true;
    std::string detail;
    for (const auto& [c, k] : tractable_regular_shapes()) {
        const auto spec = regular_spec(c, k);
        const auto [lg, map] = line_graph(complete_multipartite(spec));
        const long long want = tw_line_regular(c, k).value;
        const int tw = exact_treewidth(lg).value;
        const int pw = exact_pathwidth(lg).value;
        if (tw != want || pw != want) {
            ok = false;
            detail = "c=" + std::to_string(c) + " k=" + std::to_string(k) + " gave tw=" +
                     std::to_string(tw) + " pw=" + std::to_string(pw) + " want " +
                     std::to_string(want);
            break;
        }
    }
    report(2, "exhaustive widths equal the regular closed form on every tractable "
              "regular shape", ok, detail);
}

// 3. The constructed decompositions validate and hit the closed-form width.
void criterion_3() {
    bool ok = true;
    std::string detail;
    for (const auto& [c, k] : tractable_regular_shapes()) {
        const auto spec = regular_spec(c, k);
        const auto [lg, map] = line_graph(complete_multipartite(spec));
        const auto built = build_multipartite_decomposition(spec, OrderingFlavour::blue);
        const auto valid = validate(lg, built.decomposition).valid();
        const int w = width(built.decomposition);
        if (!valid || w != tw_line_regular(c, k).value) {
            ok = false;
            detail = "c=" + std::to_string(c) + " k=" + std::to_string(k) +
                     (valid ? " width " + std::to_string(w) : " invalid decomposition");
            break;
        }
    }
    report(3, "constructed path decompositions validate at the closed-form width on "
              "every tractable regular shape (including the 2,2 corner)", ok, detail);
}

// 4. Bramble order vs treewidth vs construction width, with equality where pinned.
void criterion_4() {
    bool ok = true;
    std::string detail;
    for (const auto& spec : testutil::canonical_specs(3, 8)) {
        const auto [lg, map] = line_graph(complete_multipartite(spec));
        const int order = min_canonical_hitting_set(spec).size;
        const auto built = build_multipartite_decomposition(
            spec, spec.is_regular() && !spec.is_complete() ? OrderingFlavour::blue
                                                           : OrderingFlavour::red);
        const int w = width(built.decomposition);
        int tw = -1;
        if (lg.vertex_count <= 22) tw = exact_treewidth(lg).value;
        const bool have_tw = tw >= 0;
        if ((have_tw && order - 1 > tw) || (have_tw && tw > w)) {
            ok = false;
            detail = spec.to_string() + ": order " + std::to_string(order) + " tw " +
                     std::to_string(tw) + " width " + std::to_string(w);
            break;
        }
        if (spec.is_regular()) {
            const long long h = h_size_regular(spec.parts[0], spec.k()).value;
            if (order != h || (have_tw && order - 1 != tw)) {
                ok = false;
                detail = spec.to_string() + ": order " + std::to_string(order) +
                         " closed form " + std::to_string(h);
                break;
            }
        }
    }
    report(4, "minimum hitting-set order minus one never exceeds the exact treewidth, "
              "never exceeds the built width, and is tight on regular shapes", ok,
           detail);
}

// 5. The general-shape bounds bracket the exact widths.
void criterion_5() {
    bool ok = true;
    std::string detail;
    for (const auto& spec : testutil::canonical_specs(2, 8)) {
        const auto [lg, map] = line_graph(complete_multipartite(spec));
        if (lg.vertex_count > 22) continue;
        const auto b = bounds_line_multipartite(spec);
        const int tw = exact_treewidth(lg).value;
        const int pw = exact_pathwidth(lg).value;
        if (!(b.lower <= tw && tw <= pw && pw <= b.upper)) {
            ok = false;
            detail = spec.to_string() + ": bounds [" + std::to_string(b.lower) + "," +
                     std::to_string(b.upper) + "] tw " + std::to_string(tw) + " pw " +
                     std::to_string(pw);
            break;
        }
    }
    report(5, "the two-sided width bounds bracket the exhaustive treewidth and "
              "pathwidth on every tractable shape up to 8 vertices", ok, detail);
}

// 6. The component characterization of hitting sets equals the definition.
void criterion_6() {
    bool ok = true;
    std::string detail;
    std::mt19937 rng(414243);
    for (const auto& spec : testutil::canonical_specs(3, 7)) {
        const auto g = complete_multipartite(spec);
        const int v = default_bramble_vertex(spec);
        const auto elements = enumerate_bramble(g, v);
        for (int iter = 0; iter < 200 && ok; ++iter) {
            std::vector<Edge> h;
            for (const auto& e : g.edges)
                if (rng() % 2) h.push_back(e);
            bool by_definition = true;
            for (const auto& s : elements)
                if (testutil::induced_minus_connected(g, s, h)) {
                    by_definition = false;
                    break;
                }
            if (is_canonical_hitting_set(g, v, h) != by_definition) {
                ok = false;
                detail = spec.to_string() + " iteration " + std::to_string(iter);
            }
        }
        if (!ok) break;
    }
    report(6, "the component test for hitting the canonical line-bramble agrees with "
              "the elementwise definition on 200 random edge sets per shape", ok,
           detail);
}

// 7. Bag-size discipline of the constructions.
void criterion_7() {
    bool ok = true;
    std::string detail;
    for (const auto& spec : testutil::canonical_specs(3, 12)) {
        if (spec.is_complete() || spec.is_star()) continue;
        const int n = spec.n();
        const auto built = build_multipartite_decomposition(spec, OrderingFlavour::red);
        const auto& bags = built.decomposition.bags;
        const int gamma = static_cast<int>(built.ordering->y.size());
        // beta bags run from the far end toward gamma; alpha bags away from it
        const size_t beta_first = bags[gamma - 1].size();  // beta_1
        const size_t alpha_first = bags[gamma + 1].size(); // alpha_1
        for (int i = 0; i < gamma && ok; ++i)
            if (bags[i].size() > beta_first + n - 2) ok = false;
        for (int i = gamma + 1; i < static_cast<int>(bags.size()) && ok; ++i)
            if (bags[i].size() > alpha_first + n - 2) ok = false;
        if (!ok) {
            detail = "red " + spec.to_string();
            break;
        }
        if (spec.is_regular() && (spec.k() >= 3 || spec.parts[0] >= 3)) {
            const auto blue = build_multipartite_decomposition(spec, OrderingFlavour::blue);
            const auto& bb = blue.decomposition.bags;
            const int g2 = static_cast<int>(blue.ordering->y.size());
            for (int i = 0; i < g2 && ok; ++i)
                if (bb[i].size() > bb[i + 1].size()) ok = false;
            for (int i = g2; i + 1 < static_cast<int>(bb.size()) && ok; ++i)
                if (bb[i].size() < bb[i + 1].size()) ok = false;
            for (const auto& bag : bb)
                if (bag.size() > bb[g2].size()) ok = false;
            if (!ok) {
                detail = "blue " + spec.to_string();
                break;
            }
        }
    }
    report(7, "red bags stay within n-2 of the first bag on their side, and blue bags "
              "rise monotonically to a maximal crossing bag", ok, detail);
}

// 8. Serialization round trips are byte identical.
void criterion_8() {
    bool ok = true;
    std::string detail;
    std::mt19937 rng(777001);
    int instances = 0;
    for (int iter = 0; iter < 30 && ok; ++iter) {
        const int n = 1 + static_cast<int>(rng() % 10);
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2) edges.emplace_back(u, v);
        const auto g = testutil::graph_from_edges(n, std::move(edges));
        const auto text = to_gr(g);
        if (to_gr(gr_from_string(text)) != text) {
            ok = false;
            detail = "gr iteration " + std::to_string(iter);
        }
        ++instances;
    }
    for (int n = 1; n <= 10 && ok; ++n) {
        const auto text = to_td(kn_decomposition(n));
        if (to_td(td_from_string(text)) != text) {
            ok = false;
            detail = "ladder td n=" + std::to_string(n);
        }
        ++instances;
    }
    for (const auto& spec : testutil::canonical_specs(4, 7)) {
        if (instances >= 50) break;
        if (spec.is_complete()) continue;
        const auto text =
            to_td(build_multipartite_decomposition(spec, OrderingFlavour::red).decomposition);
        if (to_td(td_from_string(text)) != text) {
            ok = false;
            detail = "construction td " + spec.to_string();
            break;
        }
        ++instances;
    }
    report(8, "graph and decomposition files survive 50 write/read round trips byte "
              "for byte", ok && instances >= 50,
           ok ? (instances >= 50 ? "" : "only " + std::to_string(instances) + " instances")
              : detail);
}

} // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all 8 criteria passed\n");
    return 0;
}
