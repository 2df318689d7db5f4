// Command-line front end: generate complete multipartite graphs, take line
// graphs, build and validate path decompositions, run the exhaustive solvers
// and the bramble search, and cross-check everything against the closed forms.
//
// Exit codes: 0 success, 1 validation/verification failure, 2 unusable input
// (bad arguments, unparsable files, unsupported shapes), 3 budget exceeded.

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "linetw/linetw.hpp"

namespace {

using nlohmann::json;

constexpr int kExitFailure = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitBudget = 3;

linetw::Graph load_graph(const std::string& path) {
    if (path == "-") return linetw::read_gr(std::cin);
    std::ifstream in(path);
    if (!in) throw linetw::parse_error("cannot open '" + path + "'");
    return linetw::read_gr(in);
}

linetw::TreeDecomposition load_decomposition(const std::string& path) {
    if (path == "-") return linetw::read_td(std::cin);
    std::ifstream in(path);
    if (!in) throw linetw::parse_error("cannot open '" + path + "'");
    return linetw::read_td(in);
}

// Writes through a callback either to stdout or to a fresh file.
void with_output(const std::string& path, const std::function<void(std::ostream&)>& fn) {
    if (path == "-") {
        fn(std::cout);
        return;
    }
    std::ofstream out(path);
    if (!out) throw linetw::parse_error("cannot open '" + path + "' for writing");
    fn(out);
}

struct GenArgs {
    std::string spec, out = "-";
};

struct LineGraphArgs {
    std::string in, out = "-", map;
};

struct ConstructArgs {
    std::string spec, flavour, out = "-", sidecar;
};

struct ValidateArgs {
    std::string graph, decomp;
};

struct OracleArgs {
    std::string graph;
    int budget = 22;
    bool as_json = false;
};

struct BrambleArgs {
    std::string spec;
    int v = -1;
    int budget = 10;
    bool as_json = false;
};

struct VerifyArgs {
    std::string spec;
    int oracle_budget = 22;
    int bramble_budget = 10;
};

int run_gen(const GenArgs& args) {
    const auto spec = linetw::MultipartiteSpec::parse(args.spec);
    const auto g = linetw::complete_multipartite(spec);
    with_output(args.out, [&](std::ostream& out) { linetw::write_gr(g, out); });
    return 0;
}

int run_linegraph(const LineGraphArgs& args) {
    const auto g = load_graph(args.in);
    const auto [lg, map] = linetw::line_graph(g);
    with_output(args.out, [&](std::ostream& out) { linetw::write_gr(lg, out); });
    std::string map_path = args.map;
    if (map_path.empty() && args.out != "-") map_path = args.out + ".map";
    if (!map_path.empty()) {
        with_output(map_path, [&](std::ostream& out) {
            out << "c line-graph vertex to base edge, all 1-indexed\n";
            for (int e = 0; e < map.size(); ++e)
                out << e + 1 << ' ' << map.edge_of[e].first + 1 << ' '
                    << map.edge_of[e].second + 1 << '\n';
        });
    }
    return 0;
}

int run_construct(const ConstructArgs& args) {
    linetw::MultipartiteSpec spec;
    if (args.flavour == "kn") {
        // for the K_n construction the spec is the single number n
        int n = 0;
        try {
            size_t used = 0;
            n = std::stoi(args.spec, &used);
            if (used != args.spec.size()) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw linetw::parse_error("flavour kn expects --spec <n>, got '" + args.spec +
                                      "'");
        }
        if (n < 1) throw linetw::parse_error("flavour kn needs n >= 1");
        spec.parts.assign(n, 1);
    } else {
        spec = linetw::MultipartiteSpec::parse(args.spec);
    }
    const auto flavour = args.flavour == "kn" ? linetw::OrderingFlavour::red
                                              : linetw::parse_flavour(args.flavour);
    const auto built = linetw::build_multipartite_decomposition(spec, flavour);
    with_output(args.out,
                [&](std::ostream& out) { linetw::write_td(built.decomposition, out); });
    std::string sidecar_path = args.sidecar;
    if (sidecar_path.empty() && args.out != "-") sidecar_path = args.out + ".sidecar";
    if (!sidecar_path.empty() && built.partition) {
        with_output(sidecar_path, [&](std::ostream& out) {
            linetw::write_partition_sidecar(out, spec, *built.partition, *built.ordering);
        });
    }
    std::cerr << "bags " << built.decomposition.node_count() << " width "
              << linetw::width_info(built.decomposition).value << " dispatch "
              << built.dispatch << '\n';
    return 0;
}

int run_validate(const ValidateArgs& args) {
    const auto g = load_graph(args.graph);
    const auto td = load_decomposition(args.decomp);
    const auto report = linetw::validate(g, td);
    std::cout << report.describe() << '\n';
    if (!report.valid()) return kExitFailure;
    std::cout << "width " << linetw::width_info(td).value << '\n';
    return 0;
}

int run_oracle(const OracleArgs& args) {
    const auto g = load_graph(args.graph);
    const auto tw = linetw::exact_treewidth(g, args.budget);
    const auto pw = linetw::exact_pathwidth(g, args.budget);
    if (args.as_json) {
        json doc;
        doc["n"] = g.vertex_count;
        doc["m"] = g.edge_count();
        doc["treewidth"] = {{"value", tw.value}, {"elimination_order", tw.ordering}};
        doc["pathwidth"] = {{"value", pw.value}, {"layout", pw.ordering}};
        std::cout << doc.dump(2) << '\n';
        return 0;
    }
    std::cout << "tw " << tw.value << '\n';
    std::cout << "pw " << pw.value << '\n';
    return 0;
}

int run_bramble(const BrambleArgs& args) {
    const auto spec = linetw::MultipartiteSpec::parse(args.spec);
    const int v = args.v >= 0 ? args.v : linetw::default_bramble_vertex(spec);
    const auto result = linetw::min_canonical_hitting_set(spec, v, args.budget);
    const auto bounds = linetw::hitting_set_order_bounds(spec);
    if (args.as_json) {
        json doc;
        doc["n"] = spec.n();
        doc["k"] = spec.k();
        doc["parts"] = spec.parts;
        doc["v"] = v;
        doc["min_order"] = result.size;
        doc["witness_parts"] = result.parts();
        doc["formula_lower"] = bounds.lower;
        doc["formula_upper"] = bounds.upper;
        std::cout << doc.dump(2) << '\n';
        return 0;
    }
    std::cout << "min hitting set " << result.size << " (formula bounds [" << bounds.lower
              << "," << bounds.upper << "])\n";
    std::cout << "witness parts:";
    for (const auto& part : result.parts()) {
        std::cout << " {";
        for (size_t i = 0; i < part.size(); ++i) std::cout << (i ? "," : "") << part[i];
        std::cout << "}";
    }
    std::cout << '\n';
    return 0;
}

int run_verify_cmd(const VerifyArgs& args) {
    const auto spec = linetw::MultipartiteSpec::parse(args.spec);
    linetw::VerifyOptions opt;
    opt.oracle_budget = args.oracle_budget;
    opt.bramble_budget = args.bramble_budget;
    const auto report = linetw::run_verify(spec, opt);
    std::cout << linetw::reproduction_table({}, opt); // header only
    std::cout << linetw::describe_row(report) << '\n';
    for (const auto& msg : report.failures) std::cout << "mismatch: " << msg << '\n';
    return report.consistent() ? 0 : kExitFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"line graphs of complete multipartite graphs: exact treewidth and "
                 "pathwidth, optimal path decompositions, brambles and oracles"};
    app.require_subcommand(1);

    GenArgs gen_args;
    auto* gen = app.add_subcommand("gen", "write a complete multipartite graph as .gr");
    gen->add_option("--spec", gen_args.spec, "part sizes, e.g. 2,2,3")->required();
    gen->add_option("--out", gen_args.out, "output path or - for stdout");

    LineGraphArgs lg_args;
    auto* lg = app.add_subcommand("linegraph", "map a .gr graph to its line graph");
    lg->add_option("--in", lg_args.in, ".gr input path or -")->required();
    lg->add_option("--out", lg_args.out, ".gr output path or - for stdout");
    lg->add_option("--map", lg_args.map,
                   "edge-map sidecar path (default: <out>.map for file output)");

    ConstructArgs con_args;
    auto* con = app.add_subcommand(
        "construct", "build a path decomposition of a line graph, write it as .td");
    con->add_option("--spec", con_args.spec,
                    "part sizes (red/blue), or n for flavour kn")
        ->required();
    con->add_option("--flavour", con_args.flavour, "kn, red or blue")
        ->required()
        ->check(CLI::IsMember({"kn", "red", "blue"}));
    con->add_option("--out", con_args.out, ".td output path or - for stdout");
    con->add_option("--sidecar", con_args.sidecar,
                    "partition sidecar path (default: <out>.sidecar for file output)");

    ValidateArgs val_args;
    auto* val = app.add_subcommand("validate", "check a .td against a .gr");
    val->add_option("--graph", val_args.graph, ".gr path or -")->required();
    val->add_option("--decomp", val_args.decomp, ".td path or -")->required();

    OracleArgs ora_args;
    auto* ora = app.add_subcommand(
        "oracle", "exhaustive exact treewidth and pathwidth of a .gr graph");
    ora->add_option("--graph", ora_args.graph, ".gr path or -")->required();
    ora->add_option("--budget", ora_args.budget, "max vertex count (default 22)");
    ora->add_flag("--json", ora_args.as_json, "machine-readable output");

    BrambleArgs bra_args;
    auto* bra = app.add_subcommand(
        "bramble", "minimum canonical-line-bramble hitting set of a spec");
    bra->add_option("--spec", bra_args.spec, "part sizes, e.g. 2,2")->required();
    bra->add_option("--v", bra_args.v, "distinguished vertex (default: first of a largest class)");
    bra->add_option("--budget", bra_args.budget, "max spec vertex count (default 10)");
    bra->add_flag("--json", bra_args.as_json, "machine-readable output");

    VerifyArgs ver_args;
    auto* ver = app.add_subcommand(
        "verify", "cross-check formula, construction, oracles and bramble for a spec");
    ver->add_option("--spec", ver_args.spec, "part sizes, e.g. 2,2,2")->required();
    ver->add_option("--oracle-budget", ver_args.oracle_budget,
                    "max line-graph vertices for the solvers (default 22)");
    ver->add_option("--bramble-budget", ver_args.bramble_budget,
                    "max spec vertices for the hitting-set search (default 10)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadInput;
    }

    try {
        if (gen->parsed()) return run_gen(gen_args);
        if (lg->parsed()) return run_linegraph(lg_args);
        if (con->parsed()) return run_construct(con_args);
        if (val->parsed()) return run_validate(val_args);
        if (ora->parsed()) return run_oracle(ora_args);
        if (bra->parsed()) return run_bramble(bra_args);
        if (ver->parsed()) return run_verify_cmd(ver_args);
    } catch (const linetw::budget_error& e) {
        std::cerr << "budget: " << e.what() << '\n';
        return kExitBudget;
    } catch (const linetw::error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitBadInput;
    }
    return 0;
}
