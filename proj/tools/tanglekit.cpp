// tanglekit: generate small graphs and run exact connectivity analyses on
// them (blocks, torsos, tangles, branch width, treewidth, duality checks).
//
// Exit codes: 0 ok, 1 parse error, 2 precondition violation, 3 budget
// exceeded, 4 internal invariant failure.

#include "tangles/blocks.hpp"
#include "tangles/branch_decomposition.hpp"
#include "tangles/connectivity.hpp"
#include "tangles/errors.hpp"
#include "tangles/graph.hpp"
#include "tangles/graph_tangle.hpp"
#include "tangles/kappa_tangle.hpp"
#include "tangles/serialize.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace tangles;

struct Options {
    std::string format = "json";
    std::string input;
    std::string system = "vertex";
    int order = 2;
    int k = 1;
    std::uint64_t budget = kDefaultWorkBudget;
    int dp_limit = 16;
    int tw_limit = 15;
};

std::string read_input(const Options& opt) {
    if (opt.input.empty()) {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream file(opt.input);
    if (!file) throw ParseError("cannot open input file: " + opt.input);
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

Graph input_graph(const Options& opt) { return parse_graph_text(read_input(opt)); }

ConnectivitySystem input_system(const Options& opt) {
    if (opt.system == "matroid") {
        std::istringstream in(read_input(opt));
        return ConnectivitySystem::matroid(parse_matroid(in));
    }
    Graph g = input_graph(opt);
    if (opt.system == "vertex") return ConnectivitySystem::vertex_connectivity(g);
    if (opt.system == "edge") return ConnectivitySystem::edge_connectivity(g);
    if (opt.system == "cutrank") return ConnectivitySystem::cut_rank(g);
    throw ParseError("unknown system: " + opt.system);
}

void emit(const Options& opt, const Json& doc) {
    if (opt.format == "json") {
        std::cout << doc.dump(2) << '\n';
    } else if (opt.format == "text") {
        std::cout << to_text(doc);
    } else {
        throw ParseError("unknown format: " + opt.format);
    }
}

void add_common(CLI::App* cmd, Options& opt, bool with_system = false) {
    cmd->add_option("--format", opt.format, "Output format: json or text");
    cmd->add_option("--input", opt.input, "Input file (default: stdin)");
    cmd->add_option("--budget", opt.budget, "Work budget for searches");
    if (with_system)
        cmd->add_option("--system", opt.system,
                        "Connectivity system: vertex, edge, cutrank or matroid");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact tangle, block and branch-width analyses for small graphs"};
    app.require_subcommand(1);
    Options opt;

    std::string gen_name;
    std::vector<int> gen_params;
    auto* gen = app.add_subcommand("gen", "Generate a named graph");
    gen->add_option("name", gen_name,
                    "complete | path | cycle | grid | hexgrid | subdivided-k4 | fig3")
        ->required();
    gen->add_option("params", gen_params, "Generator parameters");
    gen->add_option("--format", opt.format, "Output format: graph text (default) or json");
    gen->preparse_callback([&](std::size_t) { opt.format = "graph"; });

    auto* components_cmd = app.add_subcommand("components", "Connected components");
    add_common(components_cmd, opt);

    auto* blocks_cmd = app.add_subcommand("blocks", "Maximal k-inseparable vertex sets");
    blocks_cmd->add_option("--k", opt.k, "Inseparability order")->required();
    add_common(blocks_cmd, opt);

    auto* torsos_cmd = app.add_subcommand("torsos", "Triconnected components (2-block torsos)");
    add_common(torsos_cmd, opt);

    auto* tangles_cmd = app.add_subcommand("tangles", "Enumerate graph tangles of one order");
    tangles_cmd->add_option("--order", opt.order, "Tangle order")->required();
    add_common(tangles_cmd, opt);

    auto* kappa_cmd =
        app.add_subcommand("kappa-tangles", "Enumerate connectivity-system tangles");
    kappa_cmd->add_option("--order", opt.order, "Tangle order")->required();
    add_common(kappa_cmd, opt, true);

    auto* bw_cmd = app.add_subcommand("branchwidth", "Exact branch width with a witness");
    bw_cmd->add_option("--dp-limit", opt.dp_limit, "Largest universe for the subset DP");
    add_common(bw_cmd, opt, true);

    auto* tw_cmd = app.add_subcommand("treewidth", "Exact treewidth");
    tw_cmd->add_option("--vertex-limit", opt.tw_limit, "Largest vertex count for the DP");
    add_common(tw_cmd, opt);

    auto* duality_cmd =
        app.add_subcommand("duality", "Branch width versus maximum tangle order");
    duality_cmd->add_option("--dp-limit", opt.dp_limit, "Largest universe for the subset DP");
    add_common(duality_cmd, opt, true);

    auto* ineq_cmd = app.add_subcommand("inequalities",
                                        "Branch width / treewidth inequality chain");
    ineq_cmd->add_option("--dp-limit", opt.dp_limit, "Largest universe for the subset DP");
    ineq_cmd->add_option("--vertex-limit", opt.tw_limit, "Largest vertex count for the DP");
    add_common(ineq_cmd, opt);

    auto* convert_cmd = app.add_subcommand("convert", "Re-emit a graph in canonical form");
    convert_cmd->add_option("--format", opt.format, "graph (default), json or text");
    convert_cmd->add_option("--input", opt.input, "Input file (default: stdin)");
    convert_cmd->preparse_callback([&](std::size_t) { opt.format = "graph"; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (gen->parsed()) {
            Graph g = named_graph(gen_name, gen_params);
            if (opt.format == "graph") std::cout << write_graph(g);
            else emit(opt, graph_document(g));
        } else if (components_cmd->parsed()) {
            emit(opt, components_document(components(input_graph(opt))));
        } else if (blocks_cmd->parsed()) {
            emit(opt, blocks_document(k_blocks(input_graph(opt), opt.k)));
        } else if (torsos_cmd->parsed()) {
            emit(opt, torsos_document(triconnected_components(input_graph(opt))));
        } else if (tangles_cmd->parsed()) {
            Graph g = input_graph(opt);
            emit(opt, tangles_document(enumerate_graph_tangles(g, opt.order, opt.budget)));
        } else if (kappa_cmd->parsed()) {
            ConnectivitySystem sys = input_system(opt);
            emit(opt, kappa_tangles_document(
                          sys, enumerate_kappa_tangles(sys, opt.order, opt.budget)));
        } else if (bw_cmd->parsed()) {
            ConnectivitySystem sys = input_system(opt);
            emit(opt, decomposition_document(sys, branch_width(sys, opt.dp_limit)));
        } else if (tw_cmd->parsed()) {
            Json doc;
            doc["kind"] = "treewidth";
            doc["treewidth"] = treewidth(input_graph(opt), opt.tw_limit);
            emit(opt, doc);
        } else if (duality_cmd->parsed()) {
            ConnectivitySystem sys = input_system(opt);
            DualityReport report = verify_duality(sys, opt.dp_limit, opt.budget);
            emit(opt, duality_document(report));
            if (!report.equal) std::cerr << "duality mismatch: see report\n";
        } else if (ineq_cmd->parsed()) {
            InequalityReport report =
                verify_inequalities(input_graph(opt), opt.dp_limit, opt.tw_limit);
            emit(opt, inequalities_document(report));
            if (!report.holds) std::cerr << "inequality chain failed: see report\n";
        } else if (convert_cmd->parsed()) {
            Graph g = input_graph(opt);
            if (opt.format == "graph") std::cout << write_graph(g);
            else emit(opt, graph_document(g));
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 1;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition violation: " << e.what() << '\n';
        return 2;
    } catch (const BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 4;
    }
    return 0;
}
