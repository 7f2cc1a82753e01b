#include "chordalcad/cli.hpp"

#include "chordalcad/advisor.hpp"
#include "chordalcad/complexity.hpp"
#include "chordalcad/graph.hpp"
#include "chordalcad/parser.hpp"
#include "chordalcad/projection.hpp"
#include "chordalcad/report.hpp"
#include "chordalcad/resultant.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace chordalcad {

namespace {

constexpr int kSchemaVersion = 1;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << content;
}

struct CommonFlags {
    std::string op_name = "mccallum";
    std::string strategy;
    std::vector<std::string> orderings;
    unsigned max_enumerate = 64;
    std::uint64_t seed = 0;
    std::string json_path;
    std::string dot_graph_path;
    std::string dot_tree_path;
    bool show_polys = false;
    bool timings = false;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--operator", f.op_name, "projection operator")
        ->check(CLI::IsMember({"mccallum", "brown"}))
        ->capture_default_str();
    cmd->add_option("--ordering", f.orderings, "explicit ordering like \"x4>x5>x3>x2>x1\"");
    cmd->add_option("--max-enumerate", f.max_enumerate, "cap for PEO enumeration")
        ->capture_default_str();
    cmd->add_option("--seed", f.seed, "seed for randomized search")->capture_default_str();
    cmd->add_option("--json", f.json_path, "write the JSON report here");
    cmd->add_flag("--show-polys", f.show_polys, "include canonical polynomial text in the report");
    cmd->add_flag("--timings", f.timings, "include wall-clock timings in the report");
}

InputSystem load_system(const std::string& path) {
    std::string text = read_file(path);
    InputSystem in = parse_system(text, path);
    if (in.system.polys.empty())
        throw std::runtime_error(path + ": empty system (no non-constant polynomials)");
    return in;
}

StrategyTag strategy_from_name(const std::string& name) {
    if (name == "min-height-peo") return StrategyTag::min_height_peo;
    if (name == "min-fill") return StrategyTag::min_fill_completion;
    if (name == "given") return StrategyTag::given;
    if (name == "enumerate") return StrategyTag::enumerate_all;
    throw CLI::ValidationError("--strategy", "unknown strategy '" + name + "'");
}

int do_analyze(const std::string& path, CommonFlags& f) {
    InputSystem in = load_system(path);
    const PolySystem& sys = in.system;
    ProjOp op = *proj_op_from_string(f.op_name);

    Strategy strategy;
    strategy.max_enumerate = f.max_enumerate;
    strategy.seed = f.seed;
    strategy.op = op;
    if (!f.orderings.empty()) {
        strategy.tag = StrategyTag::given;
        strategy.ordering_text = f.orderings.front();
    } else if (!f.strategy.empty()) {
        strategy.tag = strategy_from_name(f.strategy);
        if (strategy.tag == StrategyTag::given) {
            if (!in.declared_order)
                throw CLI::ValidationError("--strategy",
                                           "strategy 'given' needs --ordering or a '# order:' line");
            strategy.ordering_text = *in.declared_order;
        }
    } else if (in.declared_order) {
        strategy.tag = StrategyTag::given;
        strategy.ordering_text = *in.declared_order;
    }

    auto t0 = std::chrono::steady_clock::now();
    auto [ordering, rationale] = suggest_ordering(sys, strategy);
    VarGraph G = associated_graph(sys.polys);
    auto game = elimination_game(G, ordering);
    ElimTree tree(game.completion, ordering);

    ProjectionTrace trace = projection_procedure(sys.polys, ordering, op);
    trace.structure = game.completion;

    std::uint32_t d = combined_degree(sys.polys);
    MDPair md = md_witness(sys.polys, d);
    std::uint32_t n = static_cast<std::uint32_t>(ordering.size());
    GrowthTable general_table = growth_table_general(md, n);
    BigInt general_bound = cell_bound_general(md, n);
    GrowthTable tree_table =
        growth_table_tree(md, static_cast<std::uint32_t>(tree.max_children()),
                          static_cast<std::uint32_t>(tree.height()));
    CellBoundInput cb;
    cb.tree = tree;
    for (VarId v : ordering.ranked()) cb.per_var.emplace(v, md);
    BigInt tree_bound = cell_bound_tree(cb);
    auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0);

    Json report;
    report["schema_version"] = kSchemaVersion;
    report["tool"] = "chordalcad";
    report["command"] = "analyze";
    Json input{{"path", path},
               {"variable_count", sys.table.size()},
               {"polynomial_count", sys.polys.size()},
               {"combined_degree", d}};
    if (f.show_polys) input["polynomials"] = poly_list_json(sys.polys, sys.table);
    report["input"] = input;

    Json graph{{"vertex_count", G.vertex_count()},
               {"edge_count", G.edge_count()},
               {"chordal", rationale.chordal}};
    if (!rationale.chordal) {
        Json cycle = Json::array();
        for (VarId v : rationale.witness) cycle.push_back(sys.table.name(v));
        graph["witness_cycle"] = cycle;
    }
    report["graph"] = graph;

    const char* strategy_name =
        strategy.tag == StrategyTag::given ? "given"
        : strategy.tag == StrategyTag::min_fill_completion ? "min-fill"
        : strategy.tag == StrategyTag::enumerate_all ? "enumerate"
                                                     : "min-height-peo";
    report["ordering"] = Json{{"strategy", strategy_name},
                              {"ordering", ordering_to_string(ordering, sys.table)},
                              {"is_peo_of_input_graph", game.fill_edges.empty()},
                              {"completion_edge_count", game.completion.edge_count()},
                              {"fill_edge_count", game.fill_edges.size()},
                              {"fill_d", rational_json(rationale.fill_d)},
                              {"rationale", rationale.summary}};
    Json roots = Json::array();
    for (VarId r : tree.roots()) roots.push_back(sys.table.name(r));
    report["tree"] = Json{{"height", tree.height()},
                          {"max_children", tree.max_children()},
                          {"roots", roots}};
    report["projection"] = trace_json(trace, sys.table, f.show_polys);
    report["bounds"] = Json{{"md_property", Json{{"m", md.m.get_str()}, {"d", md.d.get_str()}}},
                            {"growth_general", growth_table_json(general_table, "variables")},
                            {"growth_tree", growth_table_json(tree_table, "height")},
                            {"cell_bound_general", general_bound.get_str()},
                            {"cell_bound_tree", tree_bound.get_str()}};
    if (f.timings) report["timings"] = Json{{"total_s", elapsed.count()}};

    if (!f.json_path.empty()) write_file(f.json_path, report.dump(2) + "\n");
    if (!f.dot_graph_path.empty())
        write_file(f.dot_graph_path, dot_graph(game.completion, game.fill_edges, sys.table));
    if (!f.dot_tree_path.empty()) write_file(f.dot_tree_path, dot_tree(tree, sys.table));

    std::cout << "input: " << sys.polys.size() << " polynomials in " << sys.table.size()
              << " variables (combined degree " << d << ")\n"
              << "graph: " << (rationale.chordal ? "chordal" : "not chordal") << ", "
              << G.edge_count() << " edges\n"
              << "ordering [" << strategy_name
              << "]: " << ordering_to_string(ordering, sys.table) << "\n"
              << "elimination tree height: " << tree.height()
              << ", fill d = " << rationale.fill_d.num << "/" << rationale.fill_d.den << "\n"
              << "#proj (" << to_string(op) << "): " << proj_count(trace) << "\n"
              << "cell bound (general): " << general_bound.get_str() << "\n"
              << "cell bound (tree):    " << tree_bound.get_str() << "\n";
    return 0;
}

int do_compare(const std::string& path, CommonFlags& f, unsigned peos, bool all_permutations) {
    InputSystem in = load_system(path);
    const PolySystem& sys = in.system;
    ProjOp op = *proj_op_from_string(f.op_name);
    VarGraph G = associated_graph(sys.polys);

    std::vector<Ordering> orderings;
    for (const auto& text : f.orderings) orderings.push_back(parse_ordering(text, sys.table));
    if (peos > 0) {
        VarGraph completion = G;
        if (!mcs_peo(G).chordal)
            completion = elimination_game(G, min_fill_ordering(G)).completion;
        for (auto& o : enumerate_peos(completion, peos)) orderings.push_back(std::move(o));
    }
    if (all_permutations) {
        auto vs = G.vertices();
        if (vs.size() > 7)
            throw CLI::ValidationError("--all-permutations",
                                       "refusing to sweep " + std::to_string(vs.size()) +
                                           "! orderings; use --peos or --ordering");
        std::vector<VarId> perm(vs.begin(), vs.end());
        std::sort(perm.begin(), perm.end());
        do {
            orderings.emplace_back(perm);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    if (orderings.empty())
        throw CLI::ValidationError("compare",
                                   "nothing to compare; pass --ordering, --peos or --all-permutations");

    auto rows = compare_orderings(sys, orderings, op);

    if (!f.json_path.empty()) {
        Json report;
        report["schema_version"] = kSchemaVersion;
        report["tool"] = "chordalcad";
        report["command"] = "compare";
        report["input"] = Json{{"path", path},
                               {"variable_count", sys.table.size()},
                               {"polynomial_count", sys.polys.size()}};
        report["operator"] = to_string(op);
        report["rows"] = bench_rows_json(rows, sys.table, f.timings);
        write_file(f.json_path, report.dump(2) + "\n");
    }
    std::cout << bench_rows_text(rows, sys.table);
    return 0;
}

int do_gen(const std::string& family, const std::vector<unsigned>& sizes,
           const std::string& output) {
    PolySystem sys;
    std::string header;
    if (family == "lattice") {
        if (sizes.size() != 1)
            throw CLI::ValidationError("gen", "lattice takes one size argument");
        sys = gen_lattice_family(sizes[0]);
        header = "# lattice reachability family, n = " + std::to_string(sizes[0]);
    } else if (family == "grid") {
        if (sizes.size() != 2)
            throw CLI::ValidationError("gen", "grid takes two size arguments");
        sys = gen_grid_family(sizes[0], sizes[1]);
        header = "# grid reachability family, n1 = " + std::to_string(sizes[0]) +
                 ", n2 = " + std::to_string(sizes[1]);
    } else {
        throw CLI::ValidationError("gen", "unknown family '" + family + "'");
    }
    std::ostringstream os;
    os << header << "\n";
    for (const auto& p : sys.polys) os << p.to_string(sys.table) << "\n";
    if (output.empty() || output == "-")
        std::cout << os.str();
    else
        write_file(output, os.str());
    return 0;
}

}  // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"chordal-structure analysis for CAD projection orderings"};
    app.require_subcommand(1);

    CommonFlags flags;

    std::string analyze_path;
    auto* analyze = app.add_subcommand("analyze", "full pipeline for one system");
    analyze->add_option("file", analyze_path, "input system, one polynomial per line")->required();
    add_common(analyze, flags);
    analyze->add_option("--strategy", flags.strategy, "ordering strategy")
        ->check(CLI::IsMember({"min-height-peo", "min-fill", "given", "enumerate"}));
    analyze->add_option("--dot-graph", flags.dot_graph_path, "write the associated graph as DOT");
    analyze->add_option("--dot-tree", flags.dot_tree_path, "write the elimination tree as DOT");

    std::string compare_path;
    unsigned compare_peos = 0;
    bool compare_all = false;
    auto* compare = app.add_subcommand("compare", "benchmark several orderings");
    compare->add_option("file", compare_path, "input system")->required();
    add_common(compare, flags);
    compare->add_option("--peos", compare_peos, "also enumerate up to N PEOs");
    compare->add_flag("--all-permutations", compare_all, "sweep every ordering (small systems)");

    std::string gen_family;
    std::vector<unsigned> gen_sizes;
    std::string gen_output;
    auto* gen = app.add_subcommand("gen", "emit a benchmark family");
    gen->add_option("family", gen_family, "lattice | grid")->required();
    gen->add_option("sizes", gen_sizes, "n (lattice) or n1 n2 (grid)")->required();
    gen->add_option("-o,--output", gen_output, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (analyze->parsed()) return do_analyze(analyze_path, flags);
        if (compare->parsed()) return do_compare(compare_path, flags, compare_peos, compare_all);
        if (gen->parsed()) return do_gen(gen_family, gen_sizes, gen_output);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "parse error at line " << e.line() << ", column " << e.column() << ": "
                  << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace chordalcad
