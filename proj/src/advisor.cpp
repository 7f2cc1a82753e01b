#include "chordalcad/advisor.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace chordalcad {

Ordering parse_ordering(const std::string& text, const VarTable& table) {
    std::vector<VarId> ranked;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t next = text.find('>', pos);
        std::string token = text.substr(pos, next == std::string::npos ? next : next - pos);
        auto first = token.find_first_not_of(" \t");
        auto last = token.find_last_not_of(" \t");
        if (first == std::string::npos)
            throw std::invalid_argument("ordering: empty variable between '>' separators");
        token = token.substr(first, last - first + 1);
        auto id = table.find(token);
        if (!id) throw std::invalid_argument("ordering: unknown variable '" + token + "'");
        ranked.push_back(*id);
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return Ordering{ranked};
}

std::string ordering_to_string(const Ordering& o, const VarTable& table) {
    std::ostringstream os;
    bool first = true;
    for (VarId v : o.ranked()) {
        if (!first) os << ">";
        os << table.name(v);
        first = false;
    }
    return os.str();
}

namespace {

Rational safe_fill_metric(const VarGraph& G, const VarGraph& Ghat) {
    if (Ghat.edge_count() == 0) return Rational{0, 1};
    return fill_metric(G, Ghat);
}

// Uniform (m, d) over the A_p partition of the tree, as the tree-indexed
// cell bound expects.
MDPair uniform_md_for_tree(const PolySet& F, const ElimTree& T) {
    const Ordering& o = T.ordering();
    std::map<VarId, PolySet> by_max;
    for (const auto& f : F) {
        auto fv = f.vars();
        VarId top = *fv.begin();
        for (VarId v : fv)
            if (o.greater(v, top)) top = v;
        by_max[top].insert(f);
    }
    std::uint32_t d = 1;
    for (const auto& [v, s] : by_max)
        if (!s.empty()) d = std::max(d, combined_degree(s));
    BigInt m = 1;
    for (const auto& [v, s] : by_max) {
        if (s.empty()) continue;
        MDPair w = md_witness(s, d);
        if (w.m > m) m = w.m;
    }
    return MDPair{m, BigInt(static_cast<unsigned long>(d))};
}

BenchRow evaluate_ordering(const PolySystem& sys, const VarGraph& G, const Ordering& o,
                           ProjOp op) {
    BenchRow row;
    row.ordering = o;
    auto start = std::chrono::steady_clock::now();
    try {
        auto game = elimination_game(G, o);
        row.is_peo = game.fill_edges.empty();
        row.fill_d = safe_fill_metric(G, game.completion);
        ElimTree tree(game.completion, o);
        row.tree_height = tree.height();

        ProjectionTrace trace = projection_procedure(sys.polys, o, op);
        trace.structure = game.completion;
        row.proj_count = proj_count(trace);

        if (!sys.polys.empty() && o.size() > 0) {
            MDPair uniform = uniform_md_for_tree(sys.polys, tree);
            CellBoundInput input;
            input.tree = tree;
            for (VarId v : o.ranked()) input.per_var.emplace(v, uniform);
            row.predicted_cell_bound = cell_bound_tree(input);
        } else {
            row.predicted_cell_bound = 1;
        }
    } catch (const std::exception& e) {
        row.failed = true;
        row.error = e.what();
    }
    row.wall_time = std::chrono::steady_clock::now() - start;
    return row;
}

}  // namespace

std::vector<BenchRow> compare_orderings(const PolySystem& sys,
                                        const std::vector<Ordering>& orderings, ProjOp op) {
    VarGraph G = associated_graph(sys.polys);
    std::vector<BenchRow> rows(orderings.size());
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, std::max<std::size_t>(orderings.size(), 1));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t)
        pool.emplace_back([&, t]() {
            for (std::size_t i = t; i < orderings.size(); i += workers)
                rows[i] = evaluate_ordering(sys, G, orderings[i], op);
        });
    for (auto& th : pool) th.join();
    return rows;
}

std::pair<Ordering, OrderingRationale> suggest_ordering(const PolySystem& sys, const Strategy& s) {
    VarGraph G = associated_graph(sys.polys);
    OrderingRationale r;
    ChordalityResult ch = mcs_peo(G);
    r.chordal = ch.chordal;
    r.witness = ch.witness;

    VarGraph completion = G;
    if (!ch.chordal)
        completion = elimination_game(G, min_fill_ordering(G)).completion;

    Ordering chosen;
    std::string how;
    switch (s.tag) {
        case StrategyTag::given: {
            chosen = parse_ordering(s.ordering_text, sys.table);
            how = "given ordering";
            break;
        }
        case StrategyTag::min_fill_completion: {
            chosen = min_fill_ordering(G);
            how = "greedy min-fill elimination ordering";
            break;
        }
        case StrategyTag::min_height_peo: {
            auto [o, h] = min_height_peo(completion, 64, s.seed);
            chosen = o;
            how = ch.chordal ? "minimum-height PEO of the associated graph"
                             : "minimum-height PEO of a min-fill completion";
            break;
        }
        case StrategyTag::enumerate_all: {
            auto peos = enumerate_peos(completion, s.max_enumerate);
            assert(!peos.empty());
            std::size_t best = 0, best_count = SIZE_MAX;
            for (std::size_t i = 0; i < peos.size(); ++i) {
                std::size_t c = proj_count(projection_procedure(sys.polys, peos[i], s.op));
                if (c < best_count) { best_count = c; best = i; }
            }
            chosen = peos[best];
            how = "smallest #proj among " + std::to_string(peos.size()) + " enumerated PEOs";
            break;
        }
    }

    auto game = elimination_game(G, chosen);
    r.fill_d = safe_fill_metric(G, game.completion);
    r.completion_edges = game.completion.edge_count();
    r.fill_edge_count = game.fill_edges.size();
    r.tree_height = ElimTree(game.completion, chosen).height();

    std::ostringstream os;
    os << "associated graph is " << (r.chordal ? "chordal" : "not chordal") << "; " << how
       << "; elimination tree height " << r.tree_height << "; fill d = " << r.fill_d.num << "/"
       << r.fill_d.den;
    r.summary = os.str();
    return {chosen, r};
}

PolySystem gen_lattice_family(unsigned n) {
    if (n < 4) throw std::invalid_argument("gen_lattice_family: n must be at least 4");
    PolySystem sys;
    std::vector<VarId> x(n);
    for (unsigned i = 1; i <= n; ++i) x[i - 1] = sys.table.intern("x" + std::to_string(i));
    for (unsigned k = 1; k + 3 <= n; ++k) {
        Poly f = Poly::variable(x[k - 1]) * Poly::variable(x[k + 2]) -
                 Poly::variable(x[k]) * Poly::variable(x[k + 1]);
        sys.polys.insert(f);
    }
    return sys;
}

PolySystem gen_grid_family(unsigned n1, unsigned n2) {
    if (n1 < 1 || n2 < 1) throw std::invalid_argument("gen_grid_family: both sizes must be positive");
    PolySystem sys;
    auto var = [&sys](char kind, unsigned i, unsigned j) {
        std::string name;
        name += kind;
        name += std::to_string(i);
        name += '_';
        name += std::to_string(j);
        return Poly::variable(sys.table.intern(name));
    };
    for (unsigned i = 0; i < n1; ++i)
        for (unsigned j = 0; j < n2; ++j) {
            sys.polys.insert(var('U', i, j) * var('R', i, j + 1) - var('R', i, j) * var('U', i + 1, j));
            sys.polys.insert(var('D', i, j + 1) * var('R', i, j) -
                             var('R', i, j + 1) * var('D', i + 1, j + 1));
            sys.polys.insert(var('D', i + 1, j + 1) * var('L', i + 1, j) -
                             var('L', i + 1, j + 1) * var('D', i, j + 1));
            sys.polys.insert(var('U', i + 1, j) * var('L', i + 1, j + 1) -
                             var('L', i + 1, j) * var('U', i, j));
        }
    return sys;
}

std::pair<Ordering, Ordering> named_orderings_lattice(const PolySystem& sys) {
    unsigned n = static_cast<unsigned>(sys.table.size());
    if (n < 4) throw std::invalid_argument("named_orderings_lattice: n must be at least 4");
    std::vector<VarId> l1(n);
    for (unsigned i = 0; i < n; ++i) l1[i] = i;  // x1 > x2 > ... > xn

    unsigned a = (n - 2) / 2;  // ceil((n-3)/2)
    std::vector<VarId> l2;
    l2.reserve(n);
    for (unsigned i = 0; i < a; ++i) l2.push_back(i);
    for (unsigned i = n; i >= a + 1; --i) l2.push_back(i - 1);  // xn down to x_{ceil((n-1)/2)}
    assert(l2.size() == n);

    VarGraph G = associated_graph(sys.polys);
    Ordering o1{l1}, o2{l2};
    if (!verify_peo(G, o1) || !verify_peo(G, o2))
        throw std::logic_error("named_orderings_lattice: named orderings must be PEOs");
    return {o1, o2};
}

}  // namespace chordalcad
