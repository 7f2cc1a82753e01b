#ifndef CHORDALCAD_ADVISOR_HPP
#define CHORDALCAD_ADVISOR_HPP

#include "chordalcad/complexity.hpp"
#include "chordalcad/graph.hpp"
#include "chordalcad/poly.hpp"
#include "chordalcad/projection.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace chordalcad {

/// A polynomial set together with its symbol table.
struct PolySystem {
    VarTable table;
    PolySet polys;
};

enum class StrategyTag { given, min_height_peo, min_fill_completion, enumerate_all };

struct Strategy {
    StrategyTag tag = StrategyTag::min_height_peo;
    std::string ordering_text;       // required for `given`
    unsigned max_enumerate = 64;
    std::uint64_t seed = 0;
    ProjOp op = ProjOp::mccallum;    // used by enumerate_all to score orderings
};

struct OrderingRationale {
    bool chordal = false;
    std::vector<VarId> witness;       // chordless cycle when not chordal
    Rational fill_d{0, 1};
    std::size_t tree_height = 0;
    std::size_t completion_edges = 0;
    std::size_t fill_edge_count = 0;
    std::string summary;
};

/// Picks a projection ordering: a minimum-height PEO when the associated
/// graph is chordal, otherwise a PEO of a greedy min-fill completion.
std::pair<Ordering, OrderingRationale> suggest_ordering(const PolySystem& sys, const Strategy& s);

struct BenchRow {
    Ordering ordering;
    bool is_peo = false;           // of the input associated graph
    std::size_t proj_count = 0;
    std::optional<std::size_t> tree_height;
    Rational fill_d{0, 1};
    BigInt predicted_cell_bound;
    std::chrono::duration<double> wall_time{0};
    bool failed = false;
    std::string error;
};

/// One row per ordering; rows are computed in parallel but returned in
/// input order. Each ordering must rank var(F).
std::vector<BenchRow> compare_orderings(const PolySystem& sys,
                                        const std::vector<Ordering>& orderings, ProjOp op);

/// F_n = { x_k x_{k+3} - x_{k+1} x_{k+2} : k = 1..n-3 }, n >= 4. Chordal.
PolySystem gen_lattice_family(unsigned n);

/// The four reachability binomials per (i, j) cell over U, R, D, L variables.
PolySystem gen_grid_family(unsigned n1, unsigned n2);

/// The two named orderings of the lattice family: l1 = x1 > ... > xn and
/// l2 = x1 > ... > x_ceil((n-3)/2) > xn > ... > x_ceil((n-1)/2). Both are
/// PEOs of the associated graph.
std::pair<Ordering, Ordering> named_orderings_lattice(const PolySystem& sys);

/// Parses "x4>x5>x3" against the system's symbol table.
Ordering parse_ordering(const std::string& text, const VarTable& table);

std::string ordering_to_string(const Ordering& o, const VarTable& table);

}  // namespace chordalcad

#endif
