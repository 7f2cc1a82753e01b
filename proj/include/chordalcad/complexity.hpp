#ifndef CHORDALCAD_COMPLEXITY_HPP
#define CHORDALCAD_COMPLEXITY_HPP

#include "chordalcad/graph.hpp"
#include "chordalcad/poly.hpp"

#include <map>
#include <optional>
#include <vector>

namespace chordalcad {

/// The (m,d)-property pair: the set splits into at most m parts of
/// combined degree at most d.
struct MDPair {
    BigInt m;
    BigInt d;
    bool operator==(const MDPair&) const = default;
};

/// floor((m+1)^2 / 2).
BigInt md_capital(const BigInt& m);

/// max over the variables of deg(prod A, x). A must be nonempty.
std::uint32_t combined_degree(const PolySet& A);

/// Greedy first-fit partition witnessing the (m,d)-property; the returned
/// m counts the bins and need not be minimal. Throws when an element alone
/// exceeds d.
MDPair md_witness(const PolySet& A, std::uint32_t d);

/// One projection step: (floor((m+1)^2/2), 2d^2); with refined set and
/// m > 1, (m^2, 2d^2).
MDPair md_step_general(const MDPair& p, bool refined = false);

/// One tree step: ((children+1) * floor((m+1)^2/2), 2d^2); refined uses
/// m^2 when m > 1.
MDPair md_step_tree(const MDPair& p, const BigInt& children, bool refined = false);

struct GrowthRow {
    std::uint32_t level_or_height;
    BigInt number_bound;
    BigInt degree_bound;
};

struct GrowthTable {
    std::vector<GrowthRow> rows;
};

/// Rows for variable counts n, n-1, ..., 1; row n-r carries
/// (M^(2^(r-1)), 2^(2^r - 1) d^(2^r)).
GrowthTable growth_table_general(const MDPair& p, std::uint32_t n);

/// Rows for heights 0..h; row r carries
/// ((w+1)^(2^r - 1) M^(2^(r-1)), 2^(2^r - 1) d^(2^r)).
GrowthTable growth_table_tree(const MDPair& p, std::uint32_t w, std::uint32_t h);

/// Exact cell-count product (2md+1) prod_{r=1}^{n-1} [2(2^(2^r-1) M^(2^(r-1)) d^(2^r)) + 1].
BigInt cell_bound_general(const MDPair& p, std::uint32_t n);

/// Per-variable (m,d) pairs for the A_l partition plus the elimination tree.
struct CellBoundInput {
    ElimTree tree;
    std::map<VarId, MDPair> per_var;
    std::optional<std::uint32_t> w_override;
};

/// Exact product of (2 K_i + 1) with K_i = m d for leaves and
/// (2(w+1))^(2^h - 1) M^(2^(h-1)) d^(2^h) for internal nodes of height h.
BigInt cell_bound_tree(const CellBoundInput& input);

}  // namespace chordalcad

#endif
