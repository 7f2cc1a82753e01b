#ifndef CHORDALCAD_PROJECTION_HPP
#define CHORDALCAD_PROJECTION_HPP

#include "chordalcad/graph.hpp"
#include "chordalcad/poly.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace chordalcad {

enum class ProjOp { mccallum, brown };

std::string to_string(ProjOp op);
std::optional<ProjOp> proj_op_from_string(std::string_view s);

/// McCallum's operator: contents of A, plus pairwise resultants, nonzero
/// coefficients and discriminants over the finest squarefree basis of the
/// primitive parts with positive degree in x. Requires |var(A)| >= 2 and
/// x in var(A).
PolySet proj_mccallum(const PolySet& A, VarId x);

/// Brown's operator: contents of A, plus pairwise resultants, leading
/// coefficients and discriminants over the basis elements containing x.
/// The squarefree-basis precondition is enforced by refining A first.
PolySet proj_brown(const PolySet& A, VarId x);

/// The sequence P_n = A, P_i = proj(P_{i+1}, x_{i+1}); with wrap, every
/// projection step is closed under the finest squarefree basis.
struct ProjectionTrace {
    Ordering ordering;
    ProjOp op = ProjOp::mccallum;
    bool wrapped = true;
    std::vector<PolySet> levels;  // levels[0] = P_n (input), levels[n-1] = P_1
    std::optional<VarGraph> structure;

    std::size_t var_count() const { return ordering.size(); }
    /// 1-based from the bottom: P(1) is the final level, P(n) the input.
    const PolySet& P(std::size_t i) const { return levels.at(levels.size() - i); }
    /// Level sizes in trace order, input first.
    std::vector<std::size_t> per_level_counts() const;
};

/// Runs the projection down to one variable. Variables of A missing from o
/// are appended below the ranked ones; levels where fewer than two
/// variables remain degrade to coefficient/content extraction.
ProjectionTrace projection_procedure(const PolySet& A, const Ordering& o, ProjOp op,
                                     bool wrap = true);

/// Sum of the level sizes below the input set.
std::size_t proj_count(const ProjectionTrace& t);

/// Tree-indexed projection: T_p = A_p cup proj(T_l, x_l) over the children,
/// with A_p the input polynomials whose largest variable is x_p.
struct TreeTrace {
    ElimTree tree;
    ProjOp op = ProjOp::mccallum;
    bool wrapped = false;
    std::map<VarId, PolySet> sets;
};

TreeTrace tree_projection(const PolySet& A, const ElimTree& T, ProjOp op, bool wrap = false);

/// True iff the associated graph of every level stays inside G.
bool check_preservation(const ProjectionTrace& t, const VarGraph& G);

/// Set-equivalence of the tree-indexed and the level-indexed procedures:
/// per-variable slices agree and the nonconstant unions agree. Traces must
/// share the ordering, operator and wrap mode.
bool tp_equals_pi(const TreeTrace& tt, const ProjectionTrace& t);

}  // namespace chordalcad

#endif
