#ifndef CHORDALCAD_GRAPH_HPP
#define CHORDALCAD_GRAPH_HPP

#include "chordalcad/poly.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace chordalcad {

/// Exact fraction for the fill metric and benchmark averages.
struct Rational {
    long long num = 0;
    long long den = 1;  // > 0, reduced

    Rational() = default;
    Rational(long long n, long long d);
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool operator==(const Rational&) const = default;
};

/// Total order on a set of variables, largest first: ranked[0] > ranked[1] > ...
/// The projection eliminates ranked[0] first.
class Ordering {
public:
    Ordering() = default;
    explicit Ordering(std::vector<VarId> ranked);

    const std::vector<VarId>& ranked() const { return ranked_; }
    std::size_t size() const { return ranked_.size(); }
    bool contains(VarId v) const { return rank_.count(v) != 0; }
    std::size_t rank(VarId v) const;  // 0 = largest
    bool greater(VarId a, VarId b) const { return rank(a) < rank(b); }
    VarId smallest() const;

    bool operator==(const Ordering&) const = default;

private:
    std::vector<VarId> ranked_;
    std::map<VarId, std::size_t> rank_;
};

/// Undirected graph on variables; symmetric adjacency, no self-loops.
class VarGraph {
public:
    void add_vertex(VarId v);
    void add_edge(VarId a, VarId b);

    bool has_vertex(VarId v) const { return adj_.count(v) != 0; }
    bool has_edge(VarId a, VarId b) const;
    const std::set<VarId>& neighbors(VarId v) const;
    std::set<VarId> vertices() const;
    std::size_t vertex_count() const { return adj_.size(); }
    std::size_t edge_count() const;
    std::vector<std::pair<VarId, VarId>> edges() const;  // (a, b) with a < b, sorted

    /// Same-or-smaller vertex set and edge set.
    bool is_subgraph_of(const VarGraph& other) const;

    bool operator==(const VarGraph&) const = default;

private:
    std::map<VarId, std::set<VarId>> adj_;
};

/// Vertices var(F); an edge joins two variables that share a polynomial.
VarGraph associated_graph(const PolySet& F);

/// True iff every vertex together with its smaller neighbors induces a
/// clique. Throws when o does not rank exactly G's vertices.
bool verify_peo(const VarGraph& G, const Ordering& o);

struct ChordalityResult {
    bool chordal = false;
    Ordering ordering;            // a PEO when chordal
    std::vector<VarId> witness;   // a chordless cycle, length >= 4, otherwise
};

/// Maximum cardinality search. Produces a PEO for chordal inputs and a
/// chordless-cycle witness otherwise. Components are handled in one pass.
ChordalityResult mcs_peo(const VarGraph& G);

struct EliminationGameResult {
    VarGraph completion;                              // G plus the fill
    std::vector<std::pair<VarId, VarId>> fill_edges;  // (a, b) with a < b
};

/// Plays the elimination game: processing vertices in order, connects the
/// still-uneliminated neighbors of each eliminated vertex. The ordering is
/// a PEO of the returned completion.
EliminationGameResult elimination_game(const VarGraph& G, const Ordering& o);

/// Greedy minimum-fill elimination ordering; ties break toward the
/// smallest variable id. Zero fill on chordal inputs.
Ordering min_fill_ordering(const VarGraph& G);

/// Rose-Tarjan-Lueker single-edge criterion: Ghat is minimal iff removing
/// any one fill edge destroys chordality. Preconditions checked.
bool is_minimal_completion(const VarGraph& G, const VarGraph& Ghat);

/// Rooted forest with parent(v) = the largest neighbor smaller than v.
/// Connected chordal inputs give a tree rooted at the ordering minimum.
class ElimTree {
public:
    ElimTree() = default;
    ElimTree(const VarGraph& G, const Ordering& o);  // throws unless o is a PEO of G

    const Ordering& ordering() const { return ordering_; }
    std::optional<VarId> parent(VarId v) const;
    const std::vector<VarId>& roots() const { return roots_; }
    std::vector<VarId> children(VarId v) const;
    std::size_t depth(VarId v) const;   // arcs to the component root
    std::size_t height() const;         // max depth, max over components
    std::size_t max_children() const;   // the w of the tree growth table
    bool is_ancestor(VarId anc, VarId v) const;  // proper or equal

    /// Test hook: overwrite one parent arc (produces a possibly invalid tree).
    void corrupt_parent(VarId v, VarId new_parent);

private:
    Ordering ordering_;
    std::map<VarId, VarId> parent_;
    std::map<VarId, std::vector<VarId>> children_;
    std::vector<VarId> roots_;
};

inline ElimTree elimination_tree(const VarGraph& G, const Ordering& o) { return ElimTree(G, o); }

/// Lemma check: every edge (s, t) of G with s < t has s an ancestor of t.
bool tree_path_check(const VarGraph& G, const ElimTree& T);

/// 1 - |edges(G)| / |edges(Ghat)|. Throws when Ghat is edgeless or not a
/// supergraph of G.
Rational fill_metric(const VarGraph& G, const VarGraph& Ghat);

/// Up to cap distinct PEOs by iterating simplicial-vertex choices in
/// deterministic (ascending id) order. Throws for non-chordal G.
std::vector<Ordering> enumerate_peos(const VarGraph& G, std::size_t cap);

/// A PEO minimizing the elimination-tree height; exhaustive up to 9
/// vertices, randomized greedy restarts (fixed seed) above. Ties break
/// lexicographically on the ranked ids.
std::pair<Ordering, std::size_t> min_height_peo(const VarGraph& G,
                                                unsigned restarts = 64,
                                                std::uint64_t seed = 0);

}  // namespace chordalcad

#endif
