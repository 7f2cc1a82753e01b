#include "chordalcad/projection.hpp"

#include "chordalcad/gcd.hpp"
#include "chordalcad/resultant.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace chordalcad {

std::string to_string(ProjOp op) {
    return op == ProjOp::mccallum ? "mccallum" : "brown";
}

std::optional<ProjOp> proj_op_from_string(std::string_view s) {
    if (s == "mccallum") return ProjOp::mccallum;
    if (s == "brown") return ProjOp::brown;
    return std::nullopt;
}

namespace {

// Contents of A w.r.t. x: for an element without x this is the element
// itself, so polynomials free of x pass through the projection.
void insert_contents(PolySet& out, const PolySet& A, VarId x) {
    for (const auto& f : A) {
        if (f.degree(x) == 0) out.insert(f);
        else out.insert(cont(f, x));
    }
}

void insert_pairwise_resultants(PolySet& out, const std::vector<Poly>& B, VarId x) {
    for (std::size_t i = 0; i < B.size(); ++i)
        for (std::size_t j = i + 1; j < B.size(); ++j)
            out.insert(resultant(B[i], B[j], x));
}

void insert_discriminant(PolySet& out, const Poly& f, VarId x) {
    if (f.degree(x) >= 2) out.insert(discriminant(f, x));
}

// The operator body without the arity preconditions; used by the
// procedure so that degenerate levels still flow through.
PolySet project_step(const PolySet& A, VarId x, ProjOp op) {
    PolySet out;
    insert_contents(out, A, x);
    if (op == ProjOp::mccallum) {
        PolySet parts;
        for (const auto& f : A)
            if (f.degree(x) > 0) parts.insert(primitive_part(f, x));
        PolySet basis = finest_basis(parts);
        std::vector<Poly> B;
        for (const auto& b : basis)
            if (b.degree(x) > 0) B.push_back(b);
            else out.insert(b);  // x-free factor: its coefficient set is itself
        for (const auto& b : B) {
            for (const auto& a : coeffs(b, x))
                if (!a.is_zero()) out.insert(a);
            insert_discriminant(out, b, x);
        }
        insert_pairwise_resultants(out, B, x);
    } else {
        PolySet basis = finest_basis(A);
        std::vector<Poly> B;
        for (const auto& b : basis)
            if (b.degree(x) > 0) B.push_back(b);
        for (const auto& b : B) {
            out.insert(lc(b, x));
            insert_discriminant(out, b, x);
        }
        insert_pairwise_resultants(out, B, x);
    }
    return out;
}

PolySet degenerate_step(const PolySet& A, VarId x) {
    PolySet out;
    insert_contents(out, A, x);
    for (const auto& f : A)
        if (f.degree(x) > 0)
            for (const auto& a : coeffs(f, x))
                if (!a.is_zero()) out.insert(a);
    return out;
}

void check_operator_preconditions(const PolySet& A, VarId x, const char* who) {
    auto vs = A.vars();
    if (vs.size() < 2)
        throw std::invalid_argument(std::string(who) + ": the set must contain at least two variables");
    if (!vs.count(x))
        throw std::invalid_argument(std::string(who) + ": x does not occur in the set");
}

}  // namespace

PolySet proj_mccallum(const PolySet& A, VarId x) {
    check_operator_preconditions(A, x, "proj_mccallum");
    return project_step(A, x, ProjOp::mccallum);
}

PolySet proj_brown(const PolySet& A, VarId x) {
    check_operator_preconditions(A, x, "proj_brown");
    return project_step(A, x, ProjOp::brown);
}

namespace {

Ordering extend_over(const Ordering& o, const PolySet& A) {
    std::vector<VarId> ranked = o.ranked();
    std::vector<VarId> missing;
    for (VarId v : A.vars())
        if (!o.contains(v)) missing.push_back(v);
    std::sort(missing.begin(), missing.end());
    ranked.insert(ranked.end(), missing.begin(), missing.end());
    return Ordering{ranked};
}

PolySet level_step(const PolySet& A, VarId x, ProjOp op, bool wrap) {
    PolySet next = A.vars().size() >= 2 ? project_step(A, x, op) : degenerate_step(A, x);
    return wrap ? finest_basis(next) : next;
}

}  // namespace

ProjectionTrace projection_procedure(const PolySet& A, const Ordering& o, ProjOp op, bool wrap) {
    ProjectionTrace t;
    t.ordering = extend_over(o, A);
    t.op = op;
    t.wrapped = wrap;
    t.levels.push_back(A);
    std::size_t n = t.ordering.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
        t.levels.push_back(level_step(t.levels.back(), t.ordering.ranked()[i], op, wrap));
    return t;
}

std::vector<std::size_t> ProjectionTrace::per_level_counts() const {
    std::vector<std::size_t> out;
    out.reserve(levels.size());
    for (const auto& level : levels) out.push_back(level.size());
    return out;
}

std::size_t proj_count(const ProjectionTrace& t) {
    std::size_t total = 0;
    for (std::size_t i = 1; i < t.levels.size(); ++i) total += t.levels[i].size();
    return total;
}

TreeTrace tree_projection(const PolySet& A, const ElimTree& T, ProjOp op, bool wrap) {
    TreeTrace out;
    out.tree = T;
    out.op = op;
    out.wrapped = wrap;
    const Ordering& o = T.ordering();
    for (VarId v : A.vars())
        if (!o.contains(v))
            throw std::invalid_argument("tree_projection: tree does not cover var(A)");

    std::map<VarId, PolySet> by_max;
    for (const auto& f : A) {
        auto fv = f.vars();
        VarId top = *fv.begin();
        for (VarId v : fv)
            if (o.greater(v, top)) top = v;
        by_max[top].insert(f);
    }

    // bottom-up: children are larger in the ordering, so walking the
    // ranked list largest-to-smallest visits children before parents
    for (VarId p : o.ranked()) {
        PolySet tp = by_max.count(p) ? by_max[p] : PolySet{};
        for (VarId l : out.tree.children(p)) {
            PolySet proj = level_step(out.sets.at(l), l, op, wrap);
            tp.insert_all(proj);
        }
        out.sets[p] = std::move(tp);
    }
    return out;
}

bool check_preservation(const ProjectionTrace& t, const VarGraph& G) {
    for (const auto& level : t.levels)
        if (!associated_graph(level).is_subgraph_of(G)) return false;
    return true;
}

bool tp_equals_pi(const TreeTrace& tt, const ProjectionTrace& t) {
    if (tt.op != t.op || tt.wrapped != t.wrapped || tt.tree.ordering() != t.ordering)
        throw std::invalid_argument("tp_equals_pi: traces were not computed compatibly");

    auto slice = [](const PolySet& s, VarId x) {
        PolySet out;
        for (const auto& f : s)
            if (f.contains_var(x)) out.insert(f);
        return out;
    };

    const auto& ranked = t.ordering.ranked();
    for (std::size_t j = 0; j < ranked.size(); ++j) {
        VarId x = ranked[j];
        const PolySet& level = t.levels.at(j);  // the level where x is maximal
        if (slice(tt.sets.at(x), x) != slice(level, x)) return false;
    }

    PolySet union_t, union_p;
    for (const auto& [v, s] : tt.sets) union_t.insert_all(s);
    for (const auto& level : t.levels) union_p.insert_all(level);
    return union_t == union_p;
}

}  // namespace chordalcad
