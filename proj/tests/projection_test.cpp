#include "chordalcad/projection.hpp"

#include "chordalcad/advisor.hpp"
#include "chordalcad/complexity.hpp"
#include "chordalcad/gcd.hpp"

#include <doctest.h>

#include "oracles.hpp"

using namespace chordalcad;
using testutil::Ctx;

namespace {

// Example: F = {x1+x4, x2+x4, x3^2+x2, x3^3+x1, x5+x2, x5+x1+x2},
// chordal associated graph, PEO x4 > x5 > x3 > x2 > x1.
struct Ex41 {
    Ctx c;
    PolySet F;
    Ordering peo;
    Ex41() {
        for (const char* n : {"x1", "x2", "x3", "x4", "x5"}) c.var(n);
        for (const char* s :
             {"x1 + x4", "x2 + x4", "x3^2 + x2", "x3^3 + x1", "x5 + x2", "x5 + x1 + x2"})
            F.insert(c(s));
        peo = Ordering{{c.var("x4"), c.var("x5"), c.var("x3"), c.var("x2"), c.var("x1")}};
    }
    PolySet set(std::initializer_list<const char*> polys) {
        PolySet out;
        for (const char* s : polys) out.insert(c(s));
        return out;
    }
};

// Example: F = {x1+x2+2, x2x3+2x3+x1, x3x4+x2x4+x3-1, x4+x2}, a squarefree
// basis with PEO x1 > x2 > x3 > x4.
struct Ex42 {
    Ctx c;
    PolySet F;
    Ordering peo;
    Ex42() {
        for (const char* n : {"x1", "x2", "x3", "x4"}) c.var(n);
        for (const char* s :
             {"x1 + x2 + 2", "x2*x3 + 2*x3 + x1", "x3*x4 + x2*x4 + x3 - 1", "x4 + x2"})
            F.insert(c(s));
        peo = Ordering{{c.var("x1"), c.var("x2"), c.var("x3"), c.var("x4")}};
    }
};

}  // namespace

TEST_CASE("McCallum single steps reproduce the worked sets") {
    Ex41 e;
    PolySet F1 = finest_basis(proj_mccallum(e.F, e.c.var("x4")));
    CHECK(F1 == e.set({"x1", "x2", "x3^2 + x2", "x3^3 + x1", "x5 + x2", "x5 + x1 + x2",
                       "x1 - x2"}));
    PolySet F2 = finest_basis(proj_mccallum(F1, e.c.var("x5")));
    CHECK(F2 == e.set({"x3^2 + x2", "x3^3 + x1", "x1 - x2", "x1 + x2", "x1", "x2"}));
    PolySet F3 = finest_basis(proj_mccallum(F2, e.c.var("x3")));
    CHECK(F3 == e.set({"x1 - x2", "x1 + x2", "x1", "x2", "x2^3 + x1^2"}));
    PolySet F4 = finest_basis(proj_mccallum(F3, e.c.var("x2")));
    CHECK(F4 == e.set({"x1", "x1 + 1", "x1 - 1"}));
}

TEST_CASE("McCallum operator on a two-variable set") {
    Ctx c;
    PolySet A;
    A.insert(c("x*y + 1"));
    PolySet out = proj_mccallum(A, c.var("x"));
    PolySet expect;
    expect.insert(c("y"));
    CHECK(out == expect);
    CHECK_THROWS_AS(proj_mccallum(A, c.var("z")), std::invalid_argument);
    PolySet single;
    single.insert(c("x^2 - 1"));
    CHECK_THROWS_AS(proj_mccallum(single, c.var("x")), std::invalid_argument);
}

TEST_CASE("Brown operator basics") {
    Ctx c;
    SUBCASE("discriminant survives, leading coefficient drops") {
        PolySet A;
        A.insert(c("x^2 + y"));
        PolySet out = proj_brown(A, c.var("x"));
        PolySet expect;
        expect.insert(c("y"));
        CHECK(out == expect);
    }
    SUBCASE("leading coefficients of the basis enter") {
        PolySet A;
        A.insert(c("y + 1"));
        A.insert(c("z*y - 2"));
        PolySet out = proj_brown(A, c.var("y"));
        CHECK(out.contains(c("z")));      // lc of z*y - 2
        CHECK(out.contains(c("z + 2")));  // res(y + 1, z*y - 2, y)
    }
    SUBCASE("x absent from the set is a precondition error") {
        PolySet A;
        A.insert(c("y*z + 1"));
        CHECK_THROWS_AS(proj_brown(A, c.var("w")), std::invalid_argument);
    }
}

TEST_CASE("golden trace: McCallum with the chordal PEO") {
    Ex41 e;
    ProjectionTrace t = projection_procedure(e.F, e.peo, ProjOp::mccallum);
    REQUIRE(t.levels.size() == 5);
    CHECK(t.levels[0] == e.F);
    CHECK(t.levels[4] == e.set({"x1", "x1 + 1", "x1 - 1"}));
    CHECK(t.per_level_counts() == std::vector<std::size_t>{6, 7, 6, 5, 3});
    CHECK(proj_count(t) == 21);
}

TEST_CASE("golden trace: Brown with the squarefree basis PEO") {
    Ex42 e;
    ProjectionTrace t = projection_procedure(e.F, e.peo, ProjOp::brown);
    REQUIRE(t.levels.size() == 4);
    PolySet expect;
    for (const char* s : {"x4", "x4 + 1", "x4 - 1", "x4 - 2"}) expect.insert(e.c(s));
    CHECK(t.levels[3] == expect);
    std::size_t n = proj_count(t);
    CHECK((n == 12 || n == 13));
}

TEST_CASE("degenerate traces") {
    Ctx c;
    SUBCASE("single univariate polynomial") {
        PolySet A;
        A.insert(c("x^3 - 2*x + 1"));
        ProjectionTrace t = projection_procedure(A, Ordering{{c.var("x")}}, ProjOp::mccallum);
        CHECK(t.levels.size() == 1);
        CHECK(proj_count(t) == 0);
    }
    SUBCASE("variables of A missing from the ordering are appended") {
        PolySet A;
        A.insert(c("x*y - 1"));
        ProjectionTrace t = projection_procedure(A, Ordering{{c.var("x")}}, ProjOp::mccallum);
        CHECK(t.levels.size() == 2);
        CHECK(t.ordering.size() == 2);
    }
}

TEST_CASE("level variables shrink along the trace") {
    Ctx c;
    std::mt19937_64 rng(211);
    for (int i = 0; i < 25; ++i) {
        PolySet A = testutil::random_sparse_system(rng, 5, 4);
        if (A.empty()) continue;
        VarGraph G = associated_graph(A);
        Ordering o = min_fill_ordering(G);
        for (ProjOp op : {ProjOp::mccallum, ProjOp::brown}) {
            ProjectionTrace t = projection_procedure(A, o, op);
            for (std::size_t j = 0; j + 1 < t.levels.size(); ++j) {
                auto upper = t.levels[j].vars();
                for (VarId v : t.levels[j + 1].vars()) {
                    CHECK(upper.count(v) == 1);
                    CHECK(v != t.ordering.ranked()[j]);
                    // remaining variables only
                    CHECK(t.ordering.rank(v) > j);
                }
            }
        }
    }
}

TEST_CASE("chordality preservation on the worked example") {
    Ex41 e;
    VarGraph G = associated_graph(e.F);
    SUBCASE("PEO trace stays inside the graph") {
        ProjectionTrace t = projection_procedure(e.F, e.peo, ProjOp::mccallum);
        CHECK(check_preservation(t, G));
    }
    SUBCASE("non-PEO ordering escapes the graph") {
        Ordering bad{{e.c.var("x1"), e.c.var("x2"), e.c.var("x3"), e.c.var("x4"), e.c.var("x5")}};
        REQUIRE_FALSE(verify_peo(G, bad));
        ProjectionTrace t = projection_procedure(e.F, bad, ProjOp::mccallum);
        CHECK_FALSE(check_preservation(t, G));
    }
    SUBCASE("single-level trace") {
        Ctx c2;
        PolySet A;
        A.insert(c2("u^2 - 1"));
        ProjectionTrace t = projection_procedure(A, Ordering{{c2.var("u")}}, ProjOp::mccallum);
        CHECK(check_preservation(t, associated_graph(A)));
    }
}

TEST_CASE("tree projection") {
    Ex41 e;
    VarGraph G = associated_graph(e.F);
    ElimTree tree(G, e.peo);
    SUBCASE("leaves carry exactly their own polynomials") {
        TreeTrace tt = tree_projection(e.F, tree, ProjOp::mccallum);
        for (VarId v : e.peo.ranked()) {
            if (!tree.children(v).empty()) continue;
            for (const auto& f : tt.sets.at(v)) {
                CHECK(e.F.contains(f));
                CHECK(f.contains_var(v));
            }
        }
    }
    SUBCASE("single-node tree carries the whole univariate set") {
        Ctx c2;
        PolySet A;
        A.insert(c2("u^2 - 1"));
        A.insert(c2("u + 3"));
        VarGraph g1 = associated_graph(A);
        ElimTree t1(g1, Ordering{{c2.var("u")}});
        TreeTrace tt = tree_projection(A, t1, ProjOp::mccallum);
        CHECK(tt.sets.at(c2.var("u")) == A);
    }
    SUBCASE("nonconstant union equals the procedure union") {
        TreeTrace tt = tree_projection(e.F, tree, ProjOp::mccallum, false);
        ProjectionTrace t = projection_procedure(e.F, e.peo, ProjOp::mccallum, false);
        CHECK(tp_equals_pi(tt, t));
    }
}

TEST_CASE("tree-procedure equivalence on random sparse systems") {
    std::mt19937_64 rng(223);
    int done = 0;
    while (done < 30) {
        PolySet A = testutil::random_sparse_system(rng, 5, 4);
        if (A.vars().size() < 2) continue;
        ++done;
        VarGraph G0 = associated_graph(A);
        Ordering o = min_fill_ordering(G0);
        VarGraph G = elimination_game(G0, o).completion;
        ElimTree tree(G, o);
        for (ProjOp op : {ProjOp::mccallum, ProjOp::brown}) {
            ProjectionTrace t = projection_procedure(A, o, op, false);
            TreeTrace tt = tree_projection(A, tree, op, false);
            CHECK(tp_equals_pi(tt, t));
            CHECK(check_preservation(t, G));
            ProjectionTrace tw = projection_procedure(A, o, op, true);
            CHECK(check_preservation(tw, G));
        }
    }
}

TEST_CASE("tp_equals_pi rejects mismatched traces and catches corruption") {
    Ex41 e;
    VarGraph G = associated_graph(e.F);
    ElimTree tree(G, e.peo);
    ProjectionTrace t = projection_procedure(e.F, e.peo, ProjOp::mccallum, false);
    SUBCASE("operator mismatch") {
        TreeTrace tt = tree_projection(e.F, tree, ProjOp::brown, false);
        CHECK_THROWS_AS(tp_equals_pi(tt, t), std::invalid_argument);
    }
    SUBCASE("perturbed node set") {
        TreeTrace tt = tree_projection(e.F, tree, ProjOp::mccallum, false);
        tt.sets[e.c.var("x2")].insert(e.c("x2^4 + x1 + 7"));
        CHECK_FALSE(tp_equals_pi(tt, t));
    }
    SUBCASE("empty input is vacuously equal") {
        Ctx c2;
        PolySet empty;
        VarGraph g;
        g.add_vertex(c2.var("u"));
        ElimTree t1(g, Ordering{{c2.var("u")}});
        TreeTrace tt = tree_projection(empty, t1, ProjOp::mccallum, false);
        ProjectionTrace tp = projection_procedure(empty, Ordering{{c2.var("u")}},
                                                  ProjOp::mccallum, false);
        CHECK(tp_equals_pi(tt, tp));
    }
}

TEST_CASE("projected sets respect the degree growth bound") {
    std::mt19937_64 rng(227);
    int done = 0;
    while (done < 20) {
        PolySet A = testutil::random_sparse_system(rng, 4, 4);
        if (A.vars().size() < 2) continue;
        ++done;
        std::uint32_t d = combined_degree(A);
        for (VarId x : A.vars()) {
            PolySet out = proj_mccallum(A, x);
            for (const auto& f : out) {
                PolySet single;
                single.insert(f);
                if (!single.empty())
                    CHECK(combined_degree(single) <= 2 * d * d);
            }
        }
    }
}

TEST_CASE("proj_count is invariant under variable renaming") {
    Ex42 e;
    // rebuild the same system with permuted interning order
    Ctx c2;
    for (const char* n : {"b", "d", "a", "c"}) c2.var(n);
    PolySet F2;
    for (const char* s : {"a + b + 2", "b*c + 2*c + a", "c*d + b*d + c - 1", "d + b"})
        F2.insert(c2(s));
    Ordering o2{{c2.var("a"), c2.var("b"), c2.var("c"), c2.var("d")}};
    ProjectionTrace t1 = projection_procedure(e.F, e.peo, ProjOp::brown);
    ProjectionTrace t2 = projection_procedure(F2, o2, ProjOp::brown);
    CHECK(proj_count(t1) == proj_count(t2));
    for (std::size_t i = 0; i < t1.levels.size(); ++i)
        CHECK(t1.levels[i].size() == t2.levels[i].size());
}
