#include "chordalcad/advisor.hpp"

#include <doctest.h>

#include <map>

#include "oracles.hpp"

using namespace chordalcad;
using testutil::Ctx;

namespace {

PolySystem example41() {
    PolySystem sys;
    for (const char* n : {"x1", "x2", "x3", "x4", "x5"}) sys.table.intern(n);
    VarTable& t = sys.table;
    for (const char* s : {"x1 + x4", "x2 + x4", "x3^2 + x2", "x3^3 + x1", "x5 + x2",
                          "x5 + x1 + x2"})
        sys.polys.insert(parse_poly(s, t));
    return sys;
}

}  // namespace

TEST_CASE("lattice family generator") {
    SUBCASE("n = 4 is the single binomial") {
        PolySystem sys = gen_lattice_family(4);
        CHECK(sys.polys.size() == 1);
        CHECK(sys.table.size() == 4);
        CHECK(sys.polys.contains(parse_poly("x1*x4 - x2*x3", sys.table)));
    }
    SUBCASE("n = 5") {
        PolySystem sys = gen_lattice_family(5);
        CHECK(sys.polys.size() == 2);
        CHECK(associated_graph(sys.polys).vertex_count() == 5);
    }
    SUBCASE("chordal through n = 14") {
        for (unsigned n = 4; n <= 14; ++n)
            CHECK(mcs_peo(associated_graph(gen_lattice_family(n).polys)).chordal);
    }
    SUBCASE("n below 4 rejected") { CHECK_THROWS_AS(gen_lattice_family(3), std::invalid_argument); }
}

TEST_CASE("grid family generator") {
    CHECK(gen_grid_family(1, 1).table.size() == 8);
    CHECK(gen_grid_family(1, 1).polys.size() == 4);
    CHECK(gen_grid_family(2, 1).table.size() == 14);
    CHECK(gen_grid_family(1, 2).table.size() == 14);
    CHECK_THROWS_AS(gen_grid_family(0, 1), std::invalid_argument);
}

TEST_CASE("named lattice orderings match the height formulas") {
    for (unsigned n : {4u, 8u, 9u}) {
        PolySystem sys = gen_lattice_family(n);
        auto [l1, l2] = named_orderings_lattice(sys);
        VarGraph G = associated_graph(sys.polys);
        CHECK(verify_peo(G, l1));
        CHECK(verify_peo(G, l2));
        CHECK(ElimTree(G, l1).height() == n - 1);
        CHECK(ElimTree(G, l2).height() == (n + 2) / 2);  // ceil((n+1)/2)
    }
}

TEST_CASE("minimum height beats the straight-line ordering on F8") {
    PolySystem sys = gen_lattice_family(8);
    VarGraph G = associated_graph(sys.polys);
    auto [o, h] = min_height_peo(G);
    CHECK(h == 5);
    CHECK(verify_peo(G, o));
}

TEST_CASE("suggest_ordering") {
    SUBCASE("chordal input gets a PEO of its own graph") {
        PolySystem sys = example41();
        auto [o, r] = suggest_ordering(sys, Strategy{});
        CHECK(r.chordal);
        CHECK(verify_peo(associated_graph(sys.polys), o));
        CHECK(r.fill_edge_count == 0);
    }
    SUBCASE("lattice family reaches the l2 height") {
        PolySystem sys = gen_lattice_family(8);
        auto [o, r] = suggest_ordering(sys, Strategy{});
        CHECK(r.tree_height == 5);
    }
    SUBCASE("single univariate polynomial") {
        PolySystem sys;
        sys.polys.insert(parse_poly("u^2 - 2", sys.table));
        auto [o, r] = suggest_ordering(sys, Strategy{});
        CHECK(o.size() == 1);
        CHECK(r.tree_height == 0);
    }
    SUBCASE("given strategy parses and reports") {
        PolySystem sys = example41();
        Strategy s;
        s.tag = StrategyTag::given;
        s.ordering_text = "x4>x5>x3>x2>x1";
        auto [o, r] = suggest_ordering(sys, s);
        CHECK(ordering_to_string(o, sys.table) == "x4>x5>x3>x2>x1");
        CHECK(r.fill_edge_count == 0);
    }
    SUBCASE("non-chordal input is completed first") {
        PolySystem sys;
        for (const char* s : {"a*b - 1", "b*c - 1", "c*d - 1", "d*a - 1"})
            sys.polys.insert(parse_poly(s, sys.table));
        auto [o, r] = suggest_ordering(sys, Strategy{});
        CHECK_FALSE(r.chordal);
        CHECK(r.witness.size() >= 4);
        CHECK(r.fill_edge_count >= 1);
        ElimTree tree(elimination_game(associated_graph(sys.polys), o).completion, o);
        CHECK(tree.height() == r.tree_height);
    }
}

TEST_CASE("compare_orderings on the PEO class of the worked example") {
    PolySystem sys = example41();
    VarTable& t = sys.table;
    std::vector<VarId> tail{*t.find("x3"), *t.find("x2"), *t.find("x1")};
    std::sort(tail.begin(), tail.end());
    std::vector<Ordering> orderings;
    do {
        std::vector<VarId> ranked{*t.find("x4"), *t.find("x5")};
        ranked.insert(ranked.end(), tail.begin(), tail.end());
        orderings.emplace_back(ranked);
    } while (std::next_permutation(tail.begin(), tail.end()));
    REQUIRE(orderings.size() == 6);

    auto rows = compare_orderings(sys, orderings, ProjOp::mccallum);
    REQUIRE(rows.size() == 6);
    std::multiset<std::size_t> counts;
    std::size_t total = 0;
    for (const auto& row : rows) {
        REQUIRE_FALSE(row.failed);
        CHECK(row.is_peo);
        CHECK(row.fill_d == Rational{0, 1});
        counts.insert(row.proj_count);
        total += row.proj_count;
    }
    CHECK(counts == std::multiset<std::size_t>{20, 20, 21, 21, 21, 21});
    CHECK(std::abs(static_cast<double>(total) / 6.0 - 20.7) < 0.05);
}

TEST_CASE("compare_orderings single row and failure marking") {
    PolySystem sys = example41();
    auto rows = compare_orderings(
        sys, {parse_ordering("x4>x5>x3>x2>x1", sys.table)}, ProjOp::mccallum);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].proj_count == 21);
    CHECK(rows[0].tree_height == 2);
    CHECK(rows[0].predicted_cell_bound > 0);
}

TEST_CASE("ordering text parsing") {
    PolySystem sys = example41();
    Ordering o = parse_ordering("x4 > x5>x3> x2 >x1", sys.table);
    CHECK(o.size() == 5);
    CHECK(ordering_to_string(o, sys.table) == "x4>x5>x3>x2>x1");
    CHECK_THROWS_AS(parse_ordering("x4>>x1", sys.table), std::invalid_argument);
    CHECK_THROWS_AS(parse_ordering("x4>nope", sys.table), std::invalid_argument);
}

TEST_CASE("grid family min-fill stays near the reported fill metric") {
    PolySystem sys = gen_grid_family(1, 1);
    VarGraph G = associated_graph(sys.polys);
    Ordering o = min_fill_ordering(G);
    auto game = elimination_game(G, o);
    Rational d = fill_metric(G, game.completion);
    CHECK(d.value() <= 0.17 + 0.005);
    CHECK(verify_peo(game.completion, o));
}
