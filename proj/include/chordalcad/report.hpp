#ifndef CHORDALCAD_REPORT_HPP
#define CHORDALCAD_REPORT_HPP

#include "chordalcad/advisor.hpp"
#include "chordalcad/complexity.hpp"
#include "chordalcad/graph.hpp"
#include "chordalcad/projection.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace chordalcad {

using Json = nlohmann::ordered_json;

Json rational_json(const Rational& r);
Json poly_list_json(const PolySet& s, const VarTable& table);
Json growth_table_json(const GrowthTable& t, const char* level_key);
Json trace_json(const ProjectionTrace& t, const VarTable& table, bool show_polys);
Json bench_rows_json(const std::vector<BenchRow>& rows, const VarTable& table, bool timings);

/// Associated graph in DOT; fill edges (when given) are dashed.
std::string dot_graph(const VarGraph& G, const std::vector<std::pair<VarId, VarId>>& fill_edges,
                      const VarTable& table);

/// Elimination tree in DOT; arcs point from child to parent.
std::string dot_tree(const ElimTree& T, const VarTable& table);

/// Plain-text table of benchmark rows mirroring the report columns.
std::string bench_rows_text(const std::vector<BenchRow>& rows, const VarTable& table);

}  // namespace chordalcad

#endif
