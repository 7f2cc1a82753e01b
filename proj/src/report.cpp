#include "chordalcad/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace chordalcad {

Json rational_json(const Rational& r) {
    return Json{{"num", r.num}, {"den", r.den}, {"value", r.value()}};
}

Json poly_list_json(const PolySet& s, const VarTable& table) {
    Json out = Json::array();
    for (const auto& p : s) out.push_back(p.to_string(table));
    return out;
}

Json growth_table_json(const GrowthTable& t, const char* level_key) {
    Json rows = Json::array();
    for (const auto& row : t.rows) {
        rows.push_back(Json{{level_key, row.level_or_height},
                            {"number", row.number_bound.get_str()},
                            {"degree", row.degree_bound.get_str()}});
    }
    return rows;
}

Json trace_json(const ProjectionTrace& t, const VarTable& table, bool show_polys) {
    Json levels = Json::array();
    std::size_t n = t.levels.size();
    for (std::size_t j = 0; j < n; ++j) {
        Json level{{"position", n - j},  // the paper's index i of P_i
                   {"count", t.levels[j].size()}};
        if (j == 0) {
            level["role"] = "input";
        } else {
            level["eliminated"] = table.name(t.ordering.ranked()[j - 1]);
        }
        if (show_polys) level["polynomials"] = poly_list_json(t.levels[j], table);
        levels.push_back(std::move(level));
    }
    return Json{{"operator", to_string(t.op)},
                {"finest_basis_wrap", t.wrapped},
                {"levels", levels},
                {"proj_count", proj_count(t)}};
}

Json bench_rows_json(const std::vector<BenchRow>& rows, const VarTable& table, bool timings) {
    Json out = Json::array();
    for (const auto& r : rows) {
        Json row{{"ordering", ordering_to_string(r.ordering, table)},
                 {"is_peo", r.is_peo},
                 {"failed", r.failed}};
        if (r.failed) {
            row["error"] = r.error;
        } else {
            row["proj_count"] = r.proj_count;
            if (r.tree_height) row["tree_height"] = *r.tree_height;
            row["fill_d"] = rational_json(r.fill_d);
            row["cell_bound"] = r.predicted_cell_bound.get_str();
        }
        if (timings) row["wall_ms"] = r.wall_time.count() * 1000.0;
        out.push_back(std::move(row));
    }
    return out;
}

std::string dot_graph(const VarGraph& G, const std::vector<std::pair<VarId, VarId>>& fill_edges,
                      const VarTable& table) {
    std::ostringstream os;
    os << "graph associated {\n";
    for (VarId v : G.vertices()) os << "  \"" << table.name(v) << "\";\n";
    auto is_fill = [&fill_edges](VarId a, VarId b) {
        return std::find(fill_edges.begin(), fill_edges.end(), std::make_pair(a, b)) !=
               fill_edges.end();
    };
    for (const auto& [a, b] : G.edges()) {
        os << "  \"" << table.name(a) << "\" -- \"" << table.name(b) << "\"";
        if (is_fill(a, b)) os << " [style=dashed]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

std::string dot_tree(const ElimTree& T, const VarTable& table) {
    std::ostringstream os;
    os << "digraph elimination_tree {\n";
    for (VarId v : T.ordering().ranked()) os << "  \"" << table.name(v) << "\";\n";
    for (VarId v : T.ordering().ranked())
        if (auto p = T.parent(v))
            os << "  \"" << table.name(v) << "\" -> \"" << table.name(*p) << "\";\n";
    os << "}\n";
    return os.str();
}

std::string bench_rows_text(const std::vector<BenchRow>& rows, const VarTable& table) {
    std::ostringstream os;
    std::size_t ord_width = 8;
    for (const auto& r : rows)
        ord_width = std::max(ord_width, ordering_to_string(r.ordering, table).size());
    os << std::left << std::setw(static_cast<int>(ord_width + 2)) << "ordering"
       << std::setw(6) << "PEO" << std::setw(8) << "#proj" << std::setw(8) << "height"
       << std::setw(10) << "fill d" << "cell bound\n";
    for (const auto& r : rows) {
        os << std::left << std::setw(static_cast<int>(ord_width + 2))
           << ordering_to_string(r.ordering, table);
        if (r.failed) {
            os << "failed: " << r.error << "\n";
            continue;
        }
        std::ostringstream fd;
        fd << std::fixed << std::setprecision(3) << r.fill_d.value();
        os << std::setw(6) << (r.is_peo ? "yes" : "no") << std::setw(8) << r.proj_count
           << std::setw(8) << (r.tree_height ? std::to_string(*r.tree_height) : "-")
           << std::setw(10) << fd.str();
        std::string bound = r.predicted_cell_bound.get_str();
        if (bound.size() > 24) bound = bound.substr(0, 10) + "..(" + std::to_string(bound.size()) + " digits)";
        os << bound << "\n";
    }
    return os.str();
}

}  // namespace chordalcad
