#pragma once

// JSON formats: the group-table file { "order": n, "table": [[...]],
// "labels": [...] } with row i, column j holding the index of g_i * g_j,
// and the cocycle file { "group": <spec string>, "modulus": m, "values":
// flat row-major table }. The table reader validates the group axioms.

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "schurkit/cocycle.hpp"
#include "schurkit/error.hpp"
#include "schurkit/finite_group.hpp"

namespace schurkit {

inline FiniteGroup group_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("order") || !j.contains("table")) {
        throw ParseError("group table: expected an object with \"order\" and \"table\"");
    }
    const std::uint64_t order = j.at("order").get<std::uint64_t>();
    if (order == 0 || order > FiniteGroup::kTableLimit) {
        throw ParseError("group table: order must be in 1.." + std::to_string(FiniteGroup::kTableLimit));
    }
    const auto& rows = j.at("table");
    if (!rows.is_array() || rows.size() != order) throw ParseError("group table: row count != order");
    std::vector<elem_t> table;
    table.reserve(order * order);
    for (const auto& row : rows) {
        if (!row.is_array() || row.size() != order) throw ParseError("group table: column count != order");
        for (const auto& v : row) {
            std::uint64_t x = v.get<std::uint64_t>();
            if (x >= order) throw ParseError("group table: entry out of range");
            table.push_back(static_cast<elem_t>(x));
        }
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) {
        for (const auto& l : j.at("labels")) labels.push_back(l.get<std::string>());
        if (labels.size() != order) throw ParseError("group table: label count != order");
    }
    // from_table validates identity, inverses and associativity.
    return FiniteGroup::from_table(std::move(table), static_cast<elem_t>(order), std::move(labels));
}

inline nlohmann::json group_to_json(const FiniteGroup& g) {
    if (!g.has_table()) throw CapacityError("group table: only table-backed groups serialize");
    nlohmann::json rows = nlohmann::json::array();
    for (elem_t a = 0; a < g.order(); ++a) {
        nlohmann::json row = nlohmann::json::array();
        for (elem_t b = 0; b < g.order(); ++b) row.push_back(g.mul(a, b));
        rows.push_back(std::move(row));
    }
    nlohmann::json j{{"order", g.order()}, {"table", std::move(rows)}};
    if (!g.labels().empty()) j["labels"] = g.labels();
    return j;
}

inline nlohmann::json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    nlohmann::json j;
    in >> j;
    return j;
}

inline FiniteGroup load_group_table(const std::string& path) { return group_from_json(read_json_file(path)); }

inline nlohmann::json cocycle_to_json(const Cocycle2& c, const std::string& group_ref) {
    const elem_t n = c.group().order();
    std::vector<std::uint32_t> vals;
    vals.reserve(static_cast<std::size_t>(n) * n);
    for (elem_t g = 0; g < n; ++g) {
        for (elem_t h = 0; h < n; ++h) vals.push_back(static_cast<std::uint32_t>(c(g, h)));
    }
    return nlohmann::json{{"group", group_ref}, {"modulus", c.modulus()}, {"values", vals}};
}

// The caller resolves the "group" reference (a group-spec string) and
// passes the resulting group in.
inline Cocycle2 cocycle_from_json(const nlohmann::json& j, const FiniteGroup& g) {
    if (!j.contains("modulus") || !j.contains("values")) {
        throw ParseError("cocycle file: expected \"modulus\" and \"values\"");
    }
    std::uint64_t m = j.at("modulus").get<std::uint64_t>();
    std::vector<std::uint32_t> vals = j.at("values").get<std::vector<std::uint32_t>>();
    if (vals.size() != static_cast<std::size_t>(g.order()) * g.order()) {
        throw ParseError("cocycle file: value table size does not match the group order");
    }
    Cocycle2 c = Cocycle2::from_values(g, m, std::move(vals));
    c.require_normalized_cocycle();
    return c;
}

}  // namespace schurkit
