// Copyright 2026 The ladderwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdio>
#include <fstream>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "ladderwalk/error.hpp"

namespace ladderwalk {

using Cell = std::variant<long, double, std::string>;

/// A named rectangular table of results.
struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row) {
    detail::require(row.size() == columns.size(), "row width does not match table '" + name + "'");
    rows.push_back(std::move(row));
  }

  std::size_t column(const std::string& col) const {
    for (std::size_t i = 0; i < columns.size(); ++i)
      if (columns[i] == col) return i;
    throw std::out_of_range("table '" + name + "' has no column '" + col + "'");
  }

  friend bool operator==(const Table&, const Table&) = default;
};

/// Ordered collection of tables produced by one command.
struct Dataset {
  std::string command;
  std::vector<Table> tables;

  const Table& table(const std::string& name) const {
    for (const auto& t : tables)
      if (t.name == name) return t;
    throw std::out_of_range("dataset has no table '" + name + "'");
  }

  friend bool operator==(const Dataset&, const Dataset&) = default;
};

inline double as_double(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return *d;
  if (const auto* l = std::get_if<long>(&c)) return static_cast<double>(*l);
  throw std::invalid_argument("cell is not numeric");
}

// --- CSV ---------------------------------------------------------------------

inline std::string format_cell(const Cell& c) {
  char buf[64];
  if (const auto* d = std::get_if<double>(&c)) {
    std::snprintf(buf, sizeof buf, "%.17g", *d);
    return buf;
  }
  if (const auto* l = std::get_if<long>(&c)) {
    std::snprintf(buf, sizeof buf, "%ld", *l);
    return buf;
  }
  return std::get<std::string>(c);
}

inline void write_csv(const Table& table, std::ostream& os) {
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    os << (i ? "," : "") << table.columns[i];
  }
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_cell(row[i]);
    os << '\n';
  }
}

// --- JSON --------------------------------------------------------------------

inline nlohmann::json to_json(const Dataset& ds) {
  nlohmann::json tables = nlohmann::json::array();
  for (const auto& t : ds.tables) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : t.rows) {
      nlohmann::json row = nlohmann::json::array();
      for (const auto& c : r) std::visit([&](const auto& v) { row.push_back(v); }, c);
      rows.push_back(std::move(row));
    }
    tables.push_back({{"name", t.name}, {"columns", t.columns}, {"rows", std::move(rows)}});
  }
  return {{"command", ds.command}, {"tables", std::move(tables)}};
}

inline Dataset dataset_from_json(const nlohmann::json& j) {
  Dataset ds;
  ds.command = j.at("command").get<std::string>();
  for (const auto& jt : j.at("tables")) {
    Table t;
    t.name = jt.at("name").get<std::string>();
    t.columns = jt.at("columns").get<std::vector<std::string>>();
    for (const auto& jr : jt.at("rows")) {
      std::vector<Cell> row;
      for (const auto& jc : jr) {
        if (jc.is_number_integer()) {
          row.emplace_back(jc.get<long>());
        } else if (jc.is_number()) {
          row.emplace_back(jc.get<double>());
        } else {
          row.emplace_back(jc.get<std::string>());
        }
      }
      t.add_row(std::move(row));
    }
    ds.tables.push_back(std::move(t));
  }
  return ds;
}

inline void write_json(const Dataset& ds, std::ostream& os) { os << to_json(ds).dump(1) << '\n'; }

}  // namespace ladderwalk
