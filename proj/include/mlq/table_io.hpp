#pragma once

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace mlq {

enum class OutputFormat { kPlain, kCsv, kJson };

inline OutputFormat parse_output_format(const std::string& name) {
  if (name == "plain") return OutputFormat::kPlain;
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "json") return OutputFormat::kJson;
  throw std::invalid_argument("unknown format: " + name);
}

// A rectangular report with string cells. Numbers are always rendered as
// exact integers or "num/den" rationals; no cell ever holds a float.
struct TextTable {
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void add_row(std::vector<std::string> row) { rows.push_back(std::move(row)); }
};

inline std::string render_plain(const TextTable& table) {
  std::vector<std::size_t> width(table.columns.size(), 0);
  for (std::size_t c = 0; c < table.columns.size(); ++c)
    width[c] = table.columns[c].size();
  for (const auto& row : table.rows)
    for (std::size_t c = 0; c < row.size() && c < width.size(); ++c)
      width[c] = std::max(width[c], row[c].size());
  std::ostringstream out;
  if (!table.title.empty()) out << table.title << "\n";
  auto emit_row = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << "  ";
      out << row[c] << std::string(width[c] - row[c].size(), ' ');
    }
    out << "\n";
  };
  emit_row(table.columns);
  for (const auto& row : table.rows) emit_row(row);
  return out.str();
}

inline std::string render_csv(const TextTable& table) {
  std::ostringstream out;
  auto emit_row = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << ",";
      out << row[c];
    }
    out << "\n";
  };
  emit_row(table.columns);
  for (const auto& row : table.rows) emit_row(row);
  return out.str();
}

inline std::string render_json(const TextTable& table) {
  nlohmann::json j;
  j["title"] = table.title;
  j["columns"] = table.columns;
  j["rows"] = table.rows;
  return j.dump(2) + "\n";
}

inline std::string render_table(const TextTable& table, OutputFormat format) {
  switch (format) {
    case OutputFormat::kPlain:
      return render_plain(table);
    case OutputFormat::kCsv:
      return render_csv(table);
    case OutputFormat::kJson:
      return render_json(table);
  }
  return {};
}

// Parsers for the round-trip guarantee: emitted CSV/JSON reloads to the
// same exact cells.

inline TextTable parse_csv(const std::string& text) {
  TextTable table;
  std::istringstream in(text);
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.push_back("");
    if (header) {
      table.columns = std::move(cells);
      header = false;
    } else {
      table.rows.push_back(std::move(cells));
    }
  }
  return table;
}

inline TextTable parse_json_table(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  TextTable table;
  table.title = j.value("title", "");
  for (const auto& c : j.at("columns")) table.columns.push_back(c.get<std::string>());
  for (const auto& row : j.at("rows")) {
    std::vector<std::string> cells;
    for (const auto& c : row) cells.push_back(c.get<std::string>());
    table.rows.push_back(std::move(cells));
  }
  return table;
}

}  // namespace mlq
