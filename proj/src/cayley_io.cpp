#include "agband/cayley_io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>

#include "agband/errors.hpp"

namespace agband {

nlohmann::json to_json(const FiniteGroupoid& g) {
  nlohmann::json table = nlohmann::json::array();
  for (Index i = 0; i < g.order(); ++i) {
    auto row = g.row(i);
    table.push_back(std::vector<Index>(row.begin(), row.end()));
  }
  return {{"order", g.order()}, {"labels", g.labels()}, {"table", table}};
}

FiniteGroupoid groupoid_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) {
    throw ArgumentError("Cayley document must be a JSON object");
  }
  if (!doc.contains("order") || !doc["order"].is_number_unsigned()) {
    throw ArgumentError("Cayley document needs a non-negative integer 'order'");
  }
  if (!doc.contains("table") || !doc["table"].is_array()) {
    throw ArgumentError("Cayley document needs a 'table' array");
  }
  const auto order = doc["order"].get<std::size_t>();
  const auto& rows = doc["table"];
  if (rows.size() != order) {
    throw ArgumentError("'table' has " + std::to_string(rows.size()) +
                        " rows but order is " + std::to_string(order));
  }
  std::vector<Index> cells;
  cells.reserve(order * order);
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != order) {
      throw ArgumentError("every table row must be an array of length " +
                          std::to_string(order));
    }
    for (const auto& cell : row) {
      if (!cell.is_number_unsigned()) {
        throw ArgumentError("table entries must be non-negative integers");
      }
      cells.push_back(cell.get<Index>());
    }
  }
  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    if (!doc["labels"].is_array()) {
      throw ArgumentError("'labels' must be an array of strings");
    }
    for (const auto& label : doc["labels"]) {
      if (!label.is_string()) {
        throw ArgumentError("'labels' must be an array of strings");
      }
      labels.push_back(label.get<std::string>());
    }
  }
  return FiniteGroupoid(order, std::move(cells), std::move(labels));
}

std::string render_text(const FiniteGroupoid& g, std::string_view corner) {
  std::size_t width = corner.size();
  for (const auto& label : g.labels()) width = std::max(width, label.size());
  auto pad = [width](std::string_view s) {
    std::string out(s);
    out.resize(width, ' ');
    return out;
  };
  std::ostringstream out;
  out << pad(corner);
  for (const auto& label : g.labels()) out << ' ' << pad(label);
  out << '\n';
  for (Index i = 0; i < g.order(); ++i) {
    out << pad(g.labels()[i]);
    for (Index j = 0; j < g.order(); ++j) {
      out << ' ' << pad(g.labels()[g(i, j)]);
    }
    out << '\n';
  }
  return out.str();
}

FiniteGroupoid read_groupoid(const std::string& path, std::istream& in) {
  nlohmann::json doc;
  try {
    if (path == "-") {
      doc = nlohmann::json::parse(in);
    } else {
      std::ifstream file(path);
      if (!file) throw ArgumentError("cannot open '" + path + "'");
      doc = nlohmann::json::parse(file);
    }
  } catch (const nlohmann::json::parse_error& e) {
    throw ArgumentError("invalid JSON in '" + path + "': " + e.what());
  }
  return groupoid_from_json(doc);
}

}  // namespace agband
