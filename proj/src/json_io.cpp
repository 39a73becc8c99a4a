#include "tlweyl/json_io.hpp"

#include <json.hpp>

#include "tlweyl/errors.hpp"

namespace tlweyl {

namespace {

nlohmann::json reflections_json(const ReflectionSet& set) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Reflection& t : set.members())
    arr.push_back(nlohmann::json::array({t.a, t.b}));
  return arr;
}

ReflectionSet reflections_from(const nlohmann::json& arr) {
  std::vector<Reflection> members;
  for (const auto& pair : arr)
    members.emplace_back(pair.at(0).get<int>(), pair.at(1).get<int>());
  return ReflectionSet(std::move(members));
}

}  // namespace

std::string table_to_json(const std::vector<TableRecord>& records, int n) {
  nlohmann::json root;
  root["rank"] = n;
  nlohmann::json rows = nlohmann::json::array();
  for (const TableRecord& rec : records) {
    nlohmann::json row;
    row["element"] = rec.element;
    row["left"] = reflections_json(rec.left);
    row["right"] = reflections_json(rec.right);
    rows.push_back(std::move(row));
  }
  root["records"] = std::move(rows);
  return root.dump(2) + "\n";
}

ParsedTable table_from_json(const std::string& text) {
  nlohmann::json root = nlohmann::json::parse(text);
  ParsedTable out;
  out.rank = root.at("rank").get<int>();
  for (const auto& row : root.at("records")) {
    TableRecord rec;
    rec.element = row.at("element").get<Word>();
    rec.left = reflections_from(row.at("left"));
    rec.right = reflections_from(row.at("right"));
    out.records.push_back(std::move(rec));
  }
  return out;
}

}  // namespace tlweyl
