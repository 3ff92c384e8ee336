#pragma once
// Row-oriented output table with CSV and JSON renderings.

#include <ostream>
#include <string>
#include <vector>

#include "arpl/serialize.hpp"

namespace arpl::cli {

enum class Format { Csv, Json };

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Json>> rows;
  Json meta = Json::object();  // seed, trials, ... (JSON header, CSV comment)

  void add(std::vector<Json> row) { rows.push_back(std::move(row)); }

  Json to_json() const {
    Json out = meta;
    out["table"] = name;
    Json arr = Json::array();
    for (const auto& r : rows) {
      Json obj = Json::object();
      for (std::size_t i = 0; i < columns.size() && i < r.size(); ++i) obj[columns[i]] = r[i];
      arr.push_back(std::move(obj));
    }
    out["rows"] = std::move(arr);
    return out;
  }

  static std::string csv_cell(const Json& v) {
    if (v.is_null()) return "";
    std::string s = v.is_string() ? v.get<std::string>() : v.dump();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
      if (c == '"') q += '"';
      q += c;
    }
    return q + "\"";
  }

  void write_csv(std::ostream& os) const {
    for (auto it = meta.begin(); it != meta.end(); ++it) os << "# " << it.key() << '=' << csv_cell(it.value()) << '\n';
    for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
    os << '\n';
    for (const auto& r : rows) {
      for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << csv_cell(r[i]);
      os << '\n';
    }
  }

  void write(std::ostream& os, Format f) const {
    if (f == Format::Json)
      os << to_json().dump(2) << '\n';
    else
      write_csv(os);
  }
};

}  // namespace arpl::cli
