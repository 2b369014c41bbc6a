#include "pretty.hpp"

#include <algorithm>
#include <vector>

namespace drazin::cli {

namespace {

using nlohmann::json;

bool is_matrix(const json& j) {
  return j.is_object() && j.size() == 3 && j.contains("rows") && j.contains("cols") && j.contains("entries");
}

std::string scalar_text(const json& j) {
  if (j.is_string()) {
    auto s = j.get<std::string>();
    if (s.size() > 2 && s.compare(s.size() - 2, 2, "/1") == 0) s.resize(s.size() - 2);
    return s;
  }
  return j.dump();
}

void render_matrix(const json& m, const std::string& pad, std::string& out) {
  const auto& rows = m["entries"];
  std::size_t width = 1;
  std::vector<std::vector<std::string>> cells;
  for (const auto& row : rows) {
    auto& line = cells.emplace_back();
    for (const auto& e : row) {
      line.push_back(scalar_text(e));
      width = std::max(width, line.back().size());
    }
  }
  for (const auto& line : cells) {
    out += pad + "[";
    for (std::size_t j = 0; j < line.size(); ++j) {
      out += std::string(width - line[j].size() + (j == 0 ? 0 : 1), ' ') + line[j];
    }
    out += "]\n";
  }
}

void render(const json& j, std::size_t indent, std::string& out);

void render_entry(const std::string& key, const json& v, std::size_t indent, std::string& out) {
  const std::string pad(indent, ' ');
  if (is_matrix(v)) {
    out += pad + key + ": " + v["rows"].dump() + "x" + v["cols"].dump() + "\n";
    render_matrix(v, pad + "  ", out);
  } else if (v.is_object()) {
    out += pad + key + ":\n";
    render(v, indent + 2, out);
  } else if (v.is_array() && std::any_of(v.begin(), v.end(), [](const json& e) { return e.is_structured(); })) {
    out += pad + key + ":\n";
    for (std::size_t i = 0; i < v.size(); ++i) render_entry("[" + std::to_string(i) + "]", v[i], indent + 2, out);
  } else {
    out += pad + key + ": " + scalar_text(v) + "\n";
  }
}

void render(const json& j, std::size_t indent, std::string& out) {
  for (const auto& [key, v] : j.items()) render_entry(key, v, indent, out);
}

}  // namespace

std::string render_pretty(const json& value) {
  std::string out;
  if (value.is_object()) {
    render(value, 0, out);
  } else {
    out = value.dump(2) + "\n";
  }
  return out;
}

}  // namespace drazin::cli
