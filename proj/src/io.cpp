#include "falpha/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

#include "json.hpp"

namespace falpha {
namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw BadParams("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool looks_like_json(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{' || c == '[';
  }
  return false;
}

double parse_number(const std::string& token, const std::string& origin,
                    size_t line, size_t column) {
  size_t consumed = 0;
  double value = 0.0;
  try {
    value = std::stod(token, &consumed);
  } catch (const std::exception&) {
    consumed = 0;
  }
  // Allow trailing spaces only.
  for (size_t i = consumed; i < token.size(); ++i) {
    if (!std::isspace(static_cast<unsigned char>(token[i]))) consumed = 0;
  }
  if (consumed == 0 || token.empty()) {
    throw BadParams(origin + ": line " + std::to_string(line + 1) +
                    ", field " + std::to_string(column + 1) + " ('" + token +
                    "') is not a number");
  }
  return value;
}

std::vector<std::vector<double>> parse_csv_rows(const std::string& text,
                                                const std::string& origin) {
  std::vector<std::vector<double>> rows;
  std::istringstream in(text);
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    bool blank = true;
    for (char c : line) {
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    }
    if (blank) {
      ++line_no;
      continue;
    }
    std::vector<double> row;
    std::istringstream fields(line);
    std::string token;
    size_t col = 0;
    while (std::getline(fields, token, ',')) {
      row.push_back(parse_number(token, origin, line_no, col));
      ++col;
    }
    rows.push_back(std::move(row));
    ++line_no;
  }
  if (rows.empty()) throw BadParams(origin + ": no data rows");
  return rows;
}

std::vector<double> json_number_array(const nlohmann::json& node,
                                      const std::string& origin,
                                      const std::string& field) {
  if (!node.is_array()) {
    throw BadParams(origin + ": field '" + field + "' must be an array");
  }
  std::vector<double> values;
  values.reserve(node.size());
  for (size_t i = 0; i < node.size(); ++i) {
    if (!node[i].is_number()) {
      throw BadParams(origin + ": field '" + field + "[" + std::to_string(i) +
                      "]' is not a number");
    }
    values.push_back(node[i].get<double>());
  }
  return values;
}

nlohmann::json parse_json(const std::string& text, const std::string& origin) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw BadParams(origin + ": invalid JSON: " + e.what());
  }
}

}  // namespace

Distribution parse_distribution(const std::string& text,
                                const std::string& origin) {
  if (looks_like_json(text)) {
    const auto doc = parse_json(text, origin);
    if (!doc.is_object() || !doc.contains("probs")) {
      throw BadParams(origin + ": expected an object with a 'probs' array");
    }
    return Distribution::from_raw(
        json_number_array(doc["probs"], origin, "probs"));
  }
  const auto rows = parse_csv_rows(text, origin);
  if (rows.size() != 1) {
    throw BadParams(origin + ": a distribution must be a single CSV line, got " +
                    std::to_string(rows.size()) + " lines");
  }
  return Distribution::from_raw(rows.front());
}

Channel parse_channel(const std::string& text, const std::string& origin) {
  if (looks_like_json(text)) {
    const auto doc = parse_json(text, origin);
    if (!doc.is_object() || !doc.contains("rows")) {
      throw BadParams(origin + ": expected an object with a 'rows' array");
    }
    const auto& rows_node = doc["rows"];
    if (!rows_node.is_array() || rows_node.empty()) {
      throw BadParams(origin + ": field 'rows' must be a non-empty array");
    }
    std::vector<std::vector<double>> rows;
    for (size_t x = 0; x < rows_node.size(); ++x) {
      rows.push_back(json_number_array(rows_node[x], origin,
                                       "rows[" + std::to_string(x) + "]"));
    }
    return Channel::from_rows(std::move(rows));
  }
  return Channel::from_rows(parse_csv_rows(text, origin));
}

Distribution load_distribution(const std::string& path) {
  return parse_distribution(read_file(path), path);
}

Channel load_channel(const std::string& path) {
  return parse_channel(read_file(path), path);
}

}  // namespace falpha
