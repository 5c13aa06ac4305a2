#pragma once
// Built-in example configurations and the JSON input format
//   {"rank": d, "vectors": [[...], ...], "theta": [...]}   (theta optional)

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "otk/errors.hpp"
#include "otk/matroid.hpp"

namespace otk {

struct CorpusEntry {
  std::string name;
  std::string summary;
  VectorConfig config;
};

inline const std::vector<CorpusEntry>& corpus() {
  using V = std::vector<long>;
  static const std::vector<CorpusEntry> entries = {
      {"tp1", "T*P^1: a = (1), (-1)", VectorConfig(1, {{1}, {-1}}, V{0, -1})},
      {"triangle", "three lines in the plane: (1,0), (0,1), (1,1)",
       VectorConfig(2, {{1, 0}, {0, 1}, {1, 1}}, V{0, 0, 1})},
      {"four", "rank 2 with a doubled direction: (1,0), (0,1), (1,1), (1,0)",
       VectorConfig(2, {{1, 0}, {0, 1}, {1, 1}, {1, 0}}, V{0, 0, 1, 2})},
      {"tp1xtp1", "T*P^1 x T*P^1", VectorConfig(2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}, V{0, 1, 0, 1})},
      {"five", "rank 2, five vectors in three directions",
       VectorConfig(2, {{1, 0}, {0, 1}, {1, 1}, {1, 0}, {0, 1}}, V{0, 0, 1, 2, 2})},
      {"k4", "graphic arrangement of the complete graph K4",
       VectorConfig(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, -1, 0}, {0, 1, -1}, {1, 0, -1}}, V{0, 0, 0, 1, 1, 3})},
  };
  return entries;
}

inline std::optional<VectorConfig> builtin_example(const std::string& name) {
  for (const auto& e : corpus())
    if (e.name == name) return e.config;
  return std::nullopt;
}

namespace detail {

inline std::vector<long> json_int_list(const nlohmann::json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + " must be an array of integers", 0);
  std::vector<long> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw ParseError(where + " must contain only integers", 0);
    out.push_back(x.get<long>());
  }
  return out;
}

}  // namespace detail

/// Parses the JSON input format. Syntax and schema problems raise ParseError;
/// structurally valid input that violates the vector constraints (zero or
/// non-primitive vectors, wrong lengths) raises InvalidConfig.
inline VectorConfig parse_config(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what(), e.byte);
  }
  if (!j.is_object()) throw ParseError("top level must be an object", 0);
  for (const auto& [key, value] : j.items())
    if (key != "rank" && key != "vectors" && key != "theta") throw ParseError("unknown key '" + key + "'", 0);
  if (!j.contains("rank") || !j["rank"].is_number_integer() || j["rank"].get<long>() < 0)
    throw ParseError("'rank' must be a non-negative integer", 0);
  if (!j.contains("vectors") || !j["vectors"].is_array()) throw ParseError("'vectors' must be an array", 0);
  std::vector<std::vector<long>> vectors;
  for (std::size_t i = 0; i < j["vectors"].size(); ++i)
    vectors.push_back(detail::json_int_list(j["vectors"][i], "vectors[" + std::to_string(i) + "]"));
  std::optional<std::vector<long>> theta;
  if (j.contains("theta") && !j["theta"].is_null()) theta = detail::json_int_list(j["theta"], "theta");
  return VectorConfig(j["rank"].get<std::size_t>(), std::move(vectors), std::move(theta));
}

inline VectorConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_config(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.message(), e.position());
  }
}

inline nlohmann::ordered_json config_to_json(const VectorConfig& config) {
  nlohmann::ordered_json j;
  j["rank"] = config.rank();
  j["vectors"] = config.vectors();
  if (config.has_theta()) j["theta"] = config.theta();
  return j;
}

}  // namespace otk
