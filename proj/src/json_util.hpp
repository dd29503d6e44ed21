#ifndef VRDA_SRC_JSON_UTIL_HPP
#define VRDA_SRC_JSON_UTIL_HPP

#include <charconv>
#include <cmath>
#include <string>

#include <json.hpp>

#include "vrda/dataio.hpp"
#include "vrda/sparse_vector.hpp"

namespace vrda::detail {

inline nlohmann::json weights_to_json(const SparseVector& w) {
  nlohmann::json entries = nlohmann::json::object();
  for (const auto& [idx, val] : w.entries())
    entries[std::to_string(idx)] = val;
  return nlohmann::json{{"dim", w.dim()}, {"entries", entries}};
}

inline SparseVector weights_from_json(const nlohmann::json& doc,
                                      const std::string& name) {
  if (!doc.is_object() || !doc.contains("dim") || !doc.contains("entries"))
    throw ParseError(name + ": expected {\"dim\": n, \"entries\": {...}}");
  if (!doc["dim"].is_number_unsigned())
    throw ParseError(name + ": dim must be a non-negative integer");
  auto dim = doc["dim"].get<std::size_t>();
  if (!doc["entries"].is_object())
    throw ParseError(name + ": entries must be an object");

  std::vector<std::pair<std::size_t, double>> entries;
  for (const auto& [key, value] : doc["entries"].items()) {
    std::size_t index = 0;
    auto [ptr, ec] =
        std::from_chars(key.data(), key.data() + key.size(), index);
    if (ec != std::errc() || ptr != key.data() + key.size())
      throw ParseError(name + ": bad entry index '" + key + "'");
    if (index >= dim)
      throw ParseError(name + ": entry index " + key + " >= dim");
    if (!value.is_number())
      throw ParseError(name + ": entry '" + key + "' is not a number");
    double v = value.get<double>();
    if (!std::isfinite(v))
      throw ParseError(name + ": entry '" + key + "' is not finite");
    entries.emplace_back(index, v);
  }
  return SparseVector(dim, entries);
}

}  // namespace vrda::detail

#endif
