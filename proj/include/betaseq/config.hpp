#pragma once

// Run configuration: a single JSON object with a "systems" array of
// {"coeffs": [ints]} entries plus optional scalar options, e.g.
//
//   {"systems": [{"coeffs": [1,1]}, {"coeffs": [2]}],
//    "count": 1000, "skip": 0, "format": "csv", "precision": 15,
//    "work_budget": 200000000, "include_zero": false}

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "numeration.hpp"
#include "sequence.hpp"

namespace betaseq {

struct RunConfig {
  std::vector<std::vector<int>> systems;
  std::int64_t count = 1;
  std::int64_t skip = 0;
  std::string format = "csv";  // csv | jsonl
  int precision = 15;          // significant decimal digits, 6..17
  std::int64_t work_budget = 200'000'000;
  bool include_zero = false;
};

inline RunConfig parse_config(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("config must be a JSON object");

  RunConfig cfg;
  if (!doc.contains("systems") || !doc["systems"].is_array() || doc["systems"].empty())
    throw std::invalid_argument("config needs a non-empty \"systems\" array");
  for (const auto& entry : doc["systems"]) {
    if (!entry.is_object() || !entry.contains("coeffs") || !entry["coeffs"].is_array())
      throw std::invalid_argument("each system entry must be {\"coeffs\": [ints]}");
    std::vector<int> a;
    for (const auto& v : entry["coeffs"]) {
      if (!v.is_number_integer()) throw std::invalid_argument("coefficients must be integers");
      a.push_back(v.get<int>());
    }
    cfg.systems.push_back(std::move(a));
  }

  auto get_int = [&](const char* key, std::int64_t& out) {
    if (!doc.contains(key)) return;
    if (!doc[key].is_number_integer())
      throw std::invalid_argument(std::string(key) + " must be an integer");
    out = doc[key].get<std::int64_t>();
  };
  get_int("count", cfg.count);
  get_int("skip", cfg.skip);
  get_int("work_budget", cfg.work_budget);
  if (doc.contains("precision")) {
    if (!doc["precision"].is_number_integer())
      throw std::invalid_argument("precision must be an integer");
    cfg.precision = doc["precision"].get<int>();
  }
  if (doc.contains("format")) cfg.format = doc["format"].get<std::string>();
  if (doc.contains("include_zero")) {
    if (!doc["include_zero"].is_boolean())
      throw std::invalid_argument("include_zero must be a boolean");
    cfg.include_zero = doc["include_zero"].get<bool>();
  }

  if (cfg.count < 1) throw std::invalid_argument("count must be >= 1");
  if (cfg.skip < 0) throw std::invalid_argument("skip must be >= 0");
  if (cfg.precision < 6 || cfg.precision > 17)
    throw std::invalid_argument("precision must lie in [6, 17]");
  if (cfg.format != "csv" && cfg.format != "jsonl")
    throw std::invalid_argument("format must be csv or jsonl");

  // classify every coordinate system; out-of-scope vectors are rejected with
  // the admissible case shapes spelled out
  for (const auto& a : cfg.systems) {
    Classification c = classify_coefficients(a);
    if (!c.unit_interval()) {
      std::ostringstream os;
      os << "system " << coeff_string(a)
         << " is NotUnitIntervalOrNotDense; admissible coefficient shapes are "
            "(a0,...,a0), (a0,a0-1,...,a0-1,a0), (a0,...,a0,a0+1), "
            "or (a',...,a',a'') with a'=(a0,...,a0,a0-1), a''=(a0,...,a0) "
            "or a'=(a0,a0-1,...,a0-1), a''=(a0,a0-1,...,a0-1,a0)";
      throw std::invalid_argument(os.str());
    }
  }
  return cfg;
}

// Materialize the configured systems with enough precomputed range for
// indices skip .. skip+count (plus odometer slack) and run the pairwise
// compatibility screen; decisively incompatible pairs are rejected inside
// make_halton_config.
inline HaltonConfig instantiate(const RunConfig& cfg) {
  std::vector<NumerationSystem> systems;
  systems.reserve(cfg.systems.size());
  for (const auto& a : cfg.systems)
    systems.push_back(NumerationSystem::build_to_cover(a, cfg.skip + cfg.count + 1));
  return make_halton_config(std::move(systems));
}

}  // namespace betaseq
