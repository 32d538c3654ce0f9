#pragma once

#include <string>

#include <json.hpp>

#include "wickwave/nls_families.hpp"
#include "wickwave/rlw_families.hpp"
#include "wickwave/verify.hpp"

namespace wickwave {

// A fully parsed evaluation request: which equation, which solution family,
// the coefficient functions, the grid and where the output goes.
struct RunConfig {
  std::string equation;  // "nls" or "rlw"
  int family = 1;
  int sign = +1;  // nls only
  NlsParams nls;
  RlwParams rlw;
  GridSpec2D grid{-10.0, 10.0, 201, 0.0, 20.0, 201};
  std::string csv_path;
  std::string svg_path;  // empty: no plot requested
};

// Builds a RunConfig from a JSON document. Every malformed or missing field
// raises ConfigError naming the offending key.
RunConfig parse_config(const nlohmann::json& doc);

// Reads and parses a JSON config file.
RunConfig parse_config_file(const std::string& path);

}  // namespace wickwave
