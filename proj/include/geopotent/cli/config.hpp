#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "geopotent/mgp_solver.hpp"
#include "geopotent/model_core.hpp"

namespace geopotent::cli {

enum class OutputFormat { csv, json };

struct RunConfig {
  PhysicalConstants constants;
  EarthParameters earth;
  std::optional<double> p_g_override;  // Pa
  std::vector<BoundaryReference> boundaries{default_cmb(), default_icb()};
  OutputFormat output_format = OutputFormat::csv;
  std::optional<std::filesystem::path> output_path;
  std::optional<std::filesystem::path> profile_path;
};

/// Parses a config document. Unknown keys are rejected at every level;
/// relative profile paths resolve against `base_dir` and must exist.
RunConfig parse_config(const nlohmann::json& doc, const std::filesystem::path& base_dir = {});

RunConfig load_config(const std::filesystem::path& path);

OutputFormat parse_output_format(const std::string& text);

}  // namespace geopotent::cli
