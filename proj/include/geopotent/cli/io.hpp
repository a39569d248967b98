#pragma once

#include <filesystem>
#include <istream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "geopotent/model_core.hpp"

namespace geopotent::cli {

inline constexpr const char* kProfileHeader = "radius_m,density_kg_m3,pressure_pa";

/// Reads profile rows. MalformedCsv errors carry `source:line`.
std::vector<ProfileSample> read_profile_csv(std::istream& in, const std::string& source);

RadialProfile load_profile(const std::filesystem::path& path);

/// Builds a schedule from its JSON form; errors name the segment index.
CavitySchedule parse_schedule(const nlohmann::json& doc);

CavitySchedule load_schedule(const std::filesystem::path& path);

}  // namespace geopotent::cli
