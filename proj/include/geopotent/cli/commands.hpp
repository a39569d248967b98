#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "geopotent/anomaly_kit.hpp"
#include "geopotent/cli/config.hpp"
#include "geopotent/cli/report.hpp"

namespace geopotent::cli {

/// Pressure source for the direct problem: an explicit P_G wins over a profile.
struct DirectRequest {
  std::optional<double> p_g;
  std::optional<std::filesystem::path> profile;
};

struct AnomalyRequest {
  AnomalySource source;
  std::vector<double> offsets;
  Background background;
};

struct PulseRequest {
  std::filesystem::path schedule;
  std::vector<double> times;
};

Report cmd_direct(const RunConfig& config, const DirectRequest& request);
Report cmd_inverse(const RunConfig& config, double u_infinity);
Report cmd_profile(const RunConfig& config, const std::filesystem::path& profile_path);
Report cmd_anomaly(const RunConfig& config, const AnomalyRequest& request);
Report cmd_pulse(const RunConfig& config, const PulseRequest& request);

/// Surface background of the configured Earth: U_R, gamma M / R^2 and
/// U_R + C_R (the balance without compression).
Background default_background(const RunConfig& config);

/// Full command-line entry point. Returns the process exit code:
/// 0 success, 2 input or validation error, 3 numerical-domain error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace geopotent::cli
