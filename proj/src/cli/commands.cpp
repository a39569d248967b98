#include "geopotent/cli/commands.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "geopotent/cli/io.hpp"
#include "geopotent/mgp_solver.hpp"
#include "geopotent/profile_numerics.hpp"
#include "geopotent/pulsating_source.hpp"

namespace geopotent::cli {

namespace {

Report make_report(const std::string& command, const RunConfig& config) {
  return Report{command, config.constants, config.earth, {}, {}};
}

void add(Report& r, std::string name, Value v, std::string unit) {
  r.quantities.push_back({std::move(name), std::move(v), std::move(unit)});
}

std::vector<double> parse_list(const std::string& text, const char* what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorKind::NonPhysicalInput,
                  std::string("bad number '") + item + "' in --" + what);
    }
  }
  return out;
}

}  // namespace

Background default_background(const RunConfig& config) {
  const auto parts = direct_problem(config.earth, 0.0, config.constants);
  const double R = config.earth.mean_radius;
  return {parts.u_surface, config.earth.gm / (R * R), parts.u_infinity};
}

Report cmd_direct(const RunConfig& config, const DirectRequest& request) {
  auto report = make_report("direct", config);
  double p_g = 0.0;
  double rho_g = config.earth.mean_density;
  std::string source;
  if (request.p_g) {
    p_g = *request.p_g;
    source = "override";
  } else if (request.profile) {
    const auto profile = load_profile(*request.profile);
    const auto grad = pressure_gradient_max(profile);
    p_g = grad.pressure_at_max;
    rho_g = mean_density(profile);
    source = "profile";
    add(report, "grad_p_radius", grad.radius_at_max, "m");
    add(report, "grad_p_magnitude", grad.gradient_magnitude, "Pa/m");
  } else {
    throw Error(ErrorKind::MissingPressureSource,
                "direct needs --p-g, p_g_override or a pressure profile");
  }
  const double phi_g = compression_potential(p_g, rho_g);
  const auto parts = direct_problem(config.earth, phi_g, config.constants);
  add(report, "p_g_source", source, "");
  add(report, "p_g", p_g, "Pa");
  add(report, "rho_g", rho_g, "kg/m3");
  add(report, "u_surface", parts.u_surface, "J/kg");
  add(report, "equipotential_surface", parts.equipotential_surface, "J/kg");
  add(report, "compression_potential", parts.compression_potential, "J/kg");
  add(report, "u_infinity", parts.u_infinity, "J/kg");
  return report;
}

Report cmd_inverse(const RunConfig& config, double u_infinity) {
  auto report = make_report("inverse", config);
  auto result = inverse_problem(config.earth.gm, u_infinity, config.earth.mean_radius);
  add(report, "u_infinity", u_infinity, "J/kg");
  add(report, "r0", result.r0, "m");
  add(report, "depth", result.depth, "m");
  add(report, "trend", to_string(result.trend), "");
  Table boundaries{"boundaries",
                   {"name", "radius_m", "layer_half_thickness_m", "offset_m", "within_layer"},
                   {}};
  for (const auto& b : config.boundaries) {
    const auto match = locate_boundary(result, b);
    boundaries.rows.push_back(
        {b.name, b.radius, b.layer_half_thickness, match.offset, match.within_layer});
  }
  report.tables.push_back(std::move(boundaries));
  return report;
}

Report cmd_profile(const RunConfig& config, const std::filesystem::path& profile_path) {
  auto report = make_report("profile", config);
  const auto profile = load_profile(profile_path);
  const double R = profile.body_radius();
  const auto grad = pressure_gradient_max(profile);
  const auto bound = homogeneity_bound(profile, config.constants);
  const double rho = mean_density(profile);
  add(report, "samples", static_cast<double>(profile.size()), "");
  add(report, "body_radius", R, "m");
  add(report, "total_mass", enclosed_mass(profile, R), "kg");
  add(report, "mean_density", rho, "kg/m3");
  add(report, "grad_p_radius", grad.radius_at_max, "m");
  add(report, "grad_p_pressure", grad.pressure_at_max, "Pa");
  add(report, "grad_p_magnitude", grad.gradient_magnitude, "Pa/m");
  add(report, "compression_potential", compression_potential(grad.pressure_at_max, rho), "J/kg");
  add(report, "homogeneity_integral_side", bound.integral_side, "J/kg");
  add(report, "homogeneity_uniform_side", bound.uniform_side, "J/kg");
  add(report, "homogeneity_holds", bound.holds, "");
  add(report, "homogeneity_relative_gap", bound.relative_gap, "");
  Table cores{"core_equilibrium_gravity", {"name", "core_radius_m", "pressure_pa", "g_m_s2"}, {}};
  for (const auto& b : config.boundaries) {
    if (!(b.radius > profile.first_radius() && b.radius < R)) continue;
    cores.rows.push_back({b.name, b.radius, interpolate(profile, b.radius).pressure,
                          core_equilibrium_gravity(profile, b.radius)});
  }
  report.tables.push_back(std::move(cores));
  return report;
}

Report cmd_anomaly(const RunConfig& config, const AnomalyRequest& request) {
  auto report = make_report("anomaly", config);
  const auto& src = request.source;
  const auto& bg = request.background;
  const auto& c = config.constants;
  add(report, "source_depth", src.depth, "m");
  add(report, "source_radius", src.radius, "m");
  add(report, "source_thickness", src.thickness(), "m");
  add(report, "density_contrast", src.density_contrast, "kg/m3");
  add(report, "anomalous_mass", anomalous_mass(src.radius, src.density_contrast), "kg");
  add(report, "crossover_radius", crossover_radius(src.radius), "m");
  add(report, "background_u0", bg.u0, "J/kg");
  add(report, "background_g0", bg.g0, "m/s2");
  add(report, "background_u_infinity", bg.u_infinity, "J/kg");

  const auto rows = detectability_report(src, request.offsets, bg, c);
  Table table{"detectability",
              {"offset_m", "k1", "k2", "k_ratio", "potential_dominates", "delta_u_j_kg",
               "delta_g_m_s2", "delta_v_s_m_s", "relative_u", "relative_g", "advantage"},
              {}};
  for (const auto& row : rows) {
    const auto k = sensitivity_coefficients(row.offset, src.radius, c);
    AnomalySource at = src;
    at.depth = row.offset;
    const auto signal = sphere_anomaly(at, bg, c);
    table.rows.push_back({row.offset, k.k1, k.k2, k.ratio,
                          potential_dominates(row.offset, src.radius), signal.delta_u,
                          signal.delta_g, signal.delta_v_s, row.relative_u, row.relative_g,
                          row.advantage});
  }
  report.tables.push_back(std::move(table));
  return report;
}

Report cmd_pulse(const RunConfig& config, const PulseRequest& request) {
  auto report = make_report("pulse", config);
  const auto schedule = load_schedule(request.schedule);
  const auto samples = evaluate_schedule(schedule, request.times, config.constants);
  Table table{"pulse",
              {"t_s", "source_radius_m", "potential_j_kg", "delta_u_j_kg", "delta_g_m_s2",
               "delta_v_s_m_s"},
              {}};
  for (const auto& s : samples) {
    table.rows.push_back({s.t, s.source_radius, s.potential, s.delta_u, s.delta_g, s.delta_v_s});
  }
  report.tables.push_back(std::move(table));
  return report;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Absolute gravitational potential of spherically symmetric bodies", "geopotent"};
  app.require_subcommand(1);

  std::string config_path;
  std::string profile_path;
  std::optional<double> p_g;
  std::optional<double> u_inf;
  std::string format;
  std::string out_path;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "JSON config (default: $GEOPOTENT_CONFIG)");
    sub->add_option("--format", format, "csv or json");
    sub->add_option("--out", out_path, "output file (default: stdout)");
  };

  auto* direct = app.add_subcommand("direct", "maximum gravitational potential of the Earth");
  add_common(direct);
  direct->add_option("--profile", profile_path, "pressure profile CSV");
  direct->add_option("--p-g", p_g, "compression pressure P_G, Pa");

  auto* inverse = app.add_subcommand("inverse", "characteristic gravitational radius");
  add_common(inverse);
  inverse->add_option("--u-inf", u_inf, "maximum potential U_inf, J/kg")->required();

  auto* profile = app.add_subcommand("profile", "radial profile diagnostics");
  add_common(profile);
  profile->add_option("--profile", profile_path, "profile CSV");

  double depth = 0.0, radius = 0.0, contrast = 0.0;
  std::string offsets_text;
  std::optional<double> u0, g0;
  auto* anomaly = app.add_subcommand("anomaly", "buried-sphere detectability table");
  add_common(anomaly);
  anomaly->add_option("--depth", depth, "source centre depth, m")->required();
  anomaly->add_option("--radius", radius, "source radius, m")->required();
  anomaly->add_option("--density-contrast", contrast, "signed contrast, kg/m3")->required();
  anomaly->add_option("--offsets", offsets_text, "comma-separated observer distances, m");
  anomaly->add_option("--u0", u0, "background potential, J/kg");
  anomaly->add_option("--g0", g0, "background gravity, m/s2");
  anomaly->add_option("--u-inf", u_inf, "background U_inf, J/kg");

  std::string schedule_path, times_text;
  std::optional<int> sample_count;
  auto* pulse = app.add_subcommand("pulse", "pulsating-source time series");
  add_common(pulse);
  pulse->add_option("--schedule", schedule_path, "schedule JSON")->required();
  auto* times_opt = pulse->add_option("--times", times_text, "comma-separated sample times, s");
  pulse->add_option("--samples", sample_count, "evenly spaced samples over the schedule span")
      ->excludes(times_opt);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (config_path.empty()) {
      if (const char* env = std::getenv("GEOPOTENT_CONFIG"); env && *env) config_path = env;
    }
    RunConfig config = config_path.empty() ? parse_config(nlohmann::json::object())
                                           : load_config(config_path);
    if (!format.empty()) config.output_format = parse_output_format(format);
    if (!out_path.empty()) config.output_path = out_path;
    std::optional<std::filesystem::path> profile_file = config.profile_path;
    if (!profile_path.empty()) profile_file = profile_path;

    Report report;
    if (*direct) {
      report = cmd_direct(config, {p_g ? p_g : config.p_g_override, profile_file});
    } else if (*inverse) {
      report = cmd_inverse(config, *u_inf);
    } else if (*profile) {
      if (!profile_file) {
        throw Error(ErrorKind::InvalidConfig, "profile needs --profile or profile_path");
      }
      report = cmd_profile(config, *profile_file);
    } else if (*anomaly) {
      auto bg = default_background(config);
      if (u0) bg.u0 = *u0;
      if (g0) bg.g0 = *g0;
      if (u_inf) bg.u_infinity = *u_inf;
      AnomalyRequest req{AnomalySource::make(depth, radius, contrast),
                         offsets_text.empty() ? std::vector<double>{}
                                              : parse_list(offsets_text, "offsets"),
                         bg};
      report = cmd_anomaly(config, req);
    } else {
      std::vector<double> times;
      if (!times_text.empty()) {
        times = parse_list(times_text, "times");
      } else {
        const auto schedule = load_schedule(schedule_path);
        const int n = sample_count.value_or(11);
        if (n < 1) throw Error(ErrorKind::NonPhysicalInput, "--samples must be >= 1");
        for (int i = 0; i < n; ++i) {
          const double frac = n == 1 ? 0.0 : static_cast<double>(i) / (n - 1);
          times.push_back(schedule.t_begin() + (schedule.t_end() - schedule.t_begin()) * frac);
        }
      }
      report = cmd_pulse(config, {schedule_path, std::move(times)});
    }

    std::ostringstream buffer;
    if (config.output_format == OutputFormat::json) {
      write_json(report, buffer);
    } else {
      write_csv(report, buffer);
    }
    if (config.output_path) {
      std::ofstream file(*config.output_path, std::ios::binary);
      if (!file) {
        throw Error(ErrorKind::InvalidConfig, "cannot write " + config.output_path->string());
      }
      file << buffer.str();
    } else {
      out << buffer.str();
    }
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace geopotent::cli
