#include "geopotent/cli/config.hpp"

#include <fstream>
#include <initializer_list>
#include <string_view>

namespace geopotent::cli {

namespace {

using nlohmann::json;

void reject_unknown(const json& obj, std::string_view where,
                    std::initializer_list<std::string_view> allowed) {
  if (!obj.is_object()) {
    throw Error(ErrorKind::InvalidConfig, std::string(where) + " must be an object");
  }
  for (const auto& [key, _] : obj.items()) {
    bool known = false;
    for (auto a : allowed) known = known || key == a;
    if (!known) {
      throw Error(ErrorKind::InvalidConfig,
                  "unknown key '" + key + "' in " + std::string(where));
    }
  }
}

double number_at(const json& obj, const char* key, std::string_view where, double fallback) {
  if (!obj.contains(key)) return fallback;
  const auto& v = obj.at(key);
  if (!v.is_number()) {
    throw Error(ErrorKind::InvalidConfig,
                std::string(where) + "." + key + " must be a number");
  }
  return v.get<double>();
}

std::filesystem::path existing_file(const std::string& text, const std::filesystem::path& base) {
  std::filesystem::path p(text);
  if (p.is_relative() && !base.empty()) p = base / p;
  if (!std::filesystem::exists(p)) {
    throw Error(ErrorKind::InvalidConfig, "referenced file does not exist: " + p.string());
  }
  return p;
}

}  // namespace

OutputFormat parse_output_format(const std::string& text) {
  if (text == "csv") return OutputFormat::csv;
  if (text == "json") return OutputFormat::json;
  throw Error(ErrorKind::InvalidConfig, "output format must be csv or json, got '" + text + "'");
}

RunConfig parse_config(const json& doc, const std::filesystem::path& base_dir) {
  reject_unknown(doc, "config",
                 {"constants", "earth", "p_g_override", "boundaries", "output_format",
                  "output_path", "profile_path"});
  RunConfig cfg;

  if (doc.contains("constants")) {
    const auto& c = doc.at("constants");
    reject_unknown(c, "constants", {"gamma"});
    cfg.constants.gamma = number_at(c, "gamma", "constants", cfg.constants.gamma);
  }
  cfg.constants.validate();

  EarthParameters earth;
  if (doc.contains("earth")) {
    const auto& e = doc.at("earth");
    reject_unknown(e, "earth",
                   {"mean_radius", "mass", "mean_density", "surface_first_cosmic_velocity"});
    earth.mean_radius = number_at(e, "mean_radius", "earth", earth.mean_radius);
    earth.mass = number_at(e, "mass", "earth", earth.mass);
    earth.mean_density = number_at(e, "mean_density", "earth", earth.mean_density);
    earth.surface_first_cosmic_velocity = number_at(
        e, "surface_first_cosmic_velocity", "earth", earth.surface_first_cosmic_velocity);
  }
  cfg.earth = EarthParameters::make(earth.mean_radius, earth.mass, earth.mean_density,
                                    earth.surface_first_cosmic_velocity, cfg.constants);

  if (doc.contains("p_g_override") && !doc.at("p_g_override").is_null()) {
    const double p = number_at(doc, "p_g_override", "config", 0.0);
    if (!(p > 0.0)) throw Error(ErrorKind::InvalidConfig, "p_g_override must be > 0");
    cfg.p_g_override = p;
  }

  if (doc.contains("boundaries")) {
    const auto& list = doc.at("boundaries");
    if (!list.is_array()) throw Error(ErrorKind::InvalidConfig, "boundaries must be an array");
    cfg.boundaries.clear();
    for (std::size_t i = 0; i < list.size(); ++i) {
      const auto where = "boundaries[" + std::to_string(i) + "]";
      const auto& b = list[i];
      reject_unknown(b, where, {"name", "radius", "layer_half_thickness"});
      if (!b.contains("name") || !b.at("name").is_string() || !b.contains("radius")) {
        throw Error(ErrorKind::InvalidConfig, where + " needs a name and a radius");
      }
      BoundaryReference ref{b.at("name").get<std::string>(), number_at(b, "radius", where, 0.0),
                            number_at(b, "layer_half_thickness", where, 0.0)};
      try {
        ref.validate();
      } catch (const Error& e) {
        throw Error(ErrorKind::InvalidConfig, where + ": " + e.what());
      }
      cfg.boundaries.push_back(std::move(ref));
    }
  }

  if (doc.contains("output_format")) {
    if (!doc.at("output_format").is_string()) {
      throw Error(ErrorKind::InvalidConfig, "output_format must be a string");
    }
    cfg.output_format = parse_output_format(doc.at("output_format").get<std::string>());
  }
  if (doc.contains("output_path") && !doc.at("output_path").is_null()) {
    if (!doc.at("output_path").is_string()) {
      throw Error(ErrorKind::InvalidConfig, "output_path must be a string");
    }
    std::filesystem::path p(doc.at("output_path").get<std::string>());
    if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
    cfg.output_path = p;
  }
  if (doc.contains("profile_path") && !doc.at("profile_path").is_null()) {
    if (!doc.at("profile_path").is_string()) {
      throw Error(ErrorKind::InvalidConfig, "profile_path must be a string");
    }
    cfg.profile_path = existing_file(doc.at("profile_path").get<std::string>(), base_dir);
  }
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidConfig, "cannot open config " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::InvalidConfig, path.string() + ": " + e.what());
  }
  return parse_config(doc, path.parent_path());
}

}  // namespace geopotent::cli
