#include "geopotent/cli/io.hpp"

#include <charconv>
#include <fstream>

namespace geopotent::cli {

namespace {

using nlohmann::json;

double parse_field(std::string_view text, const std::string& where) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw Error(ErrorKind::MalformedCsv, where + ": not a number: '" + std::string(text) + "'");
  }
  return value;
}

double required_number(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key) || !obj.at(key).is_number()) {
    throw Error(ErrorKind::InvalidSchedule, where + ": '" + key + "' must be a number");
  }
  return obj.at(key).get<double>();
}

void reject_unknown(const json& obj, const std::string& where,
                    std::initializer_list<std::string_view> allowed) {
  for (const auto& [key, _] : obj.items()) {
    bool known = false;
    for (auto a : allowed) known = known || key == a;
    if (!known) throw Error(ErrorKind::InvalidSchedule, where + ": unknown key '" + key + "'");
  }
}

}  // namespace

std::vector<ProfileSample> read_profile_csv(std::istream& in, const std::string& source) {
  std::vector<ProfileSample> rows;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_no == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
    const auto where = source + ":" + std::to_string(line_no);
    if (!header_seen) {
      if (line != kProfileHeader) {
        throw Error(ErrorKind::MalformedCsv,
                    where + ": expected header '" + std::string(kProfileHeader) + "'");
      }
      header_seen = true;
      continue;
    }
    if (line.empty()) continue;
    std::string_view rest(line);
    double fields[3];
    for (int k = 0; k < 3; ++k) {
      const auto comma = rest.find(',');
      if ((k < 2) == (comma == std::string_view::npos)) {
        throw Error(ErrorKind::MalformedCsv, where + ": expected exactly 3 comma-separated fields");
      }
      fields[k] = parse_field(rest.substr(0, comma), where);
      rest = k < 2 ? rest.substr(comma + 1) : std::string_view{};
    }
    rows.push_back({fields[0], fields[1], fields[2]});
  }
  if (!header_seen) {
    throw Error(ErrorKind::MalformedCsv,
                source + ":1: empty file, expected header '" + std::string(kProfileHeader) + "'");
  }
  return rows;
}

RadialProfile load_profile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidConfig, "cannot open profile " + path.string());
  const auto rows = read_profile_csv(in, path.string());
  return validate_profile(rows);
}

CavitySchedule parse_schedule(const json& doc) {
  if (!doc.is_object()) throw Error(ErrorKind::InvalidSchedule, "schedule must be an object");
  reject_unknown(doc, "schedule",
                 {"source_mass", "observer_radius", "host_density_contrast", "segments"});
  const double mass = required_number(doc, "source_mass", "schedule");
  const double observer = required_number(doc, "observer_radius", "schedule");
  const double contrast = required_number(doc, "host_density_contrast", "schedule");
  if (!doc.contains("segments") || !doc.at("segments").is_array()) {
    throw Error(ErrorKind::InvalidSchedule, "schedule: 'segments' must be an array");
  }
  std::vector<CavitySegment> segments;
  const auto& list = doc.at("segments");
  for (std::size_t i = 0; i < list.size(); ++i) {
    const auto where = "segment " + std::to_string(i);
    const auto& s = list[i];
    if (!s.is_object()) throw Error(ErrorKind::InvalidSchedule, where + ": must be an object");
    reject_unknown(s, where, {"t_start", "t_end", "kind", "params"});
    if (!s.contains("kind") || !s.at("kind").is_string()) {
      throw Error(ErrorKind::InvalidSchedule, where + ": 'kind' must be a string");
    }
    const auto kind = s.at("kind").get<std::string>();
    const json params = s.contains("params") ? s.at("params") : json::object();
    if (!params.is_object()) throw Error(ErrorKind::InvalidSchedule, where + ": bad params");
    RadiusFunction fn;
    if (kind == "constant") {
      reject_unknown(params, where + " params", {"radius"});
      fn = radius_fn::Constant{required_number(params, "radius", where)};
    } else if (kind == "linear") {
      reject_unknown(params, where + " params", {"from", "to"});
      fn = radius_fn::Linear{required_number(params, "from", where),
                             required_number(params, "to", where)};
    } else if (kind == "coalesce_step") {
      reject_unknown(params, where + " params", {"first", "second"});
      fn = radius_fn::CoalesceStep{required_number(params, "first", where),
                                   required_number(params, "second", where)};
    } else {
      throw Error(ErrorKind::InvalidSchedule, where + ": unknown kind '" + kind + "'");
    }
    segments.push_back({required_number(s, "t_start", where), required_number(s, "t_end", where),
                        fn});
  }
  return CavitySchedule(std::move(segments), mass, observer, contrast);
}

CavitySchedule load_schedule(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidConfig, "cannot open schedule " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::InvalidSchedule, path.string() + ": " + e.what());
  }
  return parse_schedule(doc);
}

}  // namespace geopotent::cli
