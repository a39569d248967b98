#include "geopotent/cli/report.hpp"

#include <cstdio>

#include <nlohmann/json.hpp>

namespace geopotent::cli {

namespace {

std::string format_exact(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string render(const Value& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, double>) {
          return format_number(x);
        } else if constexpr (std::is_same_v<T, bool>) {
          return x ? "true" : "false";
        } else {
          return x;
        }
      },
      v);
}

nlohmann::ordered_json to_json(const Value& v) {
  return std::visit([](const auto& x) { return nlohmann::ordered_json(x); }, v);
}

void write_row(std::ostream& out, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out << ',';
    out << cells[i];
  }
  out << '\n';
}

}  // namespace

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

void write_csv(const Report& report, std::ostream& out) {
  out << "# geopotent " << report.command << '\n';
  out << "# constants.gamma=" << format_exact(report.constants.gamma) << '\n';
  out << "# earth.mean_radius=" << format_exact(report.earth.mean_radius) << '\n';
  out << "# earth.mass=" << format_exact(report.earth.mass) << '\n';
  out << "# earth.mean_density=" << format_exact(report.earth.mean_density) << '\n';
  out << "# earth.surface_first_cosmic_velocity="
      << format_exact(report.earth.surface_first_cosmic_velocity) << '\n';
  out << "# earth.gm=" << format_exact(report.earth.gm) << '\n';
  bool first_block = true;
  if (!report.quantities.empty()) {
    out << "quantity,value,unit\n";
    for (const auto& q : report.quantities) write_row(out, {q.name, render(q.value), q.unit});
    first_block = false;
  }
  for (const auto& t : report.tables) {
    if (!first_block) out << '\n';
    first_block = false;
    out << "# table " << t.name << '\n';
    write_row(out, t.columns);
    for (const auto& row : t.rows) {
      std::vector<std::string> cells;
      cells.reserve(row.size());
      for (const auto& v : row) cells.push_back(render(v));
      write_row(out, cells);
    }
  }
}

void write_json(const Report& report, std::ostream& out) {
  nlohmann::ordered_json doc;
  doc["command"] = report.command;
  doc["constants"] = {{"gamma", report.constants.gamma}};
  doc["earth"] = {{"mean_radius", report.earth.mean_radius},
                  {"mass", report.earth.mass},
                  {"mean_density", report.earth.mean_density},
                  {"surface_first_cosmic_velocity", report.earth.surface_first_cosmic_velocity},
                  {"gm", report.earth.gm}};
  auto values = nlohmann::ordered_json::object();
  auto units = nlohmann::ordered_json::object();
  for (const auto& q : report.quantities) {
    values[q.name] = to_json(q.value);
    units[q.name] = q.unit;
  }
  doc["values"] = values;
  doc["units"] = units;
  auto tables = nlohmann::ordered_json::object();
  for (const auto& t : report.tables) {
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
      auto obj = nlohmann::ordered_json::object();
      for (std::size_t i = 0; i < row.size() && i < t.columns.size(); ++i) {
        obj[t.columns[i]] = to_json(row[i]);
      }
      rows.push_back(std::move(obj));
    }
    tables[t.name] = std::move(rows);
  }
  doc["tables"] = tables;
  out << doc.dump(2) << '\n';
}

}  // namespace geopotent::cli
