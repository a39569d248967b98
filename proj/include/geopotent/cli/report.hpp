#pragma once

#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "geopotent/model_core.hpp"

namespace geopotent::cli {

using Value = std::variant<double, std::string, bool>;

struct Quantity {
  std::string name;
  Value value;
  std::string unit;
};

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Value>> rows;
};

/// Output of one subcommand. Every report carries the constant set it was
/// computed with.
struct Report {
  std::string command;
  PhysicalConstants constants;
  EarthParameters earth;
  std::vector<Quantity> quantities;
  std::vector<Table> tables;
};

/// 10 significant digits, '#' comment lines for the constant set, then a
/// `quantity,value,unit` block and one block per table.
void write_csv(const Report& report, std::ostream& out);

/// Full round-trip precision.
void write_json(const Report& report, std::ostream& out);

/// "%.10g" rendering used by the CSV writer.
std::string format_number(double v);

}  // namespace geopotent::cli
