#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "zono/primitives.hpp"

namespace zono::cli {

struct RunConfig {
  std::string subcommand;
  int dim = 2;
  std::vector<double> n;
  std::string param = "diameter";  // moments: diameter | occurrence
  IntVec v0;                       // moments --v0, sample --track
  std::string zeros_path;
  int m = 1;
  std::uint64_t seed = 1;
  std::size_t samples = 1;
  double theta = 0;  // sample: 0 means theta~ of --n
  double cutoff = 1e-12;
  bool cumulative = false;
  bool polygon = false;
  std::string format = "auto";  // json | csv | auto (csv for sample, json otherwise)
  std::string output;
};

using Cell = std::variant<std::int64_t, double, std::string>;

/// A result table. JSON: {"schema", "version", "columns", "rows": [{col: value}], ...meta}.
/// CSV: "# schema: <schema>/<version>", a header row, then one line per row.
struct Table {
  std::string schema;
  int version = 1;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  nlohmann::json meta = nlohmann::json::object();
};

/// Doubles are written with 15 significant digits.
double round15(double x);

nlohmann::json to_json(const Table& t);
std::string to_csv(const Table& t);

Table cmd_count(const RunConfig& cfg);
Table cmd_compare(const RunConfig& cfg);
Table cmd_moments(const RunConfig& cfg);
Table cmd_asympt(const RunConfig& cfg);
Table cmd_icrit(const RunConfig& cfg);
Table cmd_sample(const RunConfig& cfg);

/// Embedded golden checks; one line per check, returns the failure count.
int self_test(std::ostream& out);

/// Full command line (args excludes the program name). Returns the exit
/// status: 0 success, 1 self-test failure or internal error, 2 bad usage,
/// 3 resource limit.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zono::cli
