#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "conedd/dd_engine.hpp"

namespace conedd {

enum ExitCode : int {
  kExitOk = 0,
  kExitInputError = 1,
  kExitInternalError = 2,
  kExitVerificationFailure = 3,
};

/// One line of benchmark output.
struct BenchRow {
  std::string instance;
  std::string coordinates;  // "standard" for triangulations, "cone" otherwise
  RunConfig config;
  double time_ms = 0;
  std::size_t peak_mem_bytes = 0;
  std::size_t max_vertices = 0;
  std::size_t final_count = 0;
  std::size_t sep = 0;
  std::string status = "ok";
};

std::string bench_csv_header();
std::string to_csv(const BenchRow& row);

/// Expands a matrix description into run configurations, in a fixed order.
/// Either a preset (`improvements`, `orderings`, `all`) or a list of axes
/// `key=v1,v2;key=v3` with keys order, adjacency, rep, filter (on|off) and
/// prefilter. Axes left out keep the default configuration. An empty string
/// yields no configurations.
std::vector<RunConfig> parse_matrix(std::string_view spec);

/// Entry point shared by the conedd binary and the tests. `args` excludes the
/// program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace conedd
