#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rsw/cases.hpp"
#include "rsw/core.hpp"
#include "rsw/scheme.hpp"

namespace rsw {

/// A parsed run configuration. Unset optionals fall back to the case defaults.
struct RunConfig {
  std::string case_name;
  int order = 1;
  std::optional<int> n_cells;
  std::optional<double> t_max;
  std::optional<double> cfl;
  std::string out_dir = "out";
  std::optional<int> snapshot_every;
  std::optional<double> snapshot_interval;
  std::optional<int> probe_cell;
  std::optional<double> g;
  std::optional<double> coriolis;
  std::optional<double> eps_cutoff;
  std::optional<double> eq_tol;
  std::optional<double> speed_floor;

  // case=custom only
  std::optional<double> x_min;
  std::optional<double> x_max;
  std::optional<std::string> bc;
  std::optional<std::string> ic;
  std::optional<double> q_in;
  std::optional<double> h_out;

  /// Key/value pairs in file order, for echoing into the report.
  std::vector<std::pair<std::string, std::string>> entries;
};

std::vector<std::string> config_keys();
std::vector<std::string> custom_bc_names();
std::vector<std::string> custom_ic_names();

/// Parses `key = value` lines; '#' starts a comment. Throws
/// std::invalid_argument on unknown or repeated keys, malformed values and a
/// missing or unknown case.
RunConfig parse_config(std::string_view text);

/// Everything needed to start a run, with defaults filled in.
struct ResolvedRun {
  TestCase test_case;
  RunSetup setup;
};

ResolvedRun resolve(const RunConfig& config);

}  // namespace rsw
