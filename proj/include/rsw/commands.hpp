#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "rsw/config.hpp"
#include "rsw/output.hpp"

namespace rsw {

struct RunSummary {
  std::filesystem::path out_dir;
  std::size_t steps = 0;
  double wall_seconds = 0.0;
  double final_e_inf = 0.0;
  std::vector<std::string> snapshot_files;
};

/// Runs a configuration and writes snap_<step>.csv, diag.csv, probe.csv and
/// report.json into config.out_dir (created if missing).
RunSummary run_command(const RunConfig& config, std::ostream& log);

/// Resolutions must be >= 2, each double the previous one.
void check_doubling(const std::vector<int>& resolutions);

/// Runs a case at each resolution and scores it against its reference:
/// L1 in space at t_max, or L1 in time at the probe cell.
std::vector<ConvergenceRow> convergence_study(const std::string& case_name, int order,
                                              const std::vector<int>& resolutions);

/// convergence_study plus convergence_<case>_order<k>.csv in out_dir.
std::filesystem::path convergence_command(const std::string& case_name, int order,
                                          const std::vector<int>& resolutions,
                                          const std::filesystem::path& out_dir,
                                          std::ostream& log);

void list_cases(std::ostream& os);

}  // namespace rsw
