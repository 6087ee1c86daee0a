#include "rsw/commands.hpp"

#include <chrono>
#include <functional>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace rsw {

namespace fs = std::filesystem;

namespace {

std::ofstream open_out(const fs::path& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  return os;
}

void finish(std::ofstream& os, const fs::path& path) {
  os.flush();
  if (!os) throw std::runtime_error("write failed for '" + path.string() + "'");
}

template <typename Writer>
void write_file(const fs::path& path, Writer&& writer) {
  std::ofstream os = open_out(path);
  writer(os);
  finish(os, path);
}

std::function<State(double)> exact_at(const TestCase& tc, double t) {
  return [&tc, t](double x) { return conserved(tc.exact(x, t)); };
}

VariableErrors score(const TestCase& tc, const RunSetup& setup, const RunReport& report) {
  switch (tc.error_kind) {
    case ErrorKind::space:
      return l1_space_error(report.final_state, exact_at(tc, report.final_state.time));
    case ErrorKind::time: {
      const double x = setup.initial.mesh->center(setup.probe_cell);
      return l1_time_error(report.probe,
                           [&tc, x](double t) { return conserved(tc.exact(x, t)); });
    }
    case ErrorKind::none:
      break;
  }
  throw std::invalid_argument("case '" + tc.name + "' has no reference solution");
}

}  // namespace

RunSummary run_command(const RunConfig& config, std::ostream& log) {
  const ResolvedRun resolved = resolve(config);
  const RunSetup& setup = resolved.setup;
  const TestCase& tc = resolved.test_case;

  RunSummary summary;
  summary.out_dir = config.out_dir;
  fs::create_directories(summary.out_dir);

  log << "case " << tc.name << ", order " << config.order << ", N = " << setup.initial.n_cells()
      << ", t_max = " << format_double(setup.t_max) << '\n';
  const auto start = std::chrono::steady_clock::now();
  const RunReport report = run(setup);
  summary.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  summary.steps = report.steps;
  summary.final_e_inf = report.diagnostics.back().e_inf;

  nlohmann::ordered_json snapshots = nlohmann::ordered_json::array();
  for (const auto& [step, snap] : report.snapshots) {
    const std::string name = "snap_" + std::to_string(step) + ".csv";
    write_file(summary.out_dir / name, [&](std::ostream& os) { write_snapshot_csv(os, snap); });
    summary.snapshot_files.push_back(name);
    snapshots.push_back({{"step", step}, {"t", snap.time}, {"file", name}});
  }
  write_file(summary.out_dir / "diag.csv",
             [&](std::ostream& os) { write_diagnostics_csv(os, report.diagnostics); });
  write_file(summary.out_dir / "probe.csv",
             [&](std::ostream& os) { write_probe_csv(os, report.probe); });

  nlohmann::ordered_json doc;
  nlohmann::ordered_json echo = nlohmann::ordered_json::object();
  for (const auto& [k, v] : config.entries) echo[k] = v;
  doc["config"] = echo;
  doc["resolved"] = {
      {"case", tc.name},
      {"order", config.order},
      {"n_cells", setup.initial.n_cells()},
      {"x_min", tc.x_min},
      {"x_max", tc.x_max},
      {"t_max", setup.t_max},
      {"boundary", boundary_name(setup.bc)},
      {"g", setup.params.g},
      {"f", setup.params.coriolis},
      {"cfl", setup.params.cfl},
      {"eps_cutoff", setup.params.eps_cutoff},
      {"eq_tol", setup.params.eq_tol},
      {"speed_floor", setup.params.speed_floor},
      {"probe_cell", setup.probe_cell},
  };
  doc["wall_time_s"] = summary.wall_seconds;
  doc["steps"] = report.steps;
  doc["final_time"] = report.final_state.time;
  const DiagnosticRow& first = report.diagnostics.front();
  const DiagnosticRow& last = report.diagnostics.back();
  doc["diagnostics"] = {{"file", "diag.csv"},
                        {"rows", report.diagnostics.size()},
                        {"E_inf_initial", first.e_inf},
                        {"E_inf_final", last.e_inf},
                        {"mass_initial", first.mass},
                        {"mass_final", last.mass}};
  doc["probe"] = {{"file", "probe.csv"},
                  {"cell", setup.probe_cell},
                  {"x", setup.initial.mesh->center(setup.probe_cell)}};
  if (tc.error_kind != ErrorKind::none) {
    const VariableErrors e = score(tc, setup, report);
    doc["l1_error"] = {{"kind", tc.error_kind == ErrorKind::space ? "space" : "time"},
                       {"h", e.h},
                       {"hu", e.hu},
                       {"hv", e.hv}};
  }
  doc["snapshots"] = snapshots;
  write_file(summary.out_dir / "report.json",
             [&](std::ostream& os) { os << doc.dump(2) << '\n'; });

  log << report.steps << " steps in " << summary.wall_seconds << " s, final E_inf "
      << format_double(summary.final_e_inf) << ", output in " << summary.out_dir.string() << '\n';
  return summary;
}

void check_doubling(const std::vector<int>& resolutions) {
  if (resolutions.empty()) throw std::invalid_argument("no resolutions given");
  if (resolutions.front() < 2) throw std::invalid_argument("resolutions must be at least 2");
  for (std::size_t k = 1; k < resolutions.size(); ++k) {
    if (resolutions[k] != 2 * resolutions[k - 1]) {
      throw std::invalid_argument("resolutions must double: " + std::to_string(resolutions[k]) +
                                  " does not follow " + std::to_string(resolutions[k - 1]));
    }
  }
}

std::vector<ConvergenceRow> convergence_study(const std::string& case_name, int order,
                                              const std::vector<int>& resolutions) {
  if (order != 1 && order != 2) throw std::invalid_argument("order must be 1 or 2");
  check_doubling(resolutions);
  const TestCase tc = case_by_name(case_name);
  if (tc.error_kind == ErrorKind::none) {
    throw std::invalid_argument("case '" + case_name + "' has no reference solution");
  }
  std::vector<ConvergenceRow> rows;
  for (int n : resolutions) {
    RunSetup setup;
    setup.initial = initial_snapshot(tc, n);
    setup.bc = boundary_for(tc, *setup.initial.mesh);
    setup.params = case_params(tc);
    setup.order = order == 2 ? SchemeOrder::second : SchemeOrder::first;
    setup.t_max = tc.t_max;
    const RunReport report = run(setup);
    rows.push_back({n, score(tc, setup, report)});
  }
  return rows;
}

fs::path convergence_command(const std::string& case_name, int order,
                             const std::vector<int>& resolutions, const fs::path& out_dir,
                             std::ostream& log) {
  const auto rows = convergence_study(case_name, order, resolutions);
  fs::create_directories(out_dir);
  const fs::path path =
      out_dir / ("convergence_" + case_name + "_order" + std::to_string(order) + ".csv");
  write_file(path, [&](std::ostream& os) { write_convergence_csv(os, rows); });
  write_convergence_csv(log, rows);
  return path;
}

void list_cases(std::ostream& os) {
  for (const auto& name : case_names()) {
    const TestCase tc = case_by_name(name);
    os << name << "  [" << format_double(tc.x_min) << ", " << format_double(tc.x_max)
       << "]  N=" << tc.n_cells << "  g=" << format_double(tc.g)
       << "  f=" << format_double(tc.coriolis) << "  t_max=" << format_double(tc.t_max) << '\n';
  }
}

}  // namespace rsw
