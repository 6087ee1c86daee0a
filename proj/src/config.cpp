#include "rsw/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>

#include "rsw/output.hpp"

namespace rsw {

namespace {

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : ", ") + s;
  return out;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

int parse_int(std::string_view text) {
  int value = 0;
  const char* end = text.data() + text.size();
  const auto res = std::from_chars(text.data(), end, value);
  if (text.empty() || res.ec != std::errc{} || res.ptr != end) {
    throw std::invalid_argument("expected an integer, got '" + std::string(text) + "'");
  }
  return value;
}

double parse_number(std::string_view text) {
  const double value = parse_double(text);
  if (!std::isfinite(value)) {
    throw std::invalid_argument("expected a finite number, got '" + std::string(text) + "'");
  }
  return value;
}

using Setter = std::function<void(RunConfig&, std::string_view)>;

const std::map<std::string, Setter, std::less<>>& setters() {
  static const std::map<std::string, Setter, std::less<>> table = {
      {"case", [](RunConfig& c, std::string_view v) { c.case_name = std::string(v); }},
      {"order", [](RunConfig& c, std::string_view v) { c.order = parse_int(v); }},
      {"n_cells", [](RunConfig& c, std::string_view v) { c.n_cells = parse_int(v); }},
      {"t_max", [](RunConfig& c, std::string_view v) { c.t_max = parse_number(v); }},
      {"cfl", [](RunConfig& c, std::string_view v) { c.cfl = parse_number(v); }},
      {"out_dir", [](RunConfig& c, std::string_view v) { c.out_dir = std::string(v); }},
      {"snapshot_every", [](RunConfig& c, std::string_view v) { c.snapshot_every = parse_int(v); }},
      {"snapshot_interval",
       [](RunConfig& c, std::string_view v) { c.snapshot_interval = parse_number(v); }},
      {"probe_cell", [](RunConfig& c, std::string_view v) { c.probe_cell = parse_int(v); }},
      {"g", [](RunConfig& c, std::string_view v) { c.g = parse_number(v); }},
      {"f", [](RunConfig& c, std::string_view v) { c.coriolis = parse_number(v); }},
      {"eps_cutoff", [](RunConfig& c, std::string_view v) { c.eps_cutoff = parse_number(v); }},
      {"eq_tol", [](RunConfig& c, std::string_view v) { c.eq_tol = parse_number(v); }},
      {"speed_floor", [](RunConfig& c, std::string_view v) { c.speed_floor = parse_number(v); }},
      {"x_min", [](RunConfig& c, std::string_view v) { c.x_min = parse_number(v); }},
      {"x_max", [](RunConfig& c, std::string_view v) { c.x_max = parse_number(v); }},
      {"bc", [](RunConfig& c, std::string_view v) { c.bc = std::string(v); }},
      {"ic", [](RunConfig& c, std::string_view v) { c.ic = std::string(v); }},
      {"q_in", [](RunConfig& c, std::string_view v) { c.q_in = parse_number(v); }},
      {"h_out", [](RunConfig& c, std::string_view v) { c.h_out = parse_number(v); }},
  };
  return table;
}

bool is_custom_key(std::string_view key) {
  return key == "x_min" || key == "x_max" || key == "bc" || key == "ic" || key == "q_in" ||
         key == "h_out";
}

TestCase custom_case(const RunConfig& c) {
  auto require = [](const auto& opt, const char* key) {
    if (!opt) throw std::invalid_argument(std::string("case=custom requires key '") + key + "'");
    return *opt;
  };
  TestCase tc;
  tc.name = "custom";
  tc.x_min = require(c.x_min, "x_min");
  tc.x_max = require(c.x_max, "x_max");
  if (!(tc.x_max > tc.x_min)) throw std::invalid_argument("x_max must exceed x_min");
  tc.g = c.g.value_or(1.0);
  tc.coriolis = c.coriolis.value_or(0.0);
  tc.t_max = 1.0;

  const double mid = 0.5 * (tc.x_min + tc.x_max);
  const double width = 0.1 * (tc.x_max - tc.x_min);
  const std::string ic = require(c.ic, "ic");
  if (ic == "dam_break") {
    tc.topography = [](double) { return 0.0; };
    tc.initial = [mid](double x) -> Primitive { return {x < mid ? 2.0 : 1.0, 0.0, 0.0}; };
  } else if (ic == "lake_at_rest") {
    tc.topography = [mid, width](double x) {
      const double s = (x - mid) / width;
      return 0.2 * std::exp(-s * s);
    };
    tc.initial = [topo = tc.topography](double x) -> Primitive { return {1.0 - topo(x), 0.0, 0.0}; };
  } else if (ic == "uniform") {
    tc.topography = [](double) { return 0.0; };
    tc.initial = [](double) -> Primitive { return {1.0, 1.0, 1.0}; };
  } else {
    throw std::invalid_argument("unknown ic '" + ic + "' (valid: " + join(custom_ic_names()) + ")");
  }

  const std::string bc = require(c.bc, "bc");
  if (bc == "periodic") {
    tc.boundary = BoundaryKind::periodic;
  } else if (bc == "transmissive") {
    tc.boundary = BoundaryKind::transmissive;
  } else if (bc == "bump_inflow_outflow") {
    tc.boundary = BoundaryKind::bump_inflow_outflow;
    tc.q_in = require(c.q_in, "q_in");
    tc.h_out = require(c.h_out, "h_out");
    if (!(tc.q_in > 0.0) || !(tc.h_out > 0.0)) {
      throw std::invalid_argument("q_in and h_out must be positive");
    }
  } else {
    throw std::invalid_argument("unknown bc '" + bc + "' (valid: " + join(custom_bc_names()) + ")");
  }
  return tc;
}

}  // namespace

std::vector<std::string> config_keys() {
  std::vector<std::string> keys;
  for (const auto& [k, _] : setters()) keys.push_back(k);
  return keys;
}

std::vector<std::string> custom_bc_names() {
  return {"periodic", "transmissive", "bump_inflow_outflow"};
}

std::vector<std::string> custom_ic_names() { return {"dam_break", "lake_at_rest", "uniform"}; }

RunConfig parse_config(std::string_view text) {
  RunConfig config;
  std::map<std::string, int, std::less<>> seen;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const std::string where = "line " + std::to_string(line_no) + ": ";
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw std::invalid_argument(where + "expected key=value, got '" + std::string(line) + "'");
    }
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    const auto it = setters().find(key);
    if (it == setters().end()) {
      throw std::invalid_argument(where + "unknown key '" + std::string(key) +
                                  "' (valid: " + join(config_keys()) + ")");
    }
    if (const auto prev = seen.find(key); prev != seen.end()) {
      throw std::invalid_argument(where + "key '" + std::string(key) + "' already set on line " +
                                  std::to_string(prev->second));
    }
    seen.emplace(std::string(key), line_no);
    try {
      it->second(config, value);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(where + "key '" + std::string(key) + "': " + e.what());
    }
    config.entries.emplace_back(std::string(key), std::string(value));
  }

  if (config.case_name.empty()) {
    throw std::invalid_argument("missing key 'case' (valid: " + join(case_names()) + ", custom)");
  }
  const auto names = case_names();
  const bool builtin = std::find(names.begin(), names.end(), config.case_name) != names.end();
  if (!builtin && config.case_name != "custom") {
    throw std::invalid_argument("key 'case': unknown value '" + config.case_name +
                                "' (valid: " + join(names) + ", custom)");
  }
  if (builtin) {
    for (const auto& [key, _] : config.entries) {
      if (is_custom_key(key)) {
        throw std::invalid_argument("key '" + key + "' only applies to case=custom");
      }
    }
  }
  if (config.order != 1 && config.order != 2) {
    throw std::invalid_argument("key 'order': must be 1 or 2, got " + std::to_string(config.order));
  }
  if (config.n_cells && *config.n_cells < 2) {
    throw std::invalid_argument("key 'n_cells': must be at least 2");
  }
  if (config.t_max && *config.t_max < 0.0) throw std::invalid_argument("key 't_max': must be >= 0");
  if (config.snapshot_every && *config.snapshot_every <= 0) {
    throw std::invalid_argument("key 'snapshot_every': must be positive");
  }
  if (config.snapshot_interval && !(*config.snapshot_interval > 0.0)) {
    throw std::invalid_argument("key 'snapshot_interval': must be positive");
  }
  if (config.snapshot_every && config.snapshot_interval) {
    throw std::invalid_argument("set at most one of 'snapshot_every' and 'snapshot_interval'");
  }
  if (config.out_dir.empty()) throw std::invalid_argument("key 'out_dir': must not be empty");
  return config;
}

ResolvedRun resolve(const RunConfig& config) {
  ResolvedRun out;
  out.test_case = config.case_name == "custom"
                      ? custom_case(config)
                      : case_by_name(config.case_name, config.g, config.coriolis);
  const TestCase& tc = out.test_case;

  RunSetup& s = out.setup;
  s.params = case_params(tc);
  if (config.cfl) s.params.cfl = *config.cfl;
  if (config.eps_cutoff) s.params.eps_cutoff = *config.eps_cutoff;
  if (config.eq_tol) s.params.eq_tol = *config.eq_tol;
  if (config.speed_floor) s.params.speed_floor = *config.speed_floor;
  s.params.validate();

  const int n = config.n_cells.value_or(tc.n_cells);
  s.initial = initial_snapshot(tc, n);
  s.bc = boundary_for(tc, *s.initial.mesh);
  s.order = config.order == 2 ? SchemeOrder::second : SchemeOrder::first;
  s.t_max = config.t_max.value_or(tc.t_max);
  s.snapshot_every = config.snapshot_every.value_or(0);
  s.snapshot_interval = config.snapshot_interval.value_or(0.0);
  s.probe_cell = config.probe_cell.value_or(0);
  if (s.probe_cell < 0 || s.probe_cell >= n) {
    throw std::invalid_argument("key 'probe_cell': must lie in [0, " + std::to_string(n - 1) + "]");
  }
  return out;
}

}  // namespace rsw
