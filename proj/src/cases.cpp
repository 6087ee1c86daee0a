#include "rsw/cases.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rsw/wellbalance.hpp"

namespace rsw {

TestCase case_moving_steady(double g, double coriolis) {
  TestCase tc;
  tc.name = "moving_steady";
  tc.x_min = 0.0;
  tc.x_max = 1.0;
  tc.n_cells = 200;
  tc.g = g;
  tc.coriolis = coriolis;
  const double f = coriolis;
  tc.topography = [g, f](double x) {
    return (-0.5 * f * f * x * x - 0.5 * std::exp(-4.0 * x)) / g - std::exp(2.0 * x);
  };
  tc.initial = [f](double x) -> Primitive {
    return {std::exp(2.0 * x), std::exp(-2.0 * x), -f * x};
  };
  tc.exact = [init = tc.initial](double x, double) { return init(x); };
  tc.boundary = BoundaryKind::exact_profile;
  tc.t_max = 0.5;
  tc.error_kind = ErrorKind::space;
  return tc;
}

TestCase case_geostrophic(double g_value, double coriolis) {
  TestCase tc;
  tc.name = "geostrophic";
  tc.x_min = -5.0;
  tc.x_max = 5.0;
  tc.n_cells = 200;
  tc.g = g_value;
  tc.coriolis = coriolis;
  const double g = tc.g;
  const double f = tc.coriolis;
  tc.topography = [](double) { return 0.0; };
  tc.initial = [g, f](double x) -> Primitive {
    const double bell = std::exp(-x * x);
    return {2.0 / g - bell, 0.0, 2.0 * g / f * x * bell};
  };
  tc.exact = [init = tc.initial](double x, double) { return init(x); };
  tc.boundary = BoundaryKind::transmissive;
  tc.t_max = 200.0;
  tc.error_kind = ErrorKind::space;
  return tc;
}

TestCase case_bump(double g, double coriolis) {
  TestCase tc;
  tc.name = "bump";
  tc.x_min = 0.0;
  tc.x_max = 25.0;
  tc.n_cells = 200;
  tc.g = g;
  tc.coriolis = coriolis;
  tc.topography = [](double x) {
    return (8.0 < x && x < 12.0) ? 0.2 - 0.05 * (x - 10.0) * (x - 10.0) : 0.0;
  };
  tc.initial = [](double) -> Primitive { return {0.33, 0.18 / 0.33, 0.0}; };
  tc.boundary = BoundaryKind::bump_inflow_outflow;
  tc.q_in = 0.18;
  tc.h_out = 0.33;
  tc.t_max = 200.0;
  tc.error_kind = ErrorKind::none;
  return tc;
}

TestCase case_uniform_oscillation(double g, double coriolis) {
  TestCase tc;
  tc.name = "uniform_oscillation";
  tc.x_min = 0.0;
  tc.x_max = 1.0;
  tc.n_cells = 200;
  tc.g = g;
  tc.coriolis = coriolis;
  const double h0 = 1.0, u0 = 1.0, v0 = 1.0;
  const double f = tc.coriolis;
  tc.topography = [](double) { return 0.0; };
  tc.initial = [=](double) -> Primitive { return {h0, u0, v0}; };
  tc.exact = [=](double, double t) -> Primitive {
    const double c = std::cos(f * t);
    const double s = std::sin(f * t);
    return {h0, u0 * c + v0 * s, v0 * c - u0 * s};
  };
  tc.boundary = BoundaryKind::periodic;
  tc.t_max = 1.0;
  tc.error_kind = ErrorKind::time;
  return tc;
}

std::vector<std::string> case_names() {
  return {"moving_steady", "geostrophic", "bump", "uniform_oscillation"};
}

TestCase case_by_name(const std::string& name, std::optional<double> g,
                      std::optional<double> coriolis) {
  if (name == "moving_steady") return case_moving_steady(g.value_or(1.0), coriolis.value_or(1.0));
  if (name == "geostrophic") return case_geostrophic(g.value_or(1.0), coriolis.value_or(10.0));
  if (name == "bump") {
    return case_bump(g.value_or(9.81), coriolis.value_or(2.0 * std::numbers::pi / 50.0));
  }
  if (name == "uniform_oscillation") {
    return case_uniform_oscillation(g.value_or(1.0), coriolis.value_or(1.0));
  }
  std::string valid;
  for (const auto& n : case_names()) valid += (valid.empty() ? "" : ", ") + n;
  throw std::invalid_argument("unknown case '" + name + "' (valid: " + valid + ")");
}

SolverParams case_params(const TestCase& tc) {
  SolverParams p;
  p.g = tc.g;
  p.coriolis = tc.coriolis;
  return p;
}

Mesh case_mesh(const TestCase& tc, int n_cells) {
  return build_mesh(tc.x_min, tc.x_max, n_cells, tc.topography);
}

FieldSnapshot initial_snapshot(const TestCase& tc, int n_cells) {
  auto mesh = std::make_shared<const Mesh>(case_mesh(tc, n_cells));
  FieldSnapshot snap{mesh, std::vector<State>(n_cells), 0.0};
  for (int i = 0; i < n_cells; ++i) {
    snap.states[i] = conserved(tc.initial(mesh->center(i)));
    if (!admissible(snap.states[i])) {
      throw std::invalid_argument("initial condition of case '" + tc.name +
                                  "' is inadmissible at x = " + std::to_string(mesh->center(i)));
    }
  }
  return snap;
}

BoundaryCondition boundary_for(const TestCase& tc, const Mesh& mesh) {
  switch (tc.boundary) {
    case BoundaryKind::periodic:
      return Periodic{};
    case BoundaryKind::transmissive:
      return Transmissive{};
    case BoundaryKind::bump_inflow_outflow:
      return BumpInflowOutflow{tc.q_in, tc.h_out};
    case BoundaryKind::exact_profile: {
      const double xl = mesh.x_min() - 0.5 * mesh.dx();
      const double xr = mesh.x_max() + 0.5 * mesh.dx();
      return FixedGhosts{{conserved(tc.initial(xl)), tc.topography(xl)},
                         {conserved(tc.initial(xr)), tc.topography(xr)}};
    }
  }
  throw std::logic_error("boundary_for: unhandled boundary kind");
}

VariableErrors l1_space_error(const FieldSnapshot& snapshot, const FieldSnapshot& reference) {
  const Mesh& a = *snapshot.mesh;
  const Mesh& b = *reference.mesh;
  if (snapshot.n_cells() != reference.n_cells() || a.x_min() != b.x_min() ||
      a.x_max() != b.x_max()) {
    throw std::invalid_argument("l1_space_error: mesh mismatch");
  }
  VariableErrors e;
  for (int i = 0; i < snapshot.n_cells(); ++i) {
    const State diff = reference.states[i] - snapshot.states[i];
    e.h += std::abs(diff.h);
    e.hu += std::abs(diff.hu);
    e.hv += std::abs(diff.hv);
  }
  e.h *= a.dx();
  e.hu *= a.dx();
  e.hv *= a.dx();
  return e;
}

VariableErrors l1_space_error(const FieldSnapshot& snapshot,
                              const std::function<State(double)>& reference) {
  FieldSnapshot ref{snapshot.mesh, std::vector<State>(snapshot.n_cells()), snapshot.time};
  for (int i = 0; i < snapshot.n_cells(); ++i) ref.states[i] = reference(snapshot.mesh->center(i));
  return l1_space_error(snapshot, ref);
}

VariableErrors l1_time_error(const std::vector<ProbeSample>& history,
                             const std::function<State(double)>& exact) {
  if (history.empty()) throw std::invalid_argument("l1_time_error: empty history");
  VariableErrors e;
  for (std::size_t n = 0; n + 1 < history.size(); ++n) {
    const double span = history[n + 1].t - history[n].t;
    const State diff = exact(history[n].t) - history[n].w;
    e.h += span * std::abs(diff.h);
    e.hu += span * std::abs(diff.hu);
    e.hv += span * std::abs(diff.hv);
  }
  return e;
}

double steady_distance(const FieldSnapshot& snapshot, const SolverParams& params) {
  const int n = snapshot.n_cells();
  if (n < 2) throw std::invalid_argument("steady_distance: need at least 2 cells");
  const double dx = snapshot.mesh->dx();
  double worst = 0.0;
  for (int i = 0; i + 1 < n; ++i) {
    worst = std::max(worst, steady_indicator({snapshot.extended(i), snapshot.extended(i + 1), dx},
                                             params.g, params.coriolis));
  }
  return worst;
}

std::vector<double> convergence_rates(const std::vector<double>& errors) {
  if (errors.size() < 2) throw std::invalid_argument("convergence_rates: need >= 2 errors");
  std::vector<double> rates;
  for (std::size_t k = 0; k + 1 < errors.size(); ++k) {
    if (!(errors[k] > 0.0) || !(errors[k + 1] > 0.0)) {
      throw std::invalid_argument("convergence_rates: errors must be positive");
    }
    rates.push_back(std::log2(errors[k] / errors[k + 1]));
  }
  return rates;
}

}  // namespace rsw
