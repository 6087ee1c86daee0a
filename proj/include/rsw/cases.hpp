#pragma once

#include <functional>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "rsw/core.hpp"
#include "rsw/scheme.hpp"

namespace rsw {

enum class BoundaryKind { periodic, transmissive, bump_inflow_outflow, exact_profile };

/// How a case is scored against its reference solution.
enum class ErrorKind {
  none,   // no reference
  space,  // L1 in space at the final time
  time,   // L1 in time at a probe cell
};

struct TestCase {
  std::string name;
  double x_min = 0.0;
  double x_max = 1.0;
  int n_cells = 200;
  double g = 1.0;
  double coriolis = 0.0;
  std::function<double(double)> topography;
  std::function<Primitive(double)> initial;
  BoundaryKind boundary = BoundaryKind::transmissive;
  double q_in = 0.0;   // bump_inflow_outflow only
  double h_out = 0.0;  // bump_inflow_outflow only
  double t_max = 0.0;
  /// Exact solution (x, t) -> (h, u, v), when known.
  std::function<Primitive(double, double)> exact;
  ErrorKind error_kind = ErrorKind::none;
};

/// h = e^{2x}, u = e^{-2x}, v = -f x over
/// z = (-f^2 x^2/2 - e^{-4x}/2)/g - e^{2x}, an exact discrete steady state.
TestCase case_moving_steady(double g = 1.0, double coriolis = 1.0);
/// Geostrophic balance h = 2/g - e^{-x^2}, v = (2g/f) x e^{-x^2}, flat bottom.
TestCase case_geostrophic(double g = 1.0, double coriolis = 10.0);
/// Subcritical inflow over a parabolic bump with rotation.
TestCase case_bump(double g = 9.81, double coriolis = 2.0 * std::numbers::pi / 50.0);
/// Spatially uniform inertial oscillation with a closed-form solution.
TestCase case_uniform_oscillation(double g = 1.0, double coriolis = 1.0);

std::vector<std::string> case_names();
/// Builds a named case, optionally with g and f overridden. Throws
/// std::invalid_argument listing valid names.
TestCase case_by_name(const std::string& name, std::optional<double> g = std::nullopt,
                      std::optional<double> coriolis = std::nullopt);

SolverParams case_params(const TestCase& tc);
Mesh case_mesh(const TestCase& tc, int n_cells);
FieldSnapshot initial_snapshot(const TestCase& tc, int n_cells);
BoundaryCondition boundary_for(const TestCase& tc, const Mesh& mesh);

struct VariableErrors {
  double h = 0.0;
  double hu = 0.0;
  double hv = 0.0;
};

/// dx * sum_i |ref_i - w_i| per conserved variable. Throws on mesh mismatch.
VariableErrors l1_space_error(const FieldSnapshot& snapshot, const FieldSnapshot& reference);
VariableErrors l1_space_error(const FieldSnapshot& snapshot,
                              const std::function<State(double)>& reference);

/// sum_n (t^{n+1} - t^n) |w_ex(t^n) - w^n| over a probe history.
VariableErrors l1_time_error(const std::vector<ProbeSample>& history,
                             const std::function<State(double)>& exact);

/// max over interior adjacent pairs of the steady indicator with d = dx.
double steady_distance(const FieldSnapshot& snapshot, const SolverParams& params);

/// rate_k = log2(e_k / e_{k+1}); throws on fewer than 2 entries or non-positive errors.
std::vector<double> convergence_rates(const std::vector<double>& errors);

}  // namespace rsw
