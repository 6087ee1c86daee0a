#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <memory>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "rsw/core.hpp"

namespace rsw {

struct FieldSnapshot {
  std::shared_ptr<const Mesh> mesh;
  std::vector<State> states;
  double time = 0.0;

  int n_cells() const { return static_cast<int>(states.size()); }
  ExtendedState extended(int i) const { return {states[i], mesh->z()[i]}; }
};

struct Periodic {};
struct Transmissive {};
/// Inflow discharge on the left with zero transverse velocity, imposed
/// height on the right. The right ghost keeps the interior discharge and
/// continues v with the steady jump v_ghost = v_N - f dx.
struct BumpInflowOutflow {
  double q_in = 0.0;
  double h_out = 0.0;
};
/// Ghost cells pinned to given states, e.g. an exact steady profile sampled
/// one cell outside the domain.
struct FixedGhosts {
  ExtendedState left;
  ExtendedState right;
};

using BoundaryCondition = std::variant<Periodic, Transmissive, BumpInflowOutflow, FixedGhosts>;

std::string boundary_name(const BoundaryCondition& bc);

enum class SchemeOrder { first = 1, second = 2 };

class AdmissibilityError : public std::runtime_error {
 public:
  AdmissibilityError(int cell, double time, const State& w);
  int cell() const { return cell_; }
  double time() const { return time_; }

 private:
  int cell_;
  double time_;
};

struct Ghosts {
  ExtendedState left;
  ExtendedState right;
};

Ghosts ghost_states(const FieldSnapshot& snapshot, const BoundaryCondition& bc,
                    double coriolis);

/// Interface states and per-cell detector values. Arrays have n_cells + 2
/// entries; index 0 and n_cells + 1 are the ghost cells.
struct Reconstruction {
  std::vector<ExtendedState> minus;
  std::vector<ExtendedState> plus;
  std::vector<double> theta;
};

double minmod(double a, double b);

/// theta(E) = E^2 / (E^2 + dx^2).
double detector_theta(double indicator_sum, double dx);

Reconstruction reconstruct(const FieldSnapshot& snapshot, const BoundaryCondition& bc,
                           const SolverParams& params);

double cfl_dt(const FieldSnapshot& snapshot, const BoundaryCondition& bc,
              const SolverParams& params, SchemeOrder order);

/// One forward-Euler Godunov-type update; `d` is the length parameter handed
/// to the interface solver (d = dx gives the fully well-balanced scheme).
FieldSnapshot first_order_step(const FieldSnapshot& snapshot, const BoundaryCondition& bc,
                               const SolverParams& params, double dt, double d);

FieldSnapshot second_order_space_step(const FieldSnapshot& snapshot, const BoundaryCondition& bc,
                                      const SolverParams& params, double dt);

/// Order 1: one first_order_step with d = dx. Order 2: Heun,
/// w^{n+1} = (w + L(L(w))) / 2 with L the second-order space step.
FieldSnapshot rk2_step(const FieldSnapshot& snapshot, const BoundaryCondition& bc,
                       const SolverParams& params, double dt, SchemeOrder order);

struct TimeStep {
  FieldSnapshot next;
  double dt = 0.0;
};

/// One rk2_step with dt = min(cfl_dt, dt_max). At order 2, if the first stage
/// violates its own CFL bound, dt is retried at that bound (with a growing
/// undershoot on later retries) until it fits, so both stages keep the
/// positivity guarantee with one shared dt.
TimeStep cfl_step(const FieldSnapshot& snapshot, const BoundaryCondition& bc,
                  const SolverParams& params, SchemeOrder order, double dt_max);

struct RunSetup {
  FieldSnapshot initial;
  BoundaryCondition bc = Transmissive{};
  SolverParams params;
  SchemeOrder order = SchemeOrder::first;
  double t_max = 0.0;
  /// Store a snapshot every k steps (0 disables); initial and final are always kept.
  int snapshot_every = 0;
  /// Store a snapshot each time t crosses a multiple of this interval (0 disables).
  double snapshot_interval = 0.0;
  /// Cell whose state is recorded after every step.
  int probe_cell = 0;
  std::size_t max_steps = std::numeric_limits<std::size_t>::max();
};

struct DiagnosticRow {
  std::size_t step = 0;
  double t = 0.0;
  double dt = 0.0;
  double e_inf = 0.0;
  double mass = 0.0;
};

struct ProbeSample {
  double t = 0.0;
  State w;
};

struct RunReport {
  std::vector<DiagnosticRow> diagnostics;
  std::vector<std::pair<std::size_t, FieldSnapshot>> snapshots;
  std::vector<ProbeSample> probe;
  FieldSnapshot final_state;
  std::size_t steps = 0;
};

double total_mass(const FieldSnapshot& snapshot);

/// Advances from the initial time to t_max, the last step clipped to land on
/// t_max. Throws AdmissibilityError if a height becomes non-positive.
RunReport run(const RunSetup& setup);

}  // namespace rsw
