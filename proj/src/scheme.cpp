#include "rsw/scheme.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "rsw/riemann.hpp"
#include "rsw/wellbalance.hpp"

namespace rsw {

namespace {

std::string admissibility_message(int cell, double time, const State& w) {
  std::ostringstream os;
  os.precision(17);
  os << "inadmissible state in cell " << cell << " at t = " << time << ": (h, hu, hv) = ("
     << w.h << ", " << w.hu << ", " << w.hv << ")";
  return os.str();
}

/// Cell states with one ghost on each side.
std::vector<ExtendedState> extended_states(const FieldSnapshot& snapshot,
                                           const BoundaryCondition& bc,
                                           const SolverParams& params) {
  const int n = snapshot.n_cells();
  std::vector<ExtendedState> ext(n + 2);
  const auto& z = snapshot.mesh->z();
  for (int i = 0; i < n; ++i) ext[i + 1] = {snapshot.states[i], z[i]};
  const Ghosts ghosts = ghost_states(snapshot, bc, params.coriolis);
  ext[0] = ghosts.left;
  ext[n + 1] = ghosts.right;
  return ext;
}

double max_speed(const State& left, const State& right, const SolverParams& params) {
  const WavePair waves = wave_speeds(left, right, params.g, params.speed_floor);
  return std::max(-waves.left, waves.right);
}

/// max(|u|, |v|) + sqrt(g h).
double local_speed(const State& w, double g) {
  return std::max(std::abs(w.hu), std::abs(w.hv)) / w.h + std::sqrt(g * w.h);
}

double order_cfl(const SolverParams& params, SchemeOrder order) {
  return order == SchemeOrder::first ? std::min(params.cfl, 0.5) : std::min(params.cfl, 0.25);
}

void check_admissible(const FieldSnapshot& snapshot) {
  for (int i = 0; i < snapshot.n_cells(); ++i) {
    if (!admissible(snapshot.states[i])) {
      throw AdmissibilityError(i, snapshot.time, snapshot.states[i]);
    }
  }
}

double cfl_dt_first(const std::vector<ExtendedState>& ext, double dx, const SolverParams& params) {
  double speed = 0.0;
  for (std::size_t k = 0; k + 1 < ext.size(); ++k) {
    speed = std::max(speed, max_speed(ext[k].w, ext[k + 1].w, params));
  }
  return order_cfl(params, SchemeOrder::first) * dx / speed;
}

double cfl_dt_second(const Reconstruction& rec, double dx, const SolverParams& params) {
  double speed = 0.0;
  const std::size_t n_ext = rec.plus.size();
  for (std::size_t k = 0; k + 1 < n_ext; ++k) {
    speed = std::max(speed, max_speed(rec.plus[k].w, rec.minus[k + 1].w, params));
  }
  for (std::size_t k = 1; k + 1 < n_ext; ++k) {
    speed = std::max(speed, max_speed(rec.minus[k].w, rec.plus[k].w, params));
  }
  return order_cfl(params, SchemeOrder::second) * dx / speed;
}

Reconstruction reconstruct_extended(const std::vector<ExtendedState>& ext, double dx,
                                    const SolverParams& params, bool periodic) {
  const std::size_t n_ext = ext.size();
  const int n = static_cast<int>(n_ext) - 2;
  Reconstruction rec;
  rec.minus = ext;
  rec.plus = ext;
  rec.theta.assign(n_ext, 0.0);

  std::vector<double> right_indicator(n_ext - 1);
  for (std::size_t k = 0; k + 1 < n_ext; ++k) {
    const double e = steady_indicator({ext[k], ext[k + 1], dx}, params.g, params.coriolis);
    right_indicator[k] = effective_indicator(e, params.eq_tol);
  }

  for (int k = 1; k <= n; ++k) {
    const double theta = detector_theta(right_indicator[k - 1] + right_indicator[k], dx);
    rec.theta[k] = theta;
    if (theta == 0.0) continue;

    const ExtendedState& lo = ext[k - 1];
    const ExtendedState& c = ext[k];
    const ExtendedState& hi = ext[k + 1];
    const double half = 0.5 * theta * dx;
    auto slope = [dx](double a, double b, double cc) { return minmod((b - a) / dx, (cc - b) / dx); };

    double dh = half * slope(lo.w.h, c.w.h, hi.w.h);
    const double floor_h = 0.5 * std::min(c.w.h, params.eps_cutoff);
    if (c.w.h - std::abs(dh) < floor_h) {
      dh *= (c.w.h - floor_h) / std::abs(dh);
    }
    double dhu = half * slope(lo.w.hu, c.w.hu, hi.w.hu);
    double dhv = half * slope(lo.w.hv, c.w.hv, hi.w.hv);
    // Near-dry cells can inherit neighbour momentum slopes that imply huge
    // velocities; flatten the momentum there so wave speeds stay bounded.
    const double bound = std::max({local_speed(lo.w, params.g), local_speed(c.w, params.g),
                                   local_speed(hi.w, params.g)});
    auto too_fast = [&](double dq, double q) {
      return std::abs(q - dq) > bound * (c.w.h - dh) || std::abs(q + dq) > bound * (c.w.h + dh);
    };
    if (too_fast(dhu, c.w.hu)) dhu = 0.0;
    if (too_fast(dhv, c.w.hv)) dhv = 0.0;
    const double dz = half * slope(lo.z, c.z, hi.z);

    rec.minus[k] = {{c.w.h - dh, c.w.hu - dhu, c.w.hv - dhv}, c.z - dz};
    rec.plus[k] = {{c.w.h + dh, c.w.hu + dhu, c.w.hv + dhv}, c.z + dz};
  }

  if (periodic) {
    rec.minus[0] = rec.minus[n];
    rec.plus[0] = rec.plus[n];
    rec.theta[0] = rec.theta[n];
    rec.minus[n + 1] = rec.minus[1];
    rec.plus[n + 1] = rec.plus[1];
    rec.theta[n + 1] = rec.theta[1];
  }
  return rec;
}

FieldSnapshot second_order_from(const FieldSnapshot& snapshot, const Reconstruction& rec,
                                const SolverParams& params, double dt) {
  const int n = snapshot.n_cells();
  const double dx = snapshot.mesh->dx();
  const double ratio = dt / dx;

  FieldSnapshot next{snapshot.mesh, std::vector<State>(n), snapshot.time + dt};
  for (int i = 0; i < n; ++i) {
    const int k = i + 1;
    const double theta = rec.theta[k];
    const double d1 = dx * (1.0 - 0.5 * theta);
    const double d2 = 0.5 * theta * dx;

    const InterfaceData left_iface{rec.plus[k - 1], rec.minus[k], d1};
    const InterfaceData right_iface{rec.plus[k], rec.minus[k + 1], d1};
    const InterfaceSolution left = solve_interface(left_iface, params);
    const InterfaceSolution right = solve_interface(right_iface, params);

    State sources = left.stars.source.as_state() + right.stars.source.as_state();
    if (theta != 0.0) {
      const SourceTerm centered = numerical_source({rec.minus[k], rec.plus[k], d2}, params);
      sources += 2.0 * centered.as_state();
    }
    next.states[i] = snapshot.states[i] - ratio * (right.flux - left.flux) + (0.5 * ratio) * sources;
  }
  check_admissible(next);
  return next;
}

}  // namespace

AdmissibilityError::AdmissibilityError(int cell, double time, const State& w)
    : std::runtime_error(admissibility_message(cell, time, w)), cell_(cell), time_(time) {}

std::string boundary_name(const BoundaryCondition& bc) {
  struct Namer {
    std::string operator()(const Periodic&) const { return "periodic"; }
    std::string operator()(const Transmissive&) const { return "transmissive"; }
    std::string operator()(const BumpInflowOutflow&) const { return "bump_inflow_outflow"; }
    std::string operator()(const FixedGhosts&) const { return "fixed_ghosts"; }
  };
  return std::visit(Namer{}, bc);
}

Ghosts ghost_states(const FieldSnapshot& snapshot, const BoundaryCondition& bc,
                    double coriolis) {
  const int n = snapshot.n_cells();
  if (n < 1) throw std::invalid_argument("ghost_states: empty snapshot");
  const ExtendedState first = snapshot.extended(0);
  const ExtendedState last = snapshot.extended(n - 1);

  struct Visitor {
    const ExtendedState& first;
    const ExtendedState& last;
    double v_step;
    Ghosts operator()(const Periodic&) const { return {last, first}; }
    Ghosts operator()(const Transmissive&) const { return {first, last}; }
    Ghosts operator()(const BumpInflowOutflow& b) const {
      const double v_out = last.w.hv / last.w.h + v_step;
      return {{{first.w.h, b.q_in, 0.0}, first.z},
              {{b.h_out, last.w.hu, b.h_out * v_out}, last.z}};
    }
    Ghosts operator()(const FixedGhosts& f) const { return {f.left, f.right}; }
  };
  return std::visit(Visitor{first, last, -coriolis * snapshot.mesh->dx()}, bc);
}

double minmod(double a, double b) {
  if (a > 0.0 && b > 0.0) return std::min(a, b);
  if (a < 0.0 && b < 0.0) return std::max(a, b);
  return 0.0;
}

double detector_theta(double indicator_sum, double dx) {
  const double e2 = indicator_sum * indicator_sum;
  return e2 / (e2 + dx * dx);
}

Reconstruction reconstruct(const FieldSnapshot& snapshot, const BoundaryCondition& bc,
                           const SolverParams& params) {
  return reconstruct_extended(extended_states(snapshot, bc, params), snapshot.mesh->dx(), params,
                              std::holds_alternative<Periodic>(bc));
}

double cfl_dt(const FieldSnapshot& snapshot, const BoundaryCondition& bc,
              const SolverParams& params, SchemeOrder order) {
  const double dx = snapshot.mesh->dx();
  if (order == SchemeOrder::first) {
    return cfl_dt_first(extended_states(snapshot, bc, params), dx, params);
  }
  return cfl_dt_second(reconstruct(snapshot, bc, params), dx, params);
}

FieldSnapshot first_order_step(const FieldSnapshot& snapshot, const BoundaryCondition& bc,
                               const SolverParams& params, double dt, double d) {
  const int n = snapshot.n_cells();
  const double ratio = dt / snapshot.mesh->dx();
  const std::vector<ExtendedState> ext = extended_states(snapshot, bc, params);

  std::vector<Flux> flux(n + 1);
  std::vector<State> source(n + 1);
  for (int k = 0; k <= n; ++k) {
    const InterfaceSolution sol = solve_interface({ext[k], ext[k + 1], d}, params);
    flux[k] = sol.flux;
    source[k] = sol.stars.source.as_state();
  }

  FieldSnapshot next{snapshot.mesh, std::vector<State>(n), snapshot.time + dt};
  for (int i = 0; i < n; ++i) {
    next.states[i] = snapshot.states[i] - ratio * (flux[i + 1] - flux[i]) +
                     (0.5 * ratio) * (source[i] + source[i + 1]);
  }
  check_admissible(next);
  return next;
}

FieldSnapshot second_order_space_step(const FieldSnapshot& snapshot, const BoundaryCondition& bc,
                                      const SolverParams& params, double dt) {
  return second_order_from(snapshot, reconstruct(snapshot, bc, params), params, dt);
}

namespace {

FieldSnapshot heun_finish(const FieldSnapshot& snapshot, const FieldSnapshot& stage1,
                          const BoundaryCondition& bc, const SolverParams& params, double dt) {
  const FieldSnapshot stage2 = second_order_space_step(stage1, bc, params, dt);
  FieldSnapshot next{snapshot.mesh, std::vector<State>(snapshot.n_cells()), snapshot.time + dt};
  for (int i = 0; i < snapshot.n_cells(); ++i) {
    next.states[i] = 0.5 * (snapshot.states[i] + stage2.states[i]);
  }
  check_admissible(next);
  return next;
}

}  // namespace

FieldSnapshot rk2_step(const FieldSnapshot& snapshot, const BoundaryCondition& bc,
                       const SolverParams& params, double dt, SchemeOrder order) {
  if (order == SchemeOrder::first) {
    return first_order_step(snapshot, bc, params, dt, snapshot.mesh->dx());
  }
  return heun_finish(snapshot, second_order_space_step(snapshot, bc, params, dt), bc, params, dt);
}

TimeStep cfl_step(const FieldSnapshot& snapshot, const BoundaryCondition& bc,
                  const SolverParams& params, SchemeOrder order, double dt_max) {
  double dt = std::min(cfl_dt(snapshot, bc, params, order), dt_max);
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw std::runtime_error("invalid time step " + std::to_string(dt) + " at t = " +
                             std::to_string(snapshot.time));
  }
  if (order == SchemeOrder::first) {
    return {first_order_step(snapshot, bc, params, dt, snapshot.mesh->dx()), dt};
  }
  for (int attempt = 0; attempt < 50; ++attempt) {
    FieldSnapshot stage1 = second_order_space_step(snapshot, bc, params, dt);
    const double dt_stage = cfl_dt(stage1, bc, params, order);
    if (dt <= dt_stage) return {heun_finish(snapshot, stage1, bc, params, dt), dt};
    // Retry at the stage bound first; it can approach its fixed point from
    // above, so later retries undershoot progressively.
    dt = dt_stage * std::max(0.5, 1.0 - 0.05 * attempt);
  }
  throw std::runtime_error("time step did not settle under the stage CFL bound at t = " +
                           std::to_string(snapshot.time));
}

double total_mass(const FieldSnapshot& snapshot) {
  double sum = 0.0;
  for (const State& w : snapshot.states) sum += w.h;
  return sum * snapshot.mesh->dx();
}

}  // namespace rsw
