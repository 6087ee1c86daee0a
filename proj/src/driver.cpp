#include <cmath>
#include <stdexcept>

#include "rsw/cases.hpp"
#include "rsw/scheme.hpp"

namespace rsw {

RunReport run(const RunSetup& setup) {
  setup.params.validate();
  const FieldSnapshot& initial = setup.initial;
  if (!initial.mesh || initial.n_cells() != initial.mesh->n_cells()) {
    throw std::invalid_argument("run: snapshot does not match its mesh");
  }
  if (initial.n_cells() < 2) throw std::invalid_argument("run: need at least 2 cells");
  if (!(setup.t_max >= initial.time)) throw std::invalid_argument("run: t_max before start time");
  if (setup.probe_cell < 0 || setup.probe_cell >= initial.n_cells()) {
    throw std::invalid_argument("run: probe_cell out of range");
  }

  RunReport report;
  auto record = [&](const FieldSnapshot& snap, std::size_t step, double dt) {
    report.diagnostics.push_back(
        {step, snap.time, dt, steady_distance(snap, setup.params), total_mass(snap)});
    report.probe.push_back({snap.time, snap.states[setup.probe_cell]});
  };

  FieldSnapshot current = initial;
  for (int i = 0; i < current.n_cells(); ++i) {
    if (!admissible(current.states[i])) throw AdmissibilityError(i, current.time, current.states[i]);
  }
  record(current, 0, 0.0);
  report.snapshots.emplace_back(0, current);

  std::size_t step = 0;
  double next_mark = setup.snapshot_interval > 0.0 ? current.time + setup.snapshot_interval : 0.0;
  while (current.time < setup.t_max) {
    if (step >= setup.max_steps) {
      throw std::runtime_error("run: step budget of " + std::to_string(setup.max_steps) +
                               " exhausted at t = " + std::to_string(current.time));
    }
    const double remaining = setup.t_max - current.time;
    TimeStep ts = cfl_step(current, setup.bc, setup.params, setup.order, remaining);
    const double dt = ts.dt;
    const bool last = dt >= remaining;
    current = std::move(ts.next);
    if (last) current.time = setup.t_max;
    ++step;
    record(current, step, dt);

    bool keep = false;
    if (setup.snapshot_every > 0 && step % static_cast<std::size_t>(setup.snapshot_every) == 0) {
      keep = true;
    }
    if (setup.snapshot_interval > 0.0 && current.time >= next_mark) {
      keep = true;
      while (next_mark <= current.time) next_mark += setup.snapshot_interval;
    }
    if (keep && !last) report.snapshots.emplace_back(step, current);
  }
  if (step > 0) report.snapshots.emplace_back(step, current);

  report.steps = step;
  report.final_state = std::move(current);
  return report;
}

}  // namespace rsw
