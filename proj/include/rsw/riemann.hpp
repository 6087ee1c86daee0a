#pragma once

#include "rsw/core.hpp"
#include "rsw/wellbalance.hpp"

namespace rsw {

/// Outer wave speeds of the four-state solver, left < 0 < right.
struct WavePair {
  double left = 0.0;
  double right = 0.0;
};

/// The two states on either side of the stationary discontinuity, plus the
/// quantities they were built from (kept for diagnostics and the scheme).
struct IntermediateStates {
  State star_left;
  State star_right;
  double q_star = 0.0;
  double delta = 0.0;          // cut-off threshold min(eps, h_L, h_R, h_HLL)
  double h_hll = 0.0;
  bool cutoff_applied = false;
  SourceTerm source;           // S(w_L, w_R, d)
  double indicator = 0.0;      // steady indicator after the eq_tol filter
};

/// lambda_L = min(u_L - c_L, u_R - c_R, -floor), lambda_R = max(u_L + c_L, u_R + c_R, floor).
WavePair wave_speeds(const State& left, const State& right, double g, double speed_floor);

/// Mean state of the HLL solver. The height uses the convex-combination form,
/// positive whenever lambda_L < u_L and lambda_R > u_R.
State hll_state(const State& left, const State& right, const WavePair& waves, double g);

IntermediateStates intermediate_states(const InterfaceData& iface, const WavePair& waves,
                                       const SolverParams& params);

/// F = mean f(w) + lambda_R/2 (w*_R - w_R) + lambda_L/2 (w*_L - w_L).
Flux interface_flux(const InterfaceData& iface, const WavePair& waves,
                    const IntermediateStates& stars, double g);

struct InterfaceSolution {
  WavePair waves;
  IntermediateStates stars;
  Flux flux;
};

/// wave_speeds + intermediate_states + interface_flux in one call.
InterfaceSolution solve_interface(const InterfaceData& iface, const SolverParams& params);

}  // namespace rsw
