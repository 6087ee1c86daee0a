#pragma once

#include "rsw/core.hpp"

namespace rsw {

/// Left/right data at one interface. `d` is the length parameter used inside
/// the source and solver formulas; it equals the cell width for the
/// first-order scheme and a fraction of it for the second-order one.
struct InterfaceData {
  ExtendedState left;
  ExtendedState right;
  double d = 0.0;
};

struct SourceTerm {
  double s_h = 0.0;
  double s_hu = 0.0;
  double s_hv = 0.0;

  State as_state() const { return {s_h, s_hu, s_hv}; }
};

/// Local steady state indicator
///   sqrt([hu]^2 + ([u^2/2 + g(h+z)] - d f vbar)^2 + (mean(hu) ([v] + f d))^2).
/// Vanishes exactly on pairs satisfying the discrete steady relations.
double steady_indicator(const InterfaceData& iface, double g, double coriolis);

bool is_local_steady(const InterfaceData& iface, double g, double coriolis, double eq_tol);

/// Indicator values at or below eq_tol are treated as exact zeros.
inline double effective_indicator(double indicator, double eq_tol) {
  return indicator <= eq_tol ? 0.0 : indicator;
}

/// Fr = hbar |u_L u_R| / (g h_L h_R).
double discrete_froude(const State& left, const State& right, double g);

/// Momentum source S^hu. Uses the regularized general branch unless the pair
/// is critical (|Fr - 1| <= 1e-14) and steady (indicator <= eq_tol), where the
/// limit g [h]^3 / (4 hbar) is taken.
double source_hu(const InterfaceData& iface, double g, double coriolis, double eq_tol);

/// Same as source_hu with the (already eq_tol-filtered) indicator supplied.
double source_hu_given_indicator(const InterfaceData& iface, double g, double coriolis,
                                 double indicator_eff);

/// S^hv = -d f qtilde with qtilde = mean(hu).
double source_hv(const InterfaceData& iface, double coriolis);

SourceTerm numerical_source(const InterfaceData& iface, const SolverParams& params);

}  // namespace rsw
