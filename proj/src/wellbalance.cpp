#include "rsw/wellbalance.hpp"

#include <cmath>

namespace rsw {

namespace {

constexpr double kCriticalFroudeTol = 1e-14;

}  // namespace

double steady_indicator(const InterfaceData& iface, double g, double coriolis) {
  const State& wl = iface.left.w;
  const State& wr = iface.right.w;
  const double ul = wl.hu / wl.h;
  const double ur = wr.hu / wr.h;
  const double vl = wl.hv / wl.h;
  const double vr = wr.hv / wr.h;
  const double fd = coriolis * iface.d;

  const double discharge_jump = wr.hu - wl.hu;
  const double bernoulli_jump = (0.5 * ur * ur + g * (wr.h + iface.right.z)) -
                                (0.5 * ul * ul + g * (wl.h + iface.left.z));
  const double bernoulli = bernoulli_jump - fd * 0.5 * (vl + vr);
  const double transverse = 0.5 * (wl.hu + wr.hu) * ((vr - vl) + fd);
  return std::sqrt(discharge_jump * discharge_jump + bernoulli * bernoulli +
                   transverse * transverse);
}

bool is_local_steady(const InterfaceData& iface, double g, double coriolis, double eq_tol) {
  return steady_indicator(iface, g, coriolis) <= eq_tol;
}

double discrete_froude(const State& left, const State& right, double g) {
  const double ul = left.hu / left.h;
  const double ur = right.hu / right.h;
  const double hbar = 0.5 * (left.h + right.h);
  return hbar * std::abs(ul * ur) / (g * left.h * right.h);
}

double source_hu_given_indicator(const InterfaceData& iface, double g, double coriolis,
                                 double indicator_eff) {
  const State& wl = iface.left.w;
  const State& wr = iface.right.w;
  const double hbar = 0.5 * (wl.h + wr.h);
  const double h_jump = wr.h - wl.h;
  const double froude = discrete_froude(wl, wr, g);

  if (indicator_eff == 0.0 && std::abs(froude - 1.0) <= kCriticalFroudeTol) {
    return g * h_jump * h_jump * h_jump / (4.0 * hbar);
  }

  const double vbar = 0.5 * (wl.hv / wl.h + wr.hv / wr.h);
  const double z_jump = iface.right.z - iface.left.z;
  const double fdv = iface.d * coriolis * vbar;
  const double forcing = fdv / g - z_jump;
  const double one_minus_fr = 1.0 - froude;
  return fdv * hbar - g * hbar * z_jump +
         (g * froude * h_jump) / (4.0 * hbar) * forcing * forcing /
             (one_minus_fr * one_minus_fr + indicator_eff);
}

double source_hu(const InterfaceData& iface, double g, double coriolis, double eq_tol) {
  const double e = effective_indicator(steady_indicator(iface, g, coriolis), eq_tol);
  return source_hu_given_indicator(iface, g, coriolis, e);
}

double source_hv(const InterfaceData& iface, double coriolis) {
  const double q_tilde = 0.5 * (iface.left.w.hu + iface.right.w.hu);
  return -iface.d * coriolis * q_tilde;
}

SourceTerm numerical_source(const InterfaceData& iface, const SolverParams& params) {
  return {0.0, source_hu(iface, params.g, params.coriolis, params.eq_tol),
          source_hv(iface, params.coriolis)};
}

}  // namespace rsw
