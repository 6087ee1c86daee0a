#include "rsw/riemann.hpp"

#include <algorithm>
#include <cmath>

namespace rsw {

WavePair wave_speeds(const State& left, const State& right, double g, double speed_floor) {
  const double ul = left.hu / left.h;
  const double ur = right.hu / right.h;
  const double cl = std::sqrt(g * left.h);
  const double cr = std::sqrt(g * right.h);
  return {std::min({ul - cl, ur - cr, -speed_floor}),
          std::max({ul + cl, ur + cr, speed_floor})};
}

State hll_state(const State& left, const State& right, const WavePair& waves, double g) {
  const double width = waves.right - waves.left;
  const Flux fl = physical_flux(left, g);
  const Flux fr = physical_flux(right, g);
  const double ul = left.hu / left.h;
  const double ur = right.hu / right.h;
  State mean;
  mean.h = ((ul - waves.left) * left.h + (waves.right - ur) * right.h) / width;
  mean.hu = (waves.right * right.hu - waves.left * left.hu - (fr.hu - fl.hu)) / width;
  mean.hv = (waves.right * right.hv - waves.left * left.hv - (fr.hv - fl.hv)) / width;
  return mean;
}

IntermediateStates intermediate_states(const InterfaceData& iface, const WavePair& waves,
                                       const SolverParams& params) {
  const State& wl = iface.left.w;
  const State& wr = iface.right.w;
  const double g = params.g;
  const double lam_l = waves.left;
  const double lam_r = waves.right;
  const double width = lam_r - lam_l;

  IntermediateStates out;
  const double e = effective_indicator(steady_indicator(iface, g, params.coriolis), params.eq_tol);
  out.indicator = e;
  out.source.s_hu = source_hu_given_indicator(iface, g, params.coriolis, e);
  out.source.s_hv = source_hv(iface, params.coriolis);

  const State hll = hll_state(wl, wr, waves, g);
  out.h_hll = hll.h;
  out.q_star = hll.hu + out.source.s_hu / width;

  const double ul = wl.hu / wl.h;
  const double ur = wr.hu / wr.h;
  const double vl = wl.hv / wl.h;
  const double vr = wr.hv / wr.h;

  double dh;
  double dv;
  if (e > 0.0) {
    const double alpha = g * 0.5 * (wl.h + wr.h) - std::abs(ul * ur);
    dh = alpha * out.source.s_hu / (alpha * alpha + e);
    const double q_tilde = 0.5 * (wl.hu + wr.hu);
    dv = q_tilde * out.source.s_hv / (q_tilde * q_tilde + e);
  } else {
    dh = wr.h - wl.h;
    dv = vr - vl;
  }

  const double delta = std::min({params.eps_cutoff, wl.h, wr.h, hll.h});
  out.delta = delta;
  const double raw_l = hll.h - lam_r / width * dh;
  const double raw_r = hll.h - lam_l / width * dh;
  // Caps come from enforcing the height consistency relation with the partner
  // pinned at delta; written as h_HLL + positive multiple of (h_HLL - delta).
  const double cap_l = hll.h + (lam_r / -lam_l) * (hll.h - delta);
  const double cap_r = hll.h + (-lam_l / lam_r) * (hll.h - delta);
  double hl = std::min(std::max(raw_l, delta), cap_l);
  double hr = std::min(std::max(raw_r, delta), cap_r);
  out.cutoff_applied = raw_l < delta || raw_r < delta;
  out.star_left.h = hl;
  out.star_right.h = hr;
  out.star_left.hu = out.q_star;
  out.star_right.hu = out.q_star;

  const double v_base = hll.hv / hll.h;
  const double scale = 1.0 / (width * hll.h);
  const double vl_star = v_base + scale * (out.source.s_hv - lam_r * hr * dv);
  const double vr_star = v_base + scale * (out.source.s_hv - lam_l * hl * dv);
  out.star_left.hv = hl * vl_star;
  out.star_right.hv = hr * vr_star;
  return out;
}

Flux interface_flux(const InterfaceData& iface, const WavePair& waves,
                    const IntermediateStates& stars, double g) {
  const State& wl = iface.left.w;
  const State& wr = iface.right.w;
  Flux flux = 0.5 * (physical_flux(wl, g) + physical_flux(wr, g));
  flux += (0.5 * waves.right) * (stars.star_right - wr);
  flux += (0.5 * waves.left) * (stars.star_left - wl);
  return flux;
}

InterfaceSolution solve_interface(const InterfaceData& iface, const SolverParams& params) {
  InterfaceSolution sol;
  sol.waves = wave_speeds(iface.left.w, iface.right.w, params.g, params.speed_floor);
  sol.stars = intermediate_states(iface, sol.waves, params);
  sol.flux = interface_flux(iface, sol.waves, sol.stars, params.g);
  return sol;
}

}  // namespace rsw
