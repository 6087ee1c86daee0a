#pragma once

#include <algorithm>
#include <cmath>

#include "oracle.hpp"
#include "rsw/core.hpp"
#include "rsw/wellbalance.hpp"

namespace testing_support {

inline rsw::InterfaceData to_iface(const oracle::Pair& p) {
  return {{{p.l.h, p.l.hu, p.l.hv}, p.l.z}, {{p.r.h, p.r.hu, p.r.hv}, p.r.z}, p.d};
}

inline oracle::Pair to_pair(const rsw::InterfaceData& i) {
  return {{i.left.w.h, i.left.w.hu, i.left.w.hv, i.left.z},
          {i.right.w.h, i.right.w.hu, i.right.w.hv, i.right.z},
          i.d};
}

inline rsw::SolverParams params_of(const oracle::Physics& ph) {
  rsw::SolverParams p;
  p.g = ph.g;
  p.coriolis = ph.f;
  p.eps_cutoff = ph.eps;
  p.eq_tol = ph.eq_tol;
  p.speed_floor = ph.floor;
  return p;
}

/// |a - b| / max(|a|, |b|, scale)
inline double rel_diff(double a, double b, double scale = 1.0) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), scale});
}

/// Random admissible side with h in [h_min, h_max] (log-uniform), |u|, |v| <= speed.
inline oracle::Side random_side(oracle::Gen& gen, double h_min, double h_max, double speed,
                                double z_span) {
  const double h = gen.log_uniform(h_min, h_max);
  return {h, h * gen.uniform(-speed, speed), h * gen.uniform(-speed, speed),
          gen.uniform(-z_span, z_span)};
}

}  // namespace testing_support
