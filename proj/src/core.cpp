#include "rsw/core.hpp"

#include <cmath>
#include <string>

namespace rsw {

bool admissible(const State& w) {
  return w.h > 0.0 && std::isfinite(w.h) && std::isfinite(w.hu) && std::isfinite(w.hv);
}

State conserved(const Primitive& p) { return {p.h, p.h * p.u, p.h * p.v}; }

Primitive primitive(const State& w) {
  if (!(w.h > 0.0)) {
    throw std::domain_error("primitive: non-positive height h = " + std::to_string(w.h));
  }
  return {w.h, w.hu / w.h, w.hv / w.h};
}

Flux physical_flux(const State& w, double g) {
  const double u = w.hu / w.h;
  return {w.hu, w.hu * u + 0.5 * g * w.h * w.h, w.hv * u};
}

Mesh build_mesh(double x_min, double x_max, int n_cells,
                const std::function<double(double)>& topography) {
  if (!(x_min < x_max) || !std::isfinite(x_min) || !std::isfinite(x_max)) {
    throw std::invalid_argument("build_mesh: require x_min < x_max");
  }
  if (n_cells < 1) {
    throw std::invalid_argument("build_mesh: n_cells must be >= 1");
  }
  Mesh mesh;
  mesh.x_min_ = x_min;
  mesh.x_max_ = x_max;
  mesh.dx_ = (x_max - x_min) / n_cells;
  mesh.centers_.resize(n_cells);
  mesh.z_.resize(n_cells);
  for (int i = 0; i < n_cells; ++i) {
    const double x = x_min + (i + 0.5) * mesh.dx_;
    mesh.centers_[i] = x;
    mesh.z_[i] = topography ? topography(x) : 0.0;
  }
  return mesh;
}

void SolverParams::validate() const {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(std::string("SolverParams: ") + what);
  };
  require(g > 0.0 && std::isfinite(g), "g must be > 0");
  require(std::isfinite(coriolis), "coriolis must be finite");
  require(cfl > 0.0 && cfl <= 0.5, "cfl must be in (0, 1/2]");
  require(eps_cutoff > 0.0, "eps_cutoff must be > 0");
  require(eq_tol >= 0.0, "eq_tol must be >= 0");
  require(speed_floor > 0.0, "speed_floor must be > 0");
}

}  // namespace rsw
