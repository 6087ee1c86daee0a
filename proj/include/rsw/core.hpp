#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

namespace rsw {

/// Conserved variables (h, hu, hv) of one cell. Also used for flux triples.
struct State {
  double h = 0.0;
  double hu = 0.0;
  double hv = 0.0;

  State& operator+=(const State& o) {
    h += o.h;
    hu += o.hu;
    hv += o.hv;
    return *this;
  }
  State& operator-=(const State& o) {
    h -= o.h;
    hu -= o.hu;
    hv -= o.hv;
    return *this;
  }
  State& operator*=(double s) {
    h *= s;
    hu *= s;
    hv *= s;
    return *this;
  }
  friend State operator+(State a, const State& b) { return a += b; }
  friend State operator-(State a, const State& b) { return a -= b; }
  friend State operator*(double s, State a) { return a *= s; }
  friend State operator*(State a, double s) { return a *= s; }
  friend bool operator==(const State&, const State&) = default;
};

using Flux = State;

struct Primitive {
  double h = 0.0;
  double u = 0.0;
  double v = 0.0;
};

/// A cell state together with its topography value.
struct ExtendedState {
  State w;
  double z = 0.0;
};

/// True iff h > 0 and all components are finite.
bool admissible(const State& w);

State conserved(const Primitive& p);

/// Throws std::domain_error when h <= 0.
Primitive primitive(const State& w);

/// f(w) = (hu, hu^2/h + g h^2/2, hu hv/h).
Flux physical_flux(const State& w, double g);

/// Uniform 1D grid with per-cell topography samples.
class Mesh {
 public:
  double x_min() const { return x_min_; }
  double x_max() const { return x_max_; }
  int n_cells() const { return static_cast<int>(centers_.size()); }
  double dx() const { return dx_; }
  const std::vector<double>& centers() const { return centers_; }
  const std::vector<double>& z() const { return z_; }
  double center(int i) const { return centers_[i]; }

  friend Mesh build_mesh(double x_min, double x_max, int n_cells,
                         const std::function<double(double)>& topography);

 private:
  double x_min_ = 0.0;
  double x_max_ = 0.0;
  double dx_ = 0.0;
  std::vector<double> centers_;
  std::vector<double> z_;
};

/// Topography is sampled at the cell centers.
Mesh build_mesh(double x_min, double x_max, int n_cells,
                const std::function<double(double)>& topography);

/// Physical and numerical constants. `coriolis` is the Coriolis parameter,
/// kept distinct from the flux function by name.
struct SolverParams {
  double g = 1.0;
  double coriolis = 0.0;
  double cfl = 0.5;
  double eps_cutoff = 1e-10;
  double eq_tol = 1e-12;
  double speed_floor = 1e-8;

  /// Throws std::invalid_argument on out-of-range values.
  void validate() const;
};

}  // namespace rsw
