// Exact time evolution on a uniform time grid.
//
// Time-independent (rotating-frame) Hamiltonians are propagated through one
// spectral decomposition: rho(t) = U(t) rho0 U(t)^dagger with
// U(t) = V exp(-i E t) V^dagger, so every grid point is exact to roundoff and
// unitarity never degrades with trajectory length. The lab-frame Hamiltonian
// is time dependent and is integrated with piecewise-constant midpoint
// unitaries on substeps, which keeps the map exactly unitary as well.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numbers>
#include <utility>
#include <vector>

#include "spinchain/hilbert.hpp"
#include "spinchain/model.hpp"
#include "spinchain/states.hpp"
#include "spinchain/types.hpp"

namespace spinchain::evolution {

// ---- time grid ----

// Uniform grid t_i = t_start + i*dt with count = floor((t_end - t_start)/dt) + 1
// points (evaluated in floating point), so t_end itself is included only when
// dt divides the span exactly.
struct TimeGrid {
  double t_start = 0.0;
  double t_end = 0.0;
  double dt = 0.0;
  std::size_t count = 0;

  static TimeGrid make(double t_start, double t_end, double dt) {
    if (!(dt > 0.0)) throw std::invalid_argument("spinchain: time grid needs dt > 0");
    if (!(t_end > t_start))
      throw std::invalid_argument("spinchain: time grid needs t_end > t_start");
    TimeGrid grid{t_start, t_end, dt, 0};
    grid.count = static_cast<std::size_t>(std::floor((t_end - t_start) / dt)) + 1;
    return grid;
  }

  double time(std::size_t i) const { return t_start + static_cast<double>(i) * dt; }
};

struct Trajectory {
  TimeGrid grid;
  std::vector<Matrix> states;  // density matrices, one per grid point
};

using StateSink = std::function<void(std::size_t index, double t, const Matrix& rho)>;
using VectorSink = std::function<void(std::size_t index, double t, const Vector& psi)>;

// ---- rotating frame (time-independent H) ----

inline void evolve_stream(const Matrix& h, const Matrix& rho0, const TimeGrid& grid,
                          const StateSink& sink) {
  states::require_density_matrix(rho0);
  if (rho0.rows() != h.rows())
    throw std::invalid_argument("spinchain: state/Hamiltonian dimension mismatch");
  const auto eig = hilbert::hermitian_eig(h);
  for (std::size_t i = 0; i < grid.count; ++i) {
    const double t = grid.time(i);
    const Matrix u = hilbert::propagator(eig, t);
    sink(i, t, u * rho0 * u.adjoint());
  }
}

inline Trajectory evolve(const Matrix& h, const Matrix& rho0, const TimeGrid& grid) {
  Trajectory traj{grid, {}};
  traj.states.reserve(grid.count);
  evolve_stream(h, rho0, grid,
                [&](std::size_t, double, const Matrix& rho) { traj.states.push_back(rho); });
  return traj;
}

inline Trajectory evolve(const model::Hamiltonian& h, const Matrix& rho0,
                         const TimeGrid& grid) {
  if (h.frame != model::Frame::Rotating)
    throw std::invalid_argument(
        "spinchain: evolve needs a time-independent Hamiltonian; use evolve_lab");
  return evolve(h.matrix, rho0, grid);
}

// Pure-state fast path: one spectral decomposition, then
// psi(t) = V exp(-i E t) (V^dagger psi0) at O(dim^2) per grid point.
inline void evolve_state(const Matrix& h, const Vector& psi0, const TimeGrid& grid,
                         const VectorSink& sink) {
  if (psi0.size() != h.rows())
    throw std::invalid_argument("spinchain: state/Hamiltonian dimension mismatch");
  if (std::abs(psi0.norm() - 1.0) > 1e-10)
    throw std::invalid_argument("spinchain: state vector must be normalized");
  const auto eig = hilbert::hermitian_eig(h);
  const Vector coeffs = eig.eigenvectors.adjoint() * psi0;
  Vector psi(psi0.size());
  for (std::size_t i = 0; i < grid.count; ++i) {
    const double t = grid.time(i);
    psi.noalias() =
        eig.eigenvectors * (hilbert::propagator_phases(eig, t).cwiseProduct(coeffs));
    sink(i, t, psi);
  }
}

// ---- lab frame (time-dependent H) ----

// Largest admissible substep: resolve both the coupling timescale (0.01/J)
// and the drive oscillation (2% of a Larmor period).
inline double max_lab_substep(const model::SpinChainConfig& config) {
  model::require_lab_frame(config);
  return std::min(0.01 / config.j, 0.02 * 2.0 * std::numbers::pi / config.omega0);
}

// Integrate the lab-frame dynamics with midpoint-frozen unitaries: each grid
// interval is split into equal substeps delta <= substep, and on each substep
// rho advances by U = exp(-i H(t_mid) delta). The map is a product of exact
// unitaries, so trace, Hermiticity and purity are preserved by construction.
inline Trajectory evolve_lab(const model::SpinChainConfig& config, const Matrix& rho0,
                             const TimeGrid& grid, double substep) {
  config.validate();
  model::require_lab_frame(config);
  states::require_density_matrix(rho0);
  if (rho0.rows() != dim_for_spins(config.n_spins))
    throw std::invalid_argument("spinchain: state dimension does not match config");
  if (!(substep > 0.0) || substep > max_lab_substep(config))
    throw std::invalid_argument(
        "spinchain: lab substep must lie in (0, min(0.01/J, 0.02*2*pi/omega0)]");

  // H(t) = H_static + cos(w0 t) * H_drive; assemble the pieces once.
  const int n = config.n_spins;
  const auto x = hilbert::site_operator(hilbert::SiteKind::X);
  const auto z = hilbert::site_operator(hilbert::SiteKind::Z);
  Matrix h_static = model::coupling_term(n, config.j);
  Matrix h_drive = Matrix::Zero(h_static.rows(), h_static.cols());
  for (int k = 1; k <= n; ++k) {
    h_static += config.omega0 * hilbert::lift(z, k, n);
    h_drive += 2.0 * config.omega1 * hilbert::lift(x, k, n);
  }

  Trajectory traj{grid, {}};
  traj.states.reserve(grid.count);
  traj.states.push_back(rho0);

  Matrix rho = rho0;
  for (std::size_t i = 1; i < grid.count; ++i) {
    const double t0 = grid.time(i - 1);
    const auto n_sub = static_cast<std::size_t>(std::ceil(grid.dt / substep));
    const double delta = grid.dt / static_cast<double>(n_sub);
    for (std::size_t s = 0; s < n_sub; ++s) {
      const double t_mid = t0 + (static_cast<double>(s) + 0.5) * delta;
      const Matrix h = h_static + std::cos(config.omega0 * t_mid) * h_drive;
      const Matrix u = hilbert::propagator(hilbert::hermitian_eig(h), delta);
      rho = u * rho * u.adjoint();
    }
    traj.states.push_back(rho);
  }
  return traj;
}

}  // namespace spinchain::evolution
