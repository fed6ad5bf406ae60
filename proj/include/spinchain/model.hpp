// Chain Hamiltonians for a 1D spin-1/2 Ising chain with nearest-neighbour
// coupling J and a resonant transverse drive, in three flavours:
//
//   rotating  H = w1 * sum_n I_n^x          + J * sum_n I_n^z I_{n+1}^z
//   selective H = w_x * (I_m^x + I_n^x)     + J * sum_k I_k^z I_{k+1}^z
//   lab       H(t) = sum_n [w0 I_n^z + 2 w1 cos(w0 t) I_n^x] + J * sum ZZ
//
// plus the frame map between them: U(t) = exp(-i t w0 sum_n I_n^z),
// rho_rot = U rho_lab U^dagger.
#pragma once

#include <cmath>

#include "spinchain/hilbert.hpp"
#include "spinchain/types.hpp"

namespace spinchain::model {

// ---- configuration ----

struct Drive {
  enum class Kind { All, Selective };
  Kind kind = Kind::All;
  int m = 0;            // Selective only: driven pair, 1 <= m < n <= N
  int n = 0;
  double omega_x = 0.0; // Selective only: shared drive amplitude
};

struct SpinChainConfig {
  int n_spins = 0;
  double j = 1.0;        // Ising coupling, J >= 0
  double omega1 = 0.0;   // uniform drive amplitude (rotating/lab frames)
  double omega0 = 0.0;   // Larmor frequency; required > 0 for lab frame only
  Drive drive;

  void validate() const {
    if (n_spins < 1) throw std::invalid_argument("spinchain: config needs n_spins >= 1");
    if (j < 0.0 || !std::isfinite(j))
      throw std::invalid_argument("spinchain: config needs j >= 0");
    if (omega1 < 0.0) throw std::invalid_argument("spinchain: config needs omega1 >= 0");
    if (drive.kind == Drive::Kind::Selective) {
      if (drive.m < 1 || drive.n <= drive.m || drive.n > n_spins)
        throw std::invalid_argument(
            "spinchain: selective drive needs 1 <= m < n <= n_spins");
      if (drive.omega_x < 0.0)
        throw std::invalid_argument("spinchain: selective drive needs omega_x >= 0");
    }
  }
};

enum class Frame { Rotating, Lab };

struct Hamiltonian {
  Matrix matrix;
  Frame frame = Frame::Rotating;
  double time = 0.0;  // evaluation time; meaningful in the lab frame only
};

// ---- building blocks ----

// J * sum_{k=1}^{N-1} I_k^z I_{k+1}^z (diagonal; empty sum for N = 1).
inline Matrix coupling_term(int n_spins, double j) {
  const Index dim = dim_for_spins(n_spins);
  const auto z = hilbert::site_operator(hilbert::SiteKind::Z);
  Matrix h = Matrix::Zero(dim, dim);
  for (int k = 1; k + 1 <= n_spins; ++k)
    h += j * (hilbert::lift(z, k, n_spins) * hilbert::lift(z, k + 1, n_spins));
  return h;
}

// ---- rotating frame, uniform resonant drive ----

inline Hamiltonian rotating_hamiltonian(const SpinChainConfig& config) {
  config.validate();
  const int n = config.n_spins;
  const auto x = hilbert::site_operator(hilbert::SiteKind::X);
  Matrix h = coupling_term(n, config.j);
  for (int k = 1; k <= n; ++k) h += config.omega1 * hilbert::lift(x, k, n);
  return {std::move(h), Frame::Rotating, 0.0};
}

// ---- rotating frame, selective drive on two spins ----

// General form with independent amplitudes on the two driven spins.
inline Hamiltonian selective_hamiltonian(int n_spins, double j, int m, double omega_m,
                                         int n, double omega_n) {
  if (m < 1 || n <= m || n > n_spins)
    throw std::invalid_argument("spinchain: selective drive needs 1 <= m < n <= n_spins");
  if (j < 0.0 || !std::isfinite(j))
    throw std::invalid_argument("spinchain: config needs j >= 0");
  if (omega_m < 0.0 || omega_n < 0.0)
    throw std::invalid_argument("spinchain: drive amplitudes must be >= 0");
  const auto x = hilbert::site_operator(hilbert::SiteKind::X);
  Matrix h = coupling_term(n_spins, j);
  h += omega_m * hilbert::lift(x, m, n_spins);
  h += omega_n * hilbert::lift(x, n, n_spins);
  return {std::move(h), Frame::Rotating, 0.0};
}

inline Hamiltonian selective_hamiltonian(const SpinChainConfig& config) {
  config.validate();
  if (config.drive.kind != Drive::Kind::Selective)
    throw std::invalid_argument("spinchain: config does not carry a selective drive");
  return selective_hamiltonian(config.n_spins, config.j, config.drive.m,
                               config.drive.omega_x, config.drive.n,
                               config.drive.omega_x);
}

// ---- lab frame ----

inline void require_lab_frame(const SpinChainConfig& config) {
  if (!(config.omega0 > 0.0))
    throw std::invalid_argument("spinchain: lab frame needs omega0 > 0");
}

inline Hamiltonian lab_hamiltonian(const SpinChainConfig& config, double t) {
  config.validate();
  require_lab_frame(config);
  const int n = config.n_spins;
  const auto x = hilbert::site_operator(hilbert::SiteKind::X);
  const auto z = hilbert::site_operator(hilbert::SiteKind::Z);
  const double drive = 2.0 * config.omega1 * std::cos(config.omega0 * t);
  Matrix h = coupling_term(n, config.j);
  for (int k = 1; k <= n; ++k) {
    h += config.omega0 * hilbert::lift(z, k, n);
    h += drive * hilbert::lift(x, k, n);
  }
  return {std::move(h), Frame::Lab, t};
}

// U(t) = exp(-i t w0 sum_n I_n^z); diagonal in the computational basis.
inline Matrix rotating_frame_unitary(const SpinChainConfig& config, double t) {
  config.validate();
  require_lab_frame(config);
  const int n = config.n_spins;
  const Index dim = dim_for_spins(n);
  Vector phases(dim);
  for (Index r = 0; r < dim; ++r) {
    double zsum = 0.0;
    for (int k = 1; k <= n; ++k) zsum += hilbert::spin_z(r, k, n);
    phases[r] = std::exp(-kI * config.omega0 * t * zsum);
  }
  return Matrix(phases.asDiagonal());
}

// rho_rot(t) = U(t) rho_lab(t) U(t)^dagger.
inline Matrix to_rotating_frame(const Matrix& rho_lab, double t,
                                const SpinChainConfig& config) {
  require_square(rho_lab, "density matrix");
  if (rho_lab.rows() != dim_for_spins(config.n_spins))
    throw std::invalid_argument("spinchain: density matrix dimension mismatch");
  const Matrix u = rotating_frame_unitary(config, t);
  return u * rho_lab * u.adjoint();
}

}  // namespace spinchain::model
