// Initial states of the chain. All scenario-facing states are pure, so each
// comes in two forms: the state vector and the corresponding projector.
//
//   all_up      |111...1>                          (ground state of the drive-free chain)
//   first_down  |011...1>                          (spin 1 flipped)
//   bell12      (|01> - |10>)/sqrt(2) (x) |1...1>  (singlet on spins 1,2; rest up)
//
// plus the high-temperature thermal deviation operator sum_n I_n^z.
#pragma once

#include <cmath>

#include "spinchain/hilbert.hpp"
#include "spinchain/types.hpp"

namespace spinchain::states {

// Validity gate for density-matrix inputs: unit trace and Hermiticity within
// `tol`, positive semidefinite within -`tol` on the smallest eigenvalue.
inline void require_density_matrix(const Matrix& rho, double tol = 1e-10) {
  require_square(rho, "density matrix");
  if (std::abs(rho.trace() - Complex{1.0}) > tol)
    throw std::invalid_argument("spinchain: density matrix must have unit trace");
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > tol)
    throw std::invalid_argument("spinchain: density matrix must be Hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(rho, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw numerical_error("spinchain: density matrix eigenvalue check failed");
  if (solver.eigenvalues().minCoeff() < -tol)
    throw std::invalid_argument("spinchain: density matrix must be positive semidefinite");
}

// ---- state vectors ----

inline Vector all_up_vector(int n_spins) {
  const Index dim = dim_for_spins(n_spins);
  Vector psi = Vector::Zero(dim);
  psi[dim - 1] = 1.0;  // all bits set: every spin up
  return psi;
}

inline Vector first_down_vector(int n_spins) {
  if (n_spins < 2)
    throw std::invalid_argument("spinchain: first_down needs at least two spins");
  const Index dim = dim_for_spins(n_spins);
  Vector psi = Vector::Zero(dim);
  psi[dim / 2 - 1] = 1.0;  // spin 1 (most significant bit) down, rest up
  return psi;
}

inline Vector bell12_vector(int n_spins) {
  if (n_spins < 2)
    throw std::invalid_argument("spinchain: bell12 needs at least two spins");
  const Index dim = dim_for_spins(n_spins);
  const Index tail = dim / 4 - 1;  // remaining N-2 spins all up
  const double amp = 1.0 / std::sqrt(2.0);
  Vector psi = Vector::Zero(dim);
  psi[(Index{0b01} << (n_spins - 2)) + tail] = amp;   // |0>_1 |1>_2
  psi[(Index{0b10} << (n_spins - 2)) + tail] = -amp;  // |1>_1 |0>_2
  return psi;
}

// ---- density matrices ----

inline Matrix all_up(int n_spins) {
  const Vector psi = all_up_vector(n_spins);
  return psi * psi.adjoint();
}

inline Matrix first_down(int n_spins) {
  const Vector psi = first_down_vector(n_spins);
  return psi * psi.adjoint();
}

inline Matrix bell12(int n_spins) {
  const Vector psi = bell12_vector(n_spins);
  return psi * psi.adjoint();
}

// Two-spin singlet projector in the pair basis {|00>, |01>, |10>, |11>}:
// 1/2 * [[0,0,0,0], [0,1,-1,0], [0,-1,1,0], [0,0,0,0]].
inline Matrix4 bell_pair() {
  Matrix4 rho = Matrix4::Zero();
  rho(1, 1) = 0.5;
  rho(1, 2) = -0.5;
  rho(2, 1) = -0.5;
  rho(2, 2) = 0.5;
  return rho;
}

// High-temperature deviation operator sum_n I_n^z (the traceless part that
// carries all dynamics of a weakly polarized thermal state).
inline Matrix thermal_deviation(int n_spins) {
  const Index dim = dim_for_spins(n_spins);
  const auto z = hilbert::site_operator(hilbert::SiteKind::Z);
  Matrix dev = Matrix::Zero(dim, dim);
  for (int k = 1; k <= n_spins; ++k) dev += hilbert::lift(z, k, n_spins);
  return dev;
}

}  // namespace spinchain::states
