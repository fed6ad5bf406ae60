// Observables: single-spin polarization, two-spin reduced density matrices,
// and the Wootters concurrence.
//
// Concurrence of a pair (m, n):
//   rho_tilde = Q rho^* Q,  Q = antidiag(-1, 1, 1, -1)   (spin flip)
//   R = rho rho_tilde, lambda_k = sqrt(eig_k(R)) in descending order,
//   C = max(0, lambda_1 - lambda_2 - lambda_3 - lambda_4).
//
// For a *pure* global state psi the same lambdas are the singular values of
// the 4x4 core S U^T Q U S, where T = pair_factor(psi, m, n) = U S W^dagger is
// the thin SVD of the 4 x 2^(N-2) reshape of psi: with rho = T T^dagger,
// nonzero eig(R) = eig(A^* A) = sigma(A)^2 for A = S (U^T Q U) S. That route
// avoids the sqrt(eps) noise floor of eigenvalues near zero and is what the
// trajectory code uses; the general eigensolver route below serves every
// density-matrix input and cross-checks the pure route in the tests.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "spinchain/hilbert.hpp"
#include "spinchain/states.hpp"
#include "spinchain/types.hpp"

namespace spinchain::observables {

// ---- polarization ----

// <I_site^z> = Tr(rho I_site^z). Rejects results with imaginary residual
// beyond 1e-10 (possible only for broken input).
inline double polarization(const Matrix& rho, int site) {
  require_square(rho, "density matrix");
  const int n_spins = spin_count_for_dim(rho.rows());
  require_site(site, n_spins, "site");
  Complex value = 0.0;
  for (Index r = 0; r < rho.rows(); ++r)
    value += rho(r, r) * hilbert::spin_z(r, site, n_spins);
  if (std::abs(value.imag()) > 1e-10)
    throw numerical_error("spinchain: polarization has imaginary residual");
  return value.real();
}

inline double polarization(const Vector& psi, int site) {
  const int n_spins = spin_count_for_dim(psi.size());
  require_site(site, n_spins, "site");
  double value = 0.0;
  for (Index r = 0; r < psi.size(); ++r)
    value += std::norm(psi[r]) * hilbert::spin_z(r, site, n_spins);
  return value;
}

// ---- pair index bookkeeping ----

namespace detail {

// Gather table for a spin pair: rows[p][e] is the full basis index whose pair
// bits are p = 2a + b (a = spin m, b = spin n) and whose remaining spins are
// in environment configuration e (enumerated in chain order).
struct PairBasisTable {
  Index env_count = 0;
  std::array<std::vector<Index>, 4> rows;
};

inline PairBasisTable pair_basis_table(int m, int n, int n_spins) {
  require_site(m, n_spins, "spin m");
  require_site(n, n_spins, "spin n");
  if (m == n) throw std::invalid_argument("spinchain: pair needs two distinct spins");
  const Index dim = dim_for_spins(n_spins);
  PairBasisTable table;
  table.env_count = dim / 4;
  for (auto& row : table.rows) row.resize(table.env_count);
  for (Index r = 0; r < dim; ++r) {
    const int a = hilbert::spin_bit(r, m, n_spins);
    const int b = hilbert::spin_bit(r, n, n_spins);
    Index e = 0;
    for (int site = 1; site <= n_spins; ++site) {
      if (site == m || site == n) continue;
      e = (e << 1) | hilbert::spin_bit(r, site, n_spins);
    }
    table.rows[2 * a + b][e] = r;
  }
  return table;
}

}  // namespace detail

// ---- reduced density matrix ----

struct ReducedDensityMatrix {
  Matrix4 matrix;  // pair basis |ab>: {|00>, |01>, |10>, |11>}, a = spin m
  int m = 0;
  int n = 0;
};

// Partial trace of rho onto spins (m, n): sums the environment diagonal,
// rho_pair[p, q] = sum_e rho[idx(p, e), idx(q, e)].
inline ReducedDensityMatrix reduced_dm(const Matrix& rho, int m, int n) {
  states::require_density_matrix(rho);
  const int n_spins = spin_count_for_dim(rho.rows());
  if (n_spins < 2) throw std::invalid_argument("spinchain: pair needs at least two spins");
  const auto table = detail::pair_basis_table(m, n, n_spins);
  ReducedDensityMatrix out{Matrix4::Zero(), m, n};
  for (int p = 0; p < 4; ++p)
    for (int q = 0; q < 4; ++q) {
      Complex sum = 0.0;
      for (Index e = 0; e < table.env_count; ++e)
        sum += rho(table.rows[p][e], table.rows[q][e]);
      out.matrix(p, q) = sum;
    }
  return out;
}

// Reshape of a pure global state: T[p, e] = psi[idx(p, e)], a 4 x 2^(N-2)
// factor with rho_pair = T T^dagger.
inline Matrix pair_factor(const Vector& psi, int m, int n) {
  const int n_spins = spin_count_for_dim(psi.size());
  if (n_spins < 2) throw std::invalid_argument("spinchain: pair needs at least two spins");
  const auto table = detail::pair_basis_table(m, n, n_spins);
  Matrix t(4, table.env_count);
  for (int p = 0; p < 4; ++p)
    for (Index e = 0; e < table.env_count; ++e) t(p, e) = psi[table.rows[p][e]];
  return t;
}

// ---- concurrence ----

// Spin-flip matrix Q = antidiag(-1, 1, 1, -1) (equals sigma_y (x) sigma_y up
// to the basis phase convention used here).
inline const Matrix4& spin_flip_matrix() {
  static const Matrix4 q = [] {
    Matrix4 m = Matrix4::Zero();
    m(0, 3) = -1.0;
    m(1, 2) = 1.0;
    m(2, 1) = 1.0;
    m(3, 0) = -1.0;
    return m;
  }();
  return q;
}

struct ConcurrenceInternals {
  Matrix4 rho_tilde;
  Matrix4 r_matrix;
  std::array<double, 4> lambdas;  // descending
  double concurrence = 0.0;
};

// General (eigensolver) route, valid for any mixed pair state.
inline ConcurrenceInternals concurrence_internals(const ReducedDensityMatrix& rdm) {
  const Matrix4& q = spin_flip_matrix();
  ConcurrenceInternals out;
  out.rho_tilde = q * rdm.matrix.conjugate() * q;
  out.r_matrix = rdm.matrix * out.rho_tilde;
  Eigen::ComplexEigenSolver<Matrix4> solver(out.r_matrix, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success)
    throw numerical_error("spinchain: concurrence eigensolve failed to converge");
  const auto evals = solver.eigenvalues();
  for (int k = 0; k < 4; ++k) {
    if (std::abs(evals[k].imag()) > 1e-8)
      throw numerical_error("spinchain: concurrence eigenvalues have imaginary residual");
    if (evals[k].real() < -1e-8)
      throw numerical_error("spinchain: concurrence eigenvalue is negative");
    out.lambdas[k] = std::sqrt(std::max(0.0, evals[k].real()));
  }
  std::sort(out.lambdas.begin(), out.lambdas.end(), std::greater<>());
  out.concurrence = std::max(
      0.0, out.lambdas[0] - out.lambdas[1] - out.lambdas[2] - out.lambdas[3]);
  return out;
}

inline double concurrence(const ReducedDensityMatrix& rdm) {
  return concurrence_internals(rdm).concurrence;
}

inline double concurrence_pair(const Matrix& rho, int m, int n) {
  return concurrence(reduced_dm(rho, m, n));
}

// Pure-state route (see header comment): lambdas are the singular values of
// the 4x4 core S (U^T Q U) S built from the thin SVD of the pair factor.
inline double concurrence(const Vector& psi, int m, int n) {
  if (std::abs(psi.norm() - 1.0) > 1e-10)
    throw std::invalid_argument("spinchain: state vector must be normalized");
  const Matrix t = pair_factor(psi, m, n);
  Eigen::JacobiSVD<Matrix> svd(t, Eigen::ComputeThinU);
  const Matrix u = svd.matrixU();                       // 4 x r
  const RealVector s = svd.singularValues();            // r
  const Matrix core = s.asDiagonal() *
                      (u.transpose() * spin_flip_matrix() * u) *
                      s.asDiagonal();                   // r x r, r <= 4
  Eigen::JacobiSVD<Matrix> core_svd(core);
  std::array<double, 4> lambdas{0.0, 0.0, 0.0, 0.0};
  for (Index k = 0; k < core_svd.singularValues().size(); ++k)
    lambdas[static_cast<std::size_t>(k)] = core_svd.singularValues()[k];
  std::sort(lambdas.begin(), lambdas.end(), std::greater<>());
  return std::max(0.0, lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3]);
}

}  // namespace spinchain::observables
