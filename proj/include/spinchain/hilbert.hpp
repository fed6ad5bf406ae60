// Hilbert-space primitives: half-Pauli site operators, tensor embedding into
// an N-spin chain, and exact spectral machinery (eigendecomposition and the
// unitary propagator built from it).
#pragma once

#include <cmath>
#include <string>

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

#include "spinchain/types.hpp"

namespace spinchain::hilbert {

// ---- site operators ----

enum class SiteKind { X, Z };

struct SiteOperator {
  SiteKind kind;
  Matrix2 matrix;  // acts on one spin, basis { |0> = down, |1> = up }
};

// Spin-1/2 angular momentum components (half-Paulis):
//   I^x = [[0, 1/2], [1/2, 0]],  I^z = diag(-1/2, +1/2).
inline SiteOperator site_operator(SiteKind kind) {
  SiteOperator op{kind, Matrix2::Zero()};
  switch (kind) {
    case SiteKind::X:
      op.matrix << 0.0, 0.5,  //
          0.5, 0.0;
      break;
    case SiteKind::Z:
      op.matrix << -0.5, 0.0,  //
          0.0, 0.5;
      break;
  }
  return op;
}

inline Matrix kron(const Matrix& a, const Matrix& b) {
  return Eigen::kroneckerProduct(a, b).eval();
}

// ---- basis-index bit conventions ----

// Spin `site` of an N-spin chain lives in bit (N - site) of the basis index:
// spin 1 is the most significant bit, bit value 1 means up.
inline int spin_bit(Index state, int site, int n_spins) {
  require_site(site, n_spins, "site");
  if (state < 0 || state >= dim_for_spins(n_spins))
    throw std::out_of_range("spinchain: basis index outside Hilbert space");
  return static_cast<int>((state >> (n_spins - site)) & 1);
}

// <state| I_site^z |state> for a computational basis state.
inline double spin_z(Index state, int site, int n_spins) {
  return spin_bit(state, site, n_spins) ? 0.5 : -0.5;
}

// ---- tensor embedding ----

// Embed a single-spin operator at position `site` of an N-spin chain:
//   lift(op, n, N) = 1 (x) ... (x) op (x) ... (x) 1   (op in slot n).
inline Matrix lift(const Matrix2& op, int site, int n_spins) {
  require_site(site, n_spins, "site");
  Matrix out = Matrix::Identity(1, 1);
  const Matrix eye = Matrix::Identity(2, 2);
  for (int k = 1; k <= n_spins; ++k)
    out = kron(out, k == site ? Matrix(op) : eye);
  return out;
}

inline Matrix lift(const SiteOperator& op, int site, int n_spins) {
  return lift(op.matrix, site, n_spins);
}

// ---- spectral machinery ----

struct SpectralDecomposition {
  RealVector eigenvalues;  // ascending
  Matrix eigenvectors;     // unitary, columns match eigenvalues
};

// Exact eigendecomposition of a Hermitian matrix. Rejects input whose
// anti-Hermitian part exceeds 1e-12 entrywise.
inline SpectralDecomposition hermitian_eig(const Matrix& h) {
  require_square(h, "Hamiltonian");
  const double defect = (h - h.adjoint()).cwiseAbs().maxCoeff();
  if (defect > 1e-12)
    throw std::invalid_argument(
        "spinchain: matrix is not Hermitian (defect " + std::to_string(defect) + ")");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
  if (solver.info() != Eigen::Success)
    throw numerical_error("spinchain: eigendecomposition failed to converge");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

// Phases exp(-i E_k t) of the propagator in the eigenbasis.
inline Vector propagator_phases(const SpectralDecomposition& eig, double t) {
  return (-kI * t * eig.eigenvalues.cast<Complex>().array()).exp().matrix();
}

// U(t) = V exp(-i E t) V^dagger, exactly unitary up to roundoff.
inline Matrix propagator(const SpectralDecomposition& eig, double t) {
  return eig.eigenvectors * propagator_phases(eig, t).asDiagonal() *
         eig.eigenvectors.adjoint();
}

inline Matrix commutator(const Matrix& a, const Matrix& b) {
  return a * b - b * a;
}

}  // namespace spinchain::hilbert
