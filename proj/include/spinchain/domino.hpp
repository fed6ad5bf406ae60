// Quantum-domino gate picture: the chain dynamics seeded by one flipped spin
// acts like a cascade of CNOTs that topples polarization down the chain,
//   U = CNOT_{N-1,N} ... CNOT_{2,3} CNOT_{1,2}   (CNOT_{1,2} applied first),
// turning |10...0> into |11...1> for a total polarization gain of N - 1.
//
// Every gate here is a 0/1 permutation of the computational basis, so the
// cascade is composed in index space and materialized once; the result equals
// the literal matrix product of the individual CNOTs (checked in the tests).
#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "spinchain/hilbert.hpp"
#include "spinchain/observables.hpp"
#include "spinchain/types.hpp"

namespace spinchain::domino {

struct GateUnitary {
  Matrix matrix;
  std::vector<std::pair<int, int>> gates;  // (control, target), application order
};

namespace detail {

// Image of basis state r under CNOT(control, target).
inline Index cnot_image(Index r, int control, int target, int n_spins) {
  const Index target_mask = Index{1} << (n_spins - target);
  return hilbert::spin_bit(r, control, n_spins) ? (r ^ target_mask) : r;
}

inline Matrix permutation_matrix(const std::vector<Index>& image) {
  const Index dim = static_cast<Index>(image.size());
  Matrix u = Matrix::Zero(dim, dim);
  for (Index r = 0; r < dim; ++r) u(image[r], r) = 1.0;
  return u;
}

}  // namespace detail

// CNOT: flips `target` iff `control` is up.
inline GateUnitary cnot(int control, int target, int n_spins) {
  require_site(control, n_spins, "control");
  require_site(target, n_spins, "target");
  if (control == target)
    throw std::invalid_argument("spinchain: cnot needs distinct control and target");
  const Index dim = dim_for_spins(n_spins);
  std::vector<Index> image(dim);
  for (Index r = 0; r < dim; ++r)
    image[r] = detail::cnot_image(r, control, target, n_spins);
  return {detail::permutation_matrix(image), {{control, target}}};
}

// Basis-index map of the full cascade: image[r] = index of U|r>.
inline std::vector<Index> domino_permutation(int n_spins) {
  if (n_spins < 2)
    throw std::invalid_argument("spinchain: domino cascade needs at least two spins");
  const Index dim = dim_for_spins(n_spins);
  std::vector<Index> image(dim);
  for (Index r = 0; r < dim; ++r) {
    Index s = r;
    for (int k = 1; k + 1 <= n_spins; ++k) s = detail::cnot_image(s, k, k + 1, n_spins);
    image[r] = s;
  }
  return image;
}

// The domino cascade along the chain.
inline GateUnitary domino_unitary(int n_spins) {
  GateUnitary out{detail::permutation_matrix(domino_permutation(n_spins)), {}};
  for (int k = 1; k + 1 <= n_spins; ++k) out.gates.emplace_back(k, k + 1);
  return out;
}

// Apply a 0/1 permutation unitary to a computational basis state; returns the
// resulting basis index.
inline Index apply_to_basis(const GateUnitary& gate, Index state) {
  const Index dim = gate.matrix.rows();
  if (state < 0 || state >= dim)
    throw std::out_of_range("spinchain: basis index outside Hilbert space");
  for (Index s = 0; s < dim; ++s) {
    const double amp = std::abs(gate.matrix(s, state));
    if (amp > 0.5) {
      if (std::abs(amp - 1.0) > 1e-12)
        throw numerical_error("spinchain: gate is not a basis permutation");
      return s;
    }
  }
  throw numerical_error("spinchain: gate column has no unit entry");
}

// Tr(rho sum_n I_n^z), the chain's total polarization.
inline double total_polarization(const Matrix& rho) {
  require_square(rho, "density matrix");
  const int n_spins = spin_count_for_dim(rho.rows());
  double value = 0.0;
  for (int site = 1; site <= n_spins; ++site)
    value += observables::polarization(rho, site);
  return value;
}

}  // namespace spinchain::domino
