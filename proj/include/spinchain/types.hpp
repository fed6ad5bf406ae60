// Shared scalar/matrix aliases and the error taxonomy used across spinchain.
//
// Conventions used throughout the library:
//   * spins are numbered 1..N along the chain;
//   * computational basis index k encodes spin n in bit (N - n), so spin 1 is
//     the most significant bit and bit value 1 means "up" (|1>);
//   * all operators are dense complex<double> matrices of dimension 2^N.
#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace spinchain {

using Complex    = std::complex<double>;
using Matrix     = Eigen::MatrixXcd;
using Matrix2    = Eigen::Matrix2cd;
using Matrix4    = Eigen::Matrix4cd;
using Vector     = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index      = Eigen::Index;

inline constexpr Complex kI{0.0, 1.0};

// Thrown when a computation produces numerically invalid results (broken
// Hermiticity, non-physical eigenvalues, ...) as opposed to caller errors,
// which use std::invalid_argument / std::out_of_range.
class numerical_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---- dimension helpers ----

// Number of spins for a Hilbert-space dimension; rejects non powers of two.
inline int spin_count_for_dim(Index dim) {
  if (dim < 2) throw std::invalid_argument("spinchain: dimension must be >= 2");
  int n = 0;
  Index d = dim;
  while ((d & 1) == 0) {
    d >>= 1;
    ++n;
  }
  if (d != 1)
    throw std::invalid_argument("spinchain: dimension " + std::to_string(dim) +
                                " is not a power of two");
  return n;
}

inline Index dim_for_spins(int n_spins) {
  if (n_spins < 1) throw std::invalid_argument("spinchain: need at least one spin");
  if (n_spins > 30) throw std::invalid_argument("spinchain: spin count too large");
  return Index{1} << n_spins;
}

inline void require_square(const Matrix& m, const char* what) {
  if (m.rows() != m.cols())
    throw std::invalid_argument(std::string("spinchain: ") + what + " must be square");
}

// Spins must name distinct sites in 1..N.
inline void require_site(int site, int n_spins, const char* what) {
  if (site < 1 || site > n_spins)
    throw std::out_of_range(std::string("spinchain: ") + what + " " +
                            std::to_string(site) + " outside chain 1.." +
                            std::to_string(n_spins));
}

}  // namespace spinchain
