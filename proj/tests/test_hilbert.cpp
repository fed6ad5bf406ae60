#include <doctest.h>

#include <random>

#include "spinchain/hilbert.hpp"
#include "spinchain/model.hpp"
#include "support/oracles.hpp"

using namespace spinchain;
using hilbert::SiteKind;

namespace {

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("site operators are the half-Paulis") {
  const auto z = hilbert::site_operator(SiteKind::Z);
  CHECK(z.matrix(0, 0) == Complex{-0.5});
  CHECK(z.matrix(1, 1) == Complex{0.5});
  CHECK(z.matrix(0, 1) == Complex{0.0});
  CHECK(z.matrix(1, 0) == Complex{0.0});

  const auto x = hilbert::site_operator(SiteKind::X);
  CHECK(x.matrix(0, 0) == Complex{0.0});
  CHECK(x.matrix(0, 1) == Complex{0.5});
  CHECK(x.matrix(1, 0) == Complex{0.5});
  CHECK(x.matrix(1, 1) == Complex{0.0});

  // (sigma_x / 2)^2 = I/4
  const Matrix2 xx = x.matrix * x.matrix;
  CHECK((xx - 0.25 * Matrix2::Identity()).cwiseAbs().maxCoeff() == 0.0);

  for (const auto kind : {SiteKind::X, SiteKind::Z}) {
    const auto op = hilbert::site_operator(kind).matrix;
    CHECK((op - op.adjoint()).cwiseAbs().maxCoeff() == 0.0);
    CHECK(std::abs(op.trace()) == 0.0);
  }
}

TEST_CASE("spin_bit and spin_z follow the basis convention") {
  // N=3, index 0b100: spin 1 (most significant bit) up, spins 2 and 3 down.
  CHECK(hilbert::spin_bit(4, 1, 3) == 1);
  CHECK(hilbert::spin_bit(4, 2, 3) == 0);
  CHECK(hilbert::spin_bit(4, 3, 3) == 0);
  CHECK(hilbert::spin_z(4, 1, 3) == 0.5);
  CHECK(hilbert::spin_z(4, 2, 3) == -0.5);
  CHECK_THROWS_AS(hilbert::spin_bit(8, 1, 3), std::out_of_range);
  CHECK_THROWS_AS(hilbert::spin_bit(0, 4, 3), std::out_of_range);
}

TEST_CASE("lift embeds single-site operators") {
  const auto z = hilbert::site_operator(SiteKind::Z);
  const auto x = hilbert::site_operator(SiteKind::X);

  const Matrix z11 = hilbert::lift(z, 1, 1);
  CHECK(z11(0, 0) == Complex{-0.5});
  CHECK(z11(1, 1) == Complex{0.5});

  const Matrix z22 = hilbert::lift(z, 2, 2);
  for (Index k = 0; k < 4; ++k)
    CHECK(z22(k, k) == Complex{(k % 2) ? 0.5 : -0.5});
  CHECK(max_abs(z22 - Matrix(z22.diagonal().asDiagonal())) == 0.0);

  // lift(X,1,2) couples |00> <-> |10> and |01> <-> |11>.
  const Matrix x12 = hilbert::lift(x, 1, 2);
  CHECK(x12(0, 2) == Complex{0.5});
  CHECK(x12(2, 0) == Complex{0.5});
  CHECK(x12(1, 3) == Complex{0.5});
  CHECK(x12(3, 1) == Complex{0.5});
  CHECK(x12.cwiseAbs().sum() == 2.0);  // nothing else

  CHECK_THROWS_AS(hilbert::lift(z, 0, 2), std::out_of_range);
  CHECK_THROWS_AS(hilbert::lift(z, 3, 2), std::out_of_range);
}

TEST_CASE("lift matches the bit-arithmetic oracle") {
  for (const auto kind : {SiteKind::X, SiteKind::Z}) {
    const auto op = hilbert::site_operator(kind);
    for (int site = 1; site <= 4; ++site) {
      const Matrix lifted = hilbert::lift(op, site, 4);
      const Matrix ref = oracle::lift_ref(op.matrix, site, 4);
      CHECK(max_abs(lifted - ref) == 0.0);
    }
  }
}

TEST_CASE("lifted operators on distinct sites commute") {
  const int n = 4;
  for (const auto kind_a : {SiteKind::X, SiteKind::Z})
    for (const auto kind_b : {SiteKind::X, SiteKind::Z})
      for (int m = 1; m <= n; ++m)
        for (int k = 1; k <= n; ++k) {
          if (m == k) continue;
          const Matrix a = hilbert::lift(hilbert::site_operator(kind_a), m, n);
          const Matrix b = hilbert::lift(hilbert::site_operator(kind_b), k, n);
          CHECK(max_abs(hilbert::commutator(a, b)) < 1e-14);
        }
}

TEST_CASE("hermitian_eig on simple matrices") {
  Matrix d = Matrix::Zero(2, 2);
  d(0, 0) = -0.25;
  d(1, 1) = 0.25;
  const auto eig_d = hilbert::hermitian_eig(d);
  CHECK(eig_d.eigenvalues[0] == doctest::Approx(-0.25).epsilon(1e-14));
  CHECK(eig_d.eigenvalues[1] == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(max_abs(eig_d.eigenvectors.cwiseAbs() - Matrix::Identity(2, 2)) < 1e-14);

  const Matrix x = Matrix(hilbert::site_operator(SiteKind::X).matrix);
  const auto eig_x = hilbert::hermitian_eig(x);
  CHECK(eig_x.eigenvalues[0] == doctest::Approx(-0.5).epsilon(1e-14));
  CHECK(eig_x.eigenvalues[1] == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("hermitian_eig reconstructs a chain Hamiltonian") {
  model::SpinChainConfig config{3, 1.0, 0.15, 0.0, {}};
  const Matrix h = model::rotating_hamiltonian(config).matrix;
  const auto eig = hilbert::hermitian_eig(h);
  const Matrix rebuilt = eig.eigenvectors *
                         eig.eigenvalues.cast<Complex>().asDiagonal() *
                         eig.eigenvectors.adjoint();
  CHECK((rebuilt - h).norm() < 1e-12 * static_cast<double>(h.rows()));
  CHECK(max_abs(eig.eigenvectors.adjoint() * eig.eigenvectors -
                Matrix::Identity(8, 8)) < 1e-12);
}

TEST_CASE("hermitian_eig rejects non-Hermitian input") {
  Matrix bad = Matrix::Zero(2, 2);
  bad(0, 1) = 1.0;  // missing the conjugate partner
  CHECK_THROWS_AS(hilbert::hermitian_eig(bad), std::invalid_argument);
  CHECK_THROWS_AS(hilbert::hermitian_eig(Matrix::Zero(2, 3)), std::invalid_argument);
}

TEST_CASE("propagator basics") {
  const double omega1 = 0.15;
  const Matrix h = omega1 * Matrix(hilbert::site_operator(SiteKind::X).matrix);
  const auto eig = hilbert::hermitian_eig(h);

  CHECK(max_abs(hilbert::propagator(eig, 0.0) - Matrix::Identity(2, 2)) < 1e-15);

  // Full Rabi cycle: exp(-i pi sigma_x) = -I.
  const double t_cycle = 2.0 * std::numbers::pi / omega1;
  CHECK(max_abs(hilbert::propagator(eig, t_cycle) + Matrix::Identity(2, 2)) < 1e-12);
}

TEST_CASE("propagator group property and unitarity") {
  model::SpinChainConfig config{3, 1.0, 0.15, 0.0, {}};
  const auto eig = hilbert::hermitian_eig(model::rotating_hamiltonian(config).matrix);

  std::mt19937 rng(7);
  std::uniform_real_distribution<double> uni(0.0, 50.0);
  for (int trial = 0; trial < 10; ++trial) {
    const double t1 = uni(rng), t2 = uni(rng);
    const Matrix u12 = hilbert::propagator(eig, t1) * hilbert::propagator(eig, t2);
    CHECK(max_abs(u12 - hilbert::propagator(eig, t1 + t2)) < 1e-12);
  }
  for (double t = 0.0; t <= 100.0; t += 12.5) {
    const Matrix u = hilbert::propagator(eig, t);
    CHECK(max_abs(u.adjoint() * u - Matrix::Identity(8, 8)) < 1e-12);
  }
}

TEST_CASE("conjugation by the propagator preserves trace and spectrum") {
  model::SpinChainConfig config{3, 1.0, 0.15, 0.0, {}};
  const auto eig = hilbert::hermitian_eig(model::rotating_hamiltonian(config).matrix);

  std::mt19937 rng(11);
  const Matrix rho = oracle::random_density_matrix(rng, 8);
  const Eigen::SelfAdjointEigenSolver<Matrix> before(rho);

  const Matrix u = hilbert::propagator(eig, 17.3);
  const Matrix evolved = u * rho * u.adjoint();
  CHECK(std::abs(evolved.trace() - Complex{1.0}) < 1e-12);

  const Eigen::SelfAdjointEigenSolver<Matrix> after(evolved);
  CHECK((after.eigenvalues() - before.eigenvalues()).cwiseAbs().maxCoeff() < 1e-10);
}
