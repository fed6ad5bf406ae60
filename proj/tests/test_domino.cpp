#include <doctest.h>

#include "spinchain/domino.hpp"
#include "spinchain/states.hpp"

using namespace spinchain;

namespace {

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

Matrix basis_projector(int n_spins, Index index) {
  const Index dim = dim_for_spins(n_spins);
  Matrix rho = Matrix::Zero(dim, dim);
  rho(index, index) = 1.0;
  return rho;
}

}  // namespace

TEST_CASE("cnot flips the target exactly when the control is up") {
  const auto gate = domino::cnot(1, 2, 2);
  REQUIRE(gate.gates.size() == 1);
  CHECK(gate.gates[0] == std::pair{1, 2});

  CHECK(domino::apply_to_basis(gate, 0b10) == 0b11);
  CHECK(domino::apply_to_basis(gate, 0b11) == 0b10);
  CHECK(domino::apply_to_basis(gate, 0b00) == 0b00);
  CHECK(domino::apply_to_basis(gate, 0b01) == 0b01);

  // Involution: applying the gate twice is the identity.
  CHECK(max_abs(gate.matrix * gate.matrix - Matrix::Identity(4, 4)) == 0.0);

  // Reversed roles: control 2, target 1.
  const auto reversed = domino::cnot(2, 1, 2);
  CHECK(domino::apply_to_basis(reversed, 0b01) == 0b11);

  CHECK_THROWS_AS(domino::cnot(1, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(domino::cnot(0, 1, 2), std::out_of_range);
  CHECK_THROWS_AS(domino::cnot(1, 3, 2), std::out_of_range);
}

TEST_CASE("domino cascade topples a single seeded spin down the chain") {
  const auto image3 = domino::domino_permutation(3);
  CHECK(image3[0b100] == 0b111);
  CHECK(image3[0b000] == 0b000);

  const auto image7 = domino::domino_permutation(7);
  CHECK(image7[64] == 127);

  const auto gate = domino::domino_unitary(3);
  CHECK(domino::apply_to_basis(gate, 0b100) == 0b111);
  REQUIRE(gate.gates.size() == 2);
  CHECK(gate.gates[0] == std::pair{1, 2});  // applied first
  CHECK(gate.gates[1] == std::pair{2, 3});

  CHECK_THROWS_AS(domino::domino_permutation(1), std::invalid_argument);
  CHECK_THROWS_AS(domino::domino_unitary(1), std::invalid_argument);
}

TEST_CASE("domino unitary equals the literal gate product") {
  for (int n = 2; n <= 5; ++n) {
    const Index dim = dim_for_spins(n);
    Matrix product = Matrix::Identity(dim, dim);
    // U = CNOT_{N-1,N} ... CNOT_{1,2}: the first-applied gate sits rightmost.
    for (int k = 1; k + 1 <= n; ++k) product = domino::cnot(k, k + 1, n).matrix * product;
    CHECK(max_abs(domino::domino_unitary(n).matrix - product) == 0.0);
  }
}

TEST_CASE("domino unitary is an exact 0/1 permutation") {
  for (int n = 2; n <= 6; ++n) {
    const Matrix& u = domino::domino_unitary(n).matrix;
    for (Index r = 0; r < u.rows(); ++r)
      for (Index c = 0; c < u.cols(); ++c)
        CHECK((u(r, c) == Complex{0.0} || u(r, c) == Complex{1.0}));
    CHECK(max_abs(u * u.adjoint() - Matrix::Identity(u.rows(), u.cols())) == 0.0);
  }
}

TEST_CASE("gates on disjoint pairs commute") {
  const auto a = domino::cnot(1, 2, 5);
  const auto b = domino::cnot(3, 4, 5);
  CHECK(max_abs(a.matrix * b.matrix - b.matrix * a.matrix) < 1e-14);
}

TEST_CASE("total polarization counts up and down spins") {
  CHECK(domino::total_polarization(states::all_up(5)) == doctest::Approx(2.5).epsilon(1e-14));
  CHECK(domino::total_polarization(basis_projector(3, 0b100)) ==
        doctest::Approx(-0.5).epsilon(1e-14));

  const auto gate = domino::domino_unitary(3);
  const Matrix after = gate.matrix * basis_projector(3, 0b100) * gate.matrix.adjoint();
  CHECK(domino::total_polarization(after) == doctest::Approx(1.5).epsilon(1e-14));
}

TEST_CASE("domino gain law: the cascade amplifies by N - 1") {
  for (int n = 2; n <= 7; ++n) {
    const Index seed = Index{1} << (n - 1);  // spin 1 up, rest down
    const auto gate = domino::domino_unitary(n);
    const Matrix before = basis_projector(n, seed);
    const Matrix after = gate.matrix * before * gate.matrix.adjoint();
    const double gain =
        domino::total_polarization(after) - domino::total_polarization(before);
    CHECK(gain == doctest::Approx(static_cast<double>(n - 1)).epsilon(1e-12));
  }
}

TEST_CASE("apply_to_basis rejects non-permutation input") {
  const auto gate = domino::domino_unitary(2);
  CHECK_THROWS_AS(domino::apply_to_basis(gate, -1), std::out_of_range);
  CHECK_THROWS_AS(domino::apply_to_basis(gate, 4), std::out_of_range);

  domino::GateUnitary not_permutation{Matrix(0.7 * Matrix::Identity(2, 2)), {}};
  CHECK_THROWS_AS(domino::apply_to_basis(not_permutation, 0), numerical_error);
  domino::GateUnitary zero_column{Matrix::Zero(2, 2), {}};
  CHECK_THROWS_AS(domino::apply_to_basis(zero_column, 0), numerical_error);
}
