#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qsa/spin.hpp"
#include "support.hpp"

using namespace qsa;
using test::Rng;

TEST_CASE("matmul identity and Pauli involution") {
  const ComplexMatrix i2 = ComplexMatrix::identity(2);
  CHECK(max_abs_diff(matmul(i2, i2), i2) == 0.0);
  CHECK(max_abs_diff(matmul(pauli_x(), pauli_x()), i2) == 0.0);
}

TEST_CASE("matmul matches triple-loop oracle") {
  Rng rng(101);
  for (int round = 0; round < 10; ++round) {
    const ComplexMatrix a = test::random_matrix(rng, 4);
    const ComplexMatrix b = test::random_matrix(rng, 4);
    CHECK(max_abs_diff(matmul(a, b), test::oracle_matmul(a, b)) <= 1e-13);
  }
}

TEST_CASE("matmul rejects mismatched dims") {
  CHECK_THROWS_AS(matmul(ComplexMatrix::identity(2), ComplexMatrix::identity(3)),
                  DimensionError);
}

TEST_CASE("adjoint basics") {
  const ComplexMatrix i2 = ComplexMatrix::identity(2);
  CHECK(max_abs_diff(adjoint(i2), i2) == 0.0);
  CHECK(max_abs_diff(adjoint(pauli_y()), pauli_y()) == 0.0);

  Rng rng(102);
  const ComplexMatrix a = test::random_matrix(rng, 5);
  CHECK(max_abs_diff(adjoint(adjoint(a)), a) == 0.0);
}

TEST_CASE("trace basics and cyclicity") {
  CHECK(trace(ComplexMatrix::identity(4)) == Complex(4.0, 0.0));
  CHECK(trace(pauli_z()) == Complex(0.0, 0.0));

  Rng rng(103);
  for (int round = 0; round < 10; ++round) {
    const ComplexMatrix a = test::random_matrix(rng, 4);
    const ComplexMatrix b = test::random_matrix(rng, 4);
    CHECK(approx_equal(trace(matmul(a, b)), trace(matmul(b, a)), 1e-12, 0.0));
  }
}

TEST_CASE("tensor ordering: left factor is the slow index") {
  CHECK(max_abs_diff(tensor(ComplexMatrix::identity(2), ComplexMatrix::identity(2)),
                     ComplexMatrix::identity(4)) == 0.0);

  const ComplexMatrix zi = tensor(pauli_z(), ComplexMatrix::identity(2));
  const ComplexMatrix expected = ComplexMatrix::from_rows({{1.0, 0.0, 0.0, 0.0},
                                                           {0.0, 1.0, 0.0, 0.0},
                                                           {0.0, 0.0, -1.0, 0.0},
                                                           {0.0, 0.0, 0.0, -1.0}});
  CHECK(max_abs_diff(zi, expected) == 0.0);
}

TEST_CASE("tensor mixed-product rule (A(x)B)(v(x)w) = Av (x) Bw") {
  Rng rng(104);
  for (int round = 0; round < 10; ++round) {
    const ComplexMatrix a = test::random_matrix(rng, 2);
    const ComplexMatrix b = test::random_matrix(rng, 3);
    const StateVector v = test::random_state(rng, 2);
    const StateVector w = test::random_state(rng, 3);

    const auto lhs = test::apply(tensor(a, b), tensor_vec(v, w).amplitudes());
    const auto av = test::apply(a, v.amplitudes());
    const auto bw = test::apply(b, w.amplitudes());
    std::vector<Complex> rhs(6);
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 3; ++j) rhs[i * 3 + j] = av[i] * bw[j];
    }
    CHECK(test::max_abs_diff_vec(lhs, rhs) <= 1e-12);
  }
}

TEST_CASE("tensor is associative, trace is multiplicative") {
  // Exact equality needs entries whose products are exact in floating
  // point (signs and powers of two); for general entries the two
  // parenthesizations differ by one rounding of the scalar product.
  const ComplexMatrix p = ComplexMatrix::from_rows(
      {{0.5, -1.0}, {Complex(0.0, 2.0), 0.25}});
  const ComplexMatrix q = ComplexMatrix::from_rows(
      {{-2.0, 0.0}, {1.0, Complex(0.5, 0.5)}});
  const ComplexMatrix r = ComplexMatrix::from_rows(
      {{1.0, Complex(0.0, -0.5)}, {4.0, -0.25}});
  CHECK(max_abs_diff(tensor(tensor(p, q), r), tensor(p, tensor(q, r))) == 0.0);

  Rng rng(105);
  const ComplexMatrix a = test::random_matrix(rng, 2);
  const ComplexMatrix b = test::random_matrix(rng, 3);
  const ComplexMatrix c = test::random_matrix(rng, 2);
  CHECK(max_abs_diff(tensor(tensor(a, b), c), tensor(a, tensor(b, c))) <=
        1e-14);

  for (int round = 0; round < 10; ++round) {
    const ComplexMatrix x = test::random_matrix(rng, 4);
    const ComplexMatrix y = test::random_matrix(rng, 4);
    CHECK(std::abs(trace(tensor(x, y)) - trace(x) * trace(y)) <= 1e-12);
  }
}

TEST_CASE("tensor_vec basis bookkeeping and norm") {
  const StateVector v = StateVector::basis(2, 0);
  const StateVector w = StateVector::basis(2, 1);
  const StateVector vw = tensor_vec(v, w);
  CHECK(vw[0] == Complex(0.0, 0.0));
  CHECK(vw[1] == Complex(1.0, 0.0));
  CHECK(vw[2] == Complex(0.0, 0.0));
  CHECK(vw[3] == Complex(0.0, 0.0));

  Rng rng(106);
  const StateVector a = test::random_state(rng, 3);
  const StateVector b = test::random_state(rng, 4);
  const StateVector ab = tensor_vec(a, b);  // ctor re-checks unit norm
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      CHECK(std::abs(ab[i * 4 + j] - a[i] * b[j]) <= 1e-15);
    }
  }
}

TEST_CASE("state vectors must be normalized and finite") {
  CHECK_THROWS_AS(StateVector({Complex(1.0, 0.0), Complex(1.0, 0.0)}),
                  NormalizationError);
  CHECK_THROWS_AS(StateVector(std::vector<Complex>{}), DimensionError);
}

TEST_CASE("factor shape validation") {
  CHECK_THROWS_AS(FactorShape({2, 0}), ShapeError);
  CHECK_THROWS_AS(FactorShape{std::vector<std::size_t>{}}, ShapeError);
  const FactorShape shape{2, 3};
  CHECK(shape.total_dim() == 6);
  CHECK(shape.factor_dim(2) == 3);
  CHECK_THROWS_AS(shape.factor_dim(3), DimensionError);
  CHECK_THROWS_AS(shape.validate_against(5), ShapeError);
}

TEST_CASE("partial trace of a product state factors out") {
  Rng rng(107);
  const DensityMatrix rho1 = test::random_density(rng, FactorShape{2});
  const DensityMatrix rho2 = test::random_density(rng, FactorShape{3});
  const ComplexMatrix joint = tensor(rho1.matrix(), rho2.matrix());

  const ComplexMatrix back =
      partial_trace(joint, FactorShape{2, 3}, {1});
  CHECK(max_abs_diff(back, rho1.matrix()) <= 1e-12);
}

TEST_CASE("partial trace of the singlet projector is maximally mixed") {
  const ComplexMatrix proj = outer(singlet(), singlet());
  const ComplexMatrix reduced = partial_trace(proj, FactorShape{2, 2}, {1});
  const ComplexMatrix half = Complex(0.5, 0.0) * ComplexMatrix::identity(2);
  CHECK(max_abs_diff(reduced, half) <= 1e-15);
}

TEST_CASE("partial trace matches the summation oracle") {
  Rng rng(108);
  for (int round = 0; round < 10; ++round) {
    const DensityMatrix rho = test::random_density(rng, FactorShape{2, 4});
    const ComplexMatrix expected =
        test::oracle_partial_trace(rho.matrix(), {2, 4}, {1});
    CHECK(max_abs_diff(partial_trace(rho.matrix(), FactorShape{2, 4}, {1}),
                       expected) <= 1e-12);

    const ComplexMatrix expected2 =
        test::oracle_partial_trace(rho.matrix(), {2, 4}, {2});
    CHECK(max_abs_diff(partial_trace(rho.matrix(), FactorShape{2, 4}, {2}),
                       expected2) <= 1e-12);
  }
}

TEST_CASE("partial trace preserves the trace and composes") {
  Rng rng(109);
  const DensityMatrix rho = test::random_density(rng, FactorShape{2, 3, 2});

  const ComplexMatrix kept3 =
      partial_trace(rho.matrix(), FactorShape{2, 3, 2}, {3});
  CHECK(std::abs(trace(kept3) - Complex(1.0, 0.0)) <= 1e-12);

  // trace factor 2 first, then factor 1 of what remains
  const ComplexMatrix step1 =
      partial_trace(rho.matrix(), FactorShape{2, 3, 2}, {1, 3});
  const ComplexMatrix step2 = partial_trace(step1, FactorShape{2, 2}, {2});
  CHECK(max_abs_diff(step2, kept3) <= 1e-12);
}

TEST_CASE("partial trace rejects bad arguments") {
  const ComplexMatrix m = ComplexMatrix::identity(4);
  CHECK_THROWS_AS(partial_trace(m, FactorShape{2, 3}, {1}), ShapeError);
  CHECK_THROWS_AS(partial_trace(m, FactorShape{2, 2}, {}), DimensionError);
  CHECK_THROWS_AS(partial_trace(m, FactorShape{2, 2}, {3}), DimensionError);
  CHECK_THROWS_AS(partial_trace(m, FactorShape{2, 2}, {1, 1}), DimensionError);
}

TEST_CASE("embed_on_factors places operators with identity padding") {
  const FactorShape shape{2, 2};
  CHECK(max_abs_diff(embed_on_factors(pauli_x(), shape, {2}),
                     tensor(ComplexMatrix::identity(2), pauli_x())) == 0.0);
  CHECK(max_abs_diff(embed_on_factors(pauli_x(), shape, {1}),
                     tensor(pauli_x(), ComplexMatrix::identity(2))) == 0.0);

  // non-contiguous set: acting on factors {1,3} of a three-factor space
  Rng rng(110);
  const ComplexMatrix op = test::random_matrix(rng, 4);
  const ComplexMatrix embedded =
      embed_on_factors(op, FactorShape{2, 2, 2}, {1, 3});
  for (std::size_t i1 = 0; i1 < 2; ++i1)
    for (std::size_t i2 = 0; i2 < 2; ++i2)
      for (std::size_t i3 = 0; i3 < 2; ++i3)
        for (std::size_t j1 = 0; j1 < 2; ++j1)
          for (std::size_t j2 = 0; j2 < 2; ++j2)
            for (std::size_t j3 = 0; j3 < 2; ++j3) {
              const Complex want =
                  (i2 == j2) ? op(i1 * 2 + i3, j1 * 2 + j3) : Complex(0.0, 0.0);
              const std::size_t row = (i1 * 2 + i2) * 2 + i3;
              const std::size_t col = (j1 * 2 + j2) * 2 + j3;
              CHECK(embedded(row, col) == want);
            }

  CHECK_THROWS_AS(embed_on_factors(op, FactorShape{2, 2, 2}, {1}),
                  DimensionError);
}

TEST_CASE("matrices reject non-finite entries") {
  std::vector<Complex> bad{Complex(1.0, 0.0), Complex(0.0, 0.0),
                           Complex(0.0, 0.0),
                           Complex(std::nan(""), 0.0)};
  CHECK_THROWS_AS(ComplexMatrix(2, std::move(bad)), Error);
}
