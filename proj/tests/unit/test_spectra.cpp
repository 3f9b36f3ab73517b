#include <cmath>
#include <limits>
#include <random>

#include "doctest.h"
#include "entconvex/errors.hpp"
#include "entconvex/spectra.hpp"
#include "helpers.hpp"

using namespace entconvex;
using testutil::diag;
using testutil::max_abs;

TEST_CASE("identity over two has one twofold block") {
  const auto s = eigendecompose(HermitianMatrix(diag({0.5, 0.5})));
  CHECK(s.eigenvalues(0) == doctest::Approx(0.5));
  CHECK(s.eigenvalues(1) == doctest::Approx(0.5));
  REQUIRE(s.blocks.size() == 1);
  CHECK(s.blocks[0].size == 2);
  CHECK(von_neumann_entropy(s, 2.0) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("angular l=3 L=2 diagonal splits into degeneracy blocks") {
  const auto s = eigendecompose(
      HermitianMatrix(diag({5.0 / 42, 5.0 / 21, 2.0 / 7, 5.0 / 21, 5.0 / 42, 0, 0})));
  REQUIRE(s.blocks.size() == 4);
  CHECK(s.blocks[0].size == 1);
  CHECK(s.blocks[0].value == doctest::Approx(2.0 / 7));
  CHECK(s.blocks[1].size == 2);
  CHECK(s.blocks[1].value == doctest::Approx(5.0 / 21));
  CHECK(s.blocks[2].size == 2);
  CHECK(s.blocks[2].value == doctest::Approx(5.0 / 42));
  CHECK(s.blocks[3].size == 2);
  CHECK(s.support.size() == 5);
  CHECK(std::abs(von_neumann_entropy(s, std::exp(1.0)) - 1.548) < 1e-3);
}

TEST_CASE("rank-one projector") {
  std::mt19937_64 rng(3);
  const Matrix p = testutil::random_density(4, rng, 1);
  const auto s = eigendecompose(HermitianMatrix(p));
  CHECK(s.eigenvalues(0) == doctest::Approx(1.0));
  for (int i = 1; i < 4; ++i) CHECK(std::abs(s.eigenvalues(i)) < 1e-12);
  CHECK(s.support.size() == 1);
  CHECK(von_neumann_entropy(s) == 0.0);
}

TEST_CASE("spectrum invariants on random input") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const Eigen::Index d = 2 + trial % 9;
    const Matrix rho = testutil::random_density(d, rng);
    const auto s = eigendecompose(HermitianMatrix(rho));
    const Matrix gram = s.eigenvectors.adjoint() * s.eigenvectors;
    CHECK(max_abs(gram - Matrix::Identity(d, d)) < 1e-10);
    CHECK(max_abs(s.reconstruct() - rho) < 1e-9);
    for (Eigen::Index i = 1; i < d; ++i) CHECK(s.eigenvalues(i - 1) >= s.eigenvalues(i));
  }
}

TEST_CASE("block structure respects the degeneracy tolerance") {
  const auto s = eigendecompose(HermitianMatrix(diag({0.4, 0.4 - 1e-11, 0.2 - 5e-12, 0.2})));
  REQUIRE(s.blocks.size() == 2);
  CHECK(s.blocks[0].size == 2);
  CHECK(s.blocks[1].size == 2);
  const auto t = eigendecompose(HermitianMatrix(diag({0.4, 0.4 - 1e-6, 0.2})));
  CHECK(t.blocks.size() == 3);
}

TEST_CASE("non-Hermitian input is rejected") {
  Matrix m = diag({0.5, 0.5});
  m(0, 1) = 1e-6;
  CHECK_THROWS_AS(HermitianMatrix{m}, DomainError);
}

TEST_CASE("density check") {
  CHECK_NOTHROW(HermitianMatrix(diag({0.3, 0.7})).require_density());
  CHECK_THROWS_AS(HermitianMatrix(diag({0.3, 0.6})).require_density(), NumericalError);
  CHECK_THROWS_AS(HermitianMatrix(diag({1.1, -0.1})).require_density(), NumericalError);
}

TEST_CASE("negative eigenvalue makes the entropy fail") {
  const auto s = eigendecompose(HermitianMatrix(diag({1.1, -0.1})));
  CHECK_THROWS(von_neumann_entropy(s));
}

TEST_CASE("relative entropy examples") {
  const auto a = eigendecompose(HermitianMatrix(diag({0.75, 0.25})));
  const auto b = eigendecompose(HermitianMatrix(diag({0.5, 0.5})));
  CHECK(relative_entropy(a, a) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(relative_entropy(a, b, 2.0) ==
        doctest::Approx(0.75 * std::log2(1.5) + 0.25 * std::log2(0.5)).epsilon(1e-12));
  CHECK(std::abs(relative_entropy(a, b, 2.0) - 0.18872) < 1e-5);

  const auto p0 = eigendecompose(HermitianMatrix(diag({1.0, 0.0})));
  const auto p1 = eigendecompose(HermitianMatrix(diag({0.0, 1.0})));
  CHECK(relative_entropy(p0, p1) == std::numeric_limits<double>::infinity());
  CHECK_THROWS(relative_entropy(a, eigendecompose(HermitianMatrix(diag({1.0, 0.0, 0.0})))));
}

TEST_CASE("relative entropy is non-negative") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const Eigen::Index d = 2 + trial % 5;
    const auto r = eigendecompose(HermitianMatrix(testutil::random_density(d, rng)));
    const auto s = eigendecompose(HermitianMatrix(testutil::random_density(d, rng)));
    CHECK(relative_entropy(r, s) >= -1e-10);
  }
}

TEST_CASE("entropy is unitarily invariant") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    const Eigen::Index d = 3 + trial % 4;
    const Matrix rho = testutil::random_density(d, rng);
    const Matrix u = haar_unitary(d, rng);
    const double s1 = von_neumann_entropy(eigendecompose(HermitianMatrix(rho)));
    const double s2 = von_neumann_entropy(
        eigendecompose(HermitianMatrix(u * rho * u.adjoint(), {}, 1e-10)));
    CHECK(std::abs(s1 - s2) < 1e-10);
  }
}

TEST_CASE("pure-state reduction") {
  SUBCASE("product state is unentangled") {
    Vector u(3), v(2);
    u << 0.6, cplx(0, 0.8), 0.0;
    v << cplx(1, 1) / std::sqrt(2.0), 0.0;
    const CoefficientTensor c(u * v.transpose());
    const auto s = eigendecompose(reduce_pure_state(c));
    CHECK(s.support.size() == 1);
    CHECK(von_neumann_entropy(s) == 0.0);
  }
  SUBCASE("Bell state") {
    Matrix a = Matrix::Zero(2, 2);
    a(0, 0) = a(1, 1) = 1.0 / std::sqrt(2.0);
    const auto rho = reduce_pure_state(CoefficientTensor(a));
    CHECK(max_abs(rho.entries() - diag({0.5, 0.5})) < 1e-15);
  }
  SUBCASE("squared singular values") {
    Matrix a(2, 2);
    a << 1, 1, 1, 0;
    a /= std::sqrt(3.0);
    const auto rho = reduce_pure_state(CoefficientTensor(a));
    Matrix direct = Matrix::Zero(2, 2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int b = 0; b < 2; ++b) direct(i, j) += a(i, b) * std::conj(a(j, b));
    CHECK(max_abs(rho.entries() - direct) < 1e-15);
    // singular values of [[1,1],[1,0]] are the golden ratio pair
    const double phi = (1 + std::sqrt(5.0)) / 2;
    const auto s = eigendecompose(rho);
    CHECK(s.eigenvalues(0) == doctest::Approx(phi * phi / 3).epsilon(1e-13));
    CHECK(s.eigenvalues(1) == doctest::Approx(1.0 / (3 * phi * phi)).epsilon(1e-13));
  }
  SUBCASE("unnormalized input is rejected") {
    CHECK_THROWS_AS(reduce_pure_state(CoefficientTensor(Matrix::Identity(2, 2))), DomainError);
  }
}

TEST_CASE("both sides of a pure state are isospectral") {
  std::mt19937_64 rng(23);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 10; ++trial) {
    Matrix a(3 + trial % 3, 5);
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      for (Eigen::Index j = 0; j < a.cols(); ++j) a(i, j) = {g(rng), g(rng)};
    const auto c = CoefficientTensor(a).normalized();
    const auto sa = eigendecompose(reduce_pure_state(c));
    const auto sb = eigendecompose(reduce_pure_state_b(c));
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      CHECK(std::abs(sa.eigenvalues(i) - sb.eigenvalues(i)) < 1e-9);
  }
}

TEST_CASE("superpose weights the endpoints") {
  Matrix a = Matrix::Zero(2, 2), b = Matrix::Zero(2, 2);
  a(0, 0) = 1;
  b(1, 1) = 1;
  const auto c = superpose(CoefficientTensor(a), CoefficientTensor(b), 0.25);
  CHECK(std::abs(c.amplitudes()(0, 0) - 0.5) < 1e-15);
  CHECK(std::abs(c.amplitudes()(1, 1) - std::sqrt(0.75)) < 1e-15);
}
