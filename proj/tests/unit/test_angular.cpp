#include <chrono>
#include <cmath>

#include "angular_oracle.hpp"
#include "doctest.h"
#include "entconvex/angular.hpp"
#include "entconvex/errors.hpp"
#include "helpers.hpp"

using namespace entconvex;

TEST_CASE("Clebsch-Gordan examples") {
  const auto stretched = clebsch_gordan(1, 1, 1, 1, 2, 2);
  CHECK(stretched.sign == 1);
  CHECK(stretched.square == 1);

  const auto a = clebsch_gordan(1, 1, 1, -1, 0, 0);
  const auto b = clebsch_gordan(1, 0, 1, 0, 0, 0);
  const auto c = clebsch_gordan(1, -1, 1, 1, 0, 0);
  CHECK(a.sign == 1);
  CHECK(a.square == mpq_class(1, 3));
  CHECK(b.sign == -1);
  CHECK(b.square == mpq_class(1, 3));
  CHECK(c.sign == 1);
  CHECK(c.square == mpq_class(1, 3));
  CHECK(b.value() == doctest::Approx(-1 / std::sqrt(3.0)));

  CHECK(clebsch_gordan(1, 1, 1, 1, 2, 1).is_zero());  // m1 + m2 != M
  CHECK(clebsch_gordan(1, 2, 1, 0, 2, 2).is_zero());  // |m1| > l1
  CHECK_THROWS_AS(clebsch_gordan(1, 0, 1, 0, 3, 0), DomainError);
}

TEST_CASE("Clebsch-Gordan values agree with the brute-force construction") {
  for (int l = 0; l <= 2; ++l)
    for (int L = 0; L <= 2 * l; ++L)
      for (int M = -L; M <= L; ++M) {
        const auto v = oracle::coupled_state(l, L, M);
        for (int i1 = 0; i1 <= 2 * l; ++i1)
          for (int i2 = 0; i2 <= 2 * l; ++i2) {
            const double cg = clebsch_gordan(l, l - i1, l, l - i2, L, M).value();
            CHECK(std::abs(cg - v(i1 * (2 * l + 1) + i2)) < 1e-12);
          }
      }
}

TEST_CASE("exact orthogonality sums") {
  for (int M = -2; M <= 2; ++M) {
    mpq_class sum = 0;
    for (int m1 = -3; m1 <= 3; ++m1) sum += clebsch_gordan(3, m1, 3, M - m1, 2, M).square;
    CHECK(sum == 1);
  }
  // rows and columns of the unitary l1 x l2 -> L for a mid-size case
  const int l1 = 4, l2 = 3;
  for (int L = 1; L <= 7; ++L)
    for (int Lp = 1; Lp <= 7; ++Lp)
      for (int M = -std::min(L, Lp); M <= std::min(L, Lp); ++M) {
        double dot = 0;
        for (int m1 = -l1; m1 <= l1; ++m1) {
          const int m2 = M - m1;
          if (std::abs(m2) > l2) continue;
          dot += clebsch_gordan(l1, m1, l2, m2, L, M).value() *
                 clebsch_gordan(l1, m1, l2, m2, Lp, M).value();
        }
        CHECK(std::abs(dot - (L == Lp ? 1.0 : 0.0)) < 1e-13);
      }
}

TEST_CASE("l=3 L=2 endpoints are exact diagonal matrices") {
  const auto t0 = std::chrono::steady_clock::now();
  const auto one = coupled_reduced_density_exact(3, 2, 2, -2, true);
  const auto zero = coupled_reduced_density_exact(3, 2, 2, -2, false);
  const mpq_class e1[] = {mpq_class(5, 42), mpq_class(5, 21), mpq_class(2, 7), mpq_class(5, 21),
                          mpq_class(5, 42), 0, 0};
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) {
      CHECK(one[i][j] == (i == j ? e1[i] : mpq_class(0)));
      CHECK(zero[i][j] == (i == j ? e1[6 - i] : mpq_class(0)));
    }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  CHECK(secs < 1.0);
}

TEST_CASE("exact trace is one") {
  for (int l = 1; l <= 5; ++l)
    for (int L = 0; L <= 2 * l; ++L)
      for (int M = -L; M <= L; ++M) {
        const auto r = coupled_reduced_density_exact(l, L, M, -M, true);
        mpq_class tr = 0;
        for (std::size_t i = 0; i < r.size(); ++i) tr += r[i][i];
        CHECK(tr == 1);
      }
}

TEST_CASE("reduced densities match the brute-force trace-out") {
  for (int l = 0; l <= 2; ++l)
    for (int L = 0; L <= 2 * l; ++L)
      for (int M = -L; M <= L; ++M)
        for (double alpha : {0.0, 0.3, 0.5, 1.0}) {
          const auto rho = coupled_reduced_density(l, L, M, -M, alpha);
          const auto ref = oracle::reduced_density(l, L, M, -M, alpha);
          CHECK(testutil::max_abs(rho.entries() - ref.cast<cplx>()) < 1e-12);
        }
}

TEST_CASE("stretched product states are unentangled") {
  for (double alpha : {0.0, 1.0}) {
    const auto s = eigendecompose(coupled_reduced_density(1, 2, 2, -2, alpha));
    CHECK(von_neumann_entropy(s) == 0.0);
  }
}

TEST_CASE("mirror isospectrality") {
  for (int l = 1; l <= 4; ++l)
    for (int L = 1; L <= 2 * l; ++L)
      for (int M = 1; M <= L; ++M) {
        const auto a = eigendecompose(coupled_reduced_density(l, L, M, -M, 1.0));
        const auto b = eigendecompose(coupled_reduced_density(l, L, -M, M, 0.0));
        const auto c = eigendecompose(coupled_reduced_density(l, L, M, -M, 0.0));
        for (Eigen::Index i = 0; i < a.dim(); ++i) {
          CHECK(std::abs(a.eigenvalues(i) - b.eigenvalues(i)) < 1e-14);
          CHECK(std::abs(a.eigenvalues(i) - c.eigenvalues(i)) < 1e-14);
        }
      }
}

TEST_CASE("tensor and density agree") {
  const auto c = coupled_state_tensor(3, 2, 1, -1, 0.4);
  CHECK(c.norm() == doctest::Approx(1.0));
  const auto rho = coupled_reduced_density(3, 2, 1, -1, 0.4);
  CHECK(testutil::max_abs(reduce_pure_state(c).entries() - rho.entries()) < 1e-14);
}

TEST_CASE("energy check") {
  CHECK(coupled_energy_check(3, 2, 2) == 2);
  CHECK(coupled_energy_check(3, 0, 0) == 0);
  CHECK(coupled_energy_check(3, 4, 4) == 4);
  CHECK(coupled_energy_check(3, 4, 1) == 19);
}

TEST_CASE("L_z generator") {
  const Matrix lz = angular_lz(2);
  CHECK(lz(0, 0).real() == 2);
  CHECK(lz(4, 4).real() == -2);
  CHECK(std::abs(lz(0, 1)) == 0);
}

TEST_CASE("config validation") {
  const AngularConfig ok{3, 3, 2, -2}, triangle{1, 1, 3, 0}, projection{3, 3, 2, 3}, large{13, 13, 2, 0};
  CHECK_NOTHROW(ok.validate());
  CHECK_THROWS_AS(triangle.validate(), DomainError);
  CHECK_THROWS_AS(projection.validate(), DomainError);
  CHECK_THROWS_AS(large.validate(), DomainError);
  CHECK_THROWS_AS(coupled_reduced_density(3, 2, 1, -1, 1.5), DomainError);
}
