#include <cmath>
#include <random>

#include "doctest.h"
#include "entconvex/criterion.hpp"
#include "entconvex/errors.hpp"
#include "entconvex/laguerre_gauss.hpp"
#include "helpers.hpp"

using namespace entconvex;

namespace {

double entropy_of(const HermitianMatrix& r) { return von_neumann_entropy(eigendecompose(r)); }

}  // namespace

TEST_CASE("fundamental mode is a real rotationally symmetric Gaussian") {
  const LGMode g{0, 0};
  const auto c = lg_evaluate(g, 0.0, 0.0);
  CHECK(c.imag() == 0.0);
  CHECK(c.real() > 0.0);
  for (double r : {0.3, 0.9, 1.7})
    for (double phi : {0.0, 0.4, 2.0, 4.5}) {
      const auto v = lg_evaluate(g, r * std::cos(phi), r * std::sin(phi));
      CHECK(std::abs(v.imag()) < 1e-15);
      CHECK(v.real() == doctest::Approx(c.real() * std::exp(-r * r)).epsilon(1e-13));
    }
}

TEST_CASE("mirror relation between +m and -m") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int l = 0; l <= 3; ++l)
    for (int m = 1; m <= 3; ++m)
      for (int k = 0; k < 10; ++k) {
        const double x = u(rng), y = u(rng);
        // z = 0: e^{i m phi} -> e^{-i m phi} under y -> -y
        CHECK(std::abs(lg_evaluate(LGMode{l, m}, x, y) - lg_evaluate(LGMode{l, -m}, x, -y)) < 1e-14);
        // z != 0: the complex waist is shared, so only the angular phase flips
        const LGMode a{l, m, 1.0, 0.7}, b{l, -m, 1.0, 0.7};
        const auto va = lg_evaluate(a, x, y), vb = lg_evaluate(b, x, -y);
        CHECK(std::abs(va - vb) < 1e-14);
      }
}

TEST_CASE("vortex modes vanish on the axis") {
  CHECK(std::abs(lg_evaluate(LGMode{1, 1}, 0.0, 0.0)) == 0.0);
  CHECK(std::abs(lg_evaluate(LGMode{2, -3}, 0.0, 0.0)) == 0.0);
  CHECK(std::abs(lg_evaluate(LGMode{1, 0}, 0.0, 0.0)) > 0.0);
}

TEST_CASE("state tensor is normalized and fails on a small basis") {
  const auto c = lg_state_tensor(LGMode{2, 2}, LGBasis{});
  CHECK(c.norm() == doctest::Approx(1.0).epsilon(1e-6));
  CHECK_THROWS_AS(lg_state_tensor(LGMode{3, 3}, LGBasis{6, 64}), NumericalError);
  const LGMode bad{-1, 0};
  CHECK_THROWS_AS(bad.validate(), DomainError);
}

TEST_CASE("reduced density is a density") {
  const auto r = lg_reduced_density(LGMode{1, 1}, LGMode{1, -1}, 0.4, LGBasis{});
  CHECK(std::abs(r.trace() - 1.0) < 1e-6);
  CHECK_NOTHROW(r.require_density(1e-6));
}

TEST_CASE("self pair gives a flat curve") {
  const LGMode a{2, 1};
  const double s1 = entropy_of(lg_reduced_density(a, a, 1.0, LGBasis{}));
  for (double alpha : {0.0, 0.25, 0.5, 0.8})
    CHECK(std::abs(entropy_of(lg_reduced_density(a, a, alpha, LGBasis{})) - s1) < 1e-10);
}

TEST_CASE("tracing x or y gives the same spectrum") {
  for (int l = 0; l <= 3; ++l)
    for (int m = 1; m <= 3; ++m) {
      const auto c = lg_pair_tensor(LGMode{l, m}, LGMode{l, -m}, 0.3, LGBasis{});
      const auto a = eigendecompose(reduce_pure_state(c));
      const auto b = eigendecompose(reduce_pure_state_b(c));
      CHECK((a.eigenvalues - b.eigenvalues).cwiseAbs().maxCoeff() < 1e-8);
    }
}

TEST_CASE("basis-size convergence") {
  for (int l = 0; l <= 4; ++l)
    for (int m = 0; m <= 4; ++m) {
      CAPTURE(l);
      CAPTURE(m);
      const LGMode a{l, m}, b{l, -m};
      const double s40 = entropy_of(lg_reduced_density(a, b, 0.3, LGBasis{40, 64}));
      const double s44 = entropy_of(lg_reduced_density(a, b, 0.3, LGBasis{44, 64}));
      CHECK(std::abs(s40 - s44) <= 1e-4);
    }
}

TEST_CASE("x parity commutes with the endpoint densities") {
  const Matrix px = lg_x_parity(LGBasis{}.size);
  const auto r = lg_reduced_density(LGMode{2, 2}, LGMode{2, -2}, 1.0, LGBasis{});
  CHECK(testutil::max_abs(px * r.entries() - r.entries() * px) < 1e-10);
  CHECK(testutil::max_abs(px * px - Matrix::Identity(px.rows(), px.cols())) == 0.0);
}

TEST_CASE("symmetric pairs share their support") {
  // +-m modes occupy the same part of the one-coordinate space: S_NS = 0
  for (int l = 0; l <= 3; ++l)
    for (int m = 1; m <= 3; ++m) {
      const LGMode a{l, m}, b{l, -m};
      const auto r0 = lg_reduced_density(a, b, 1.0, LGBasis{});
      const auto r1 = lg_reduced_density(a, b, 0.0, LGBasis{});
      CriterionOptions opt;
      opt.qc_tol = 1e-6;
      const auto rep = evaluate_criterion(r0, r1, opt);
      CHECK(std::abs(rep.s_ns) < 1e-6);
      CHECK(rep.qc == 1);
    }
}
