#include "entconvex/angular.hpp"

#include <cmath>
#include <cstdlib>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <tuple>

#include "entconvex/errors.hpp"

namespace entconvex {

double ExactCoefficient::value() const {
  if (sign == 0) return 0.0;
  return sign * std::sqrt(square.get_d());
}

std::string ExactCoefficient::str() const {
  if (sign == 0) return "0";
  return std::string(sign < 0 ? "-" : "") + "sqrt(" + square.get_str() + ")";
}

namespace {

const mpz_class& factorial(int n) {
  static const std::vector<mpz_class> table = [] {
    std::vector<mpz_class> t(4 * kMaxCgArgument + 2);
    t[0] = 1;
    for (std::size_t i = 1; i < t.size(); ++i) t[i] = t[i - 1] * static_cast<unsigned long>(i);
    return t;
  }();
  if (n < 0 || static_cast<std::size_t>(n) >= table.size())
    throw DomainError("clebsch_gordan: argument outside the supported range");
  return table[static_cast<std::size_t>(n)];
}

ExactCoefficient racah(int j1, int m1, int j2, int m2, int J, int M) {
  // (2J+1) (J+j1-j2)! (J-j1+j2)! (j1+j2-J)! / (j1+j2+J+1)!  times the m-dependent factorials
  mpq_class pref(factorial(J + j1 - j2) * factorial(J - j1 + j2) * factorial(j1 + j2 - J) *
                     (2 * J + 1) * factorial(J + M) * factorial(J - M) * factorial(j1 - m1) *
                     factorial(j1 + m1) * factorial(j2 - m2) * factorial(j2 + m2),
                 factorial(j1 + j2 + J + 1));
  pref.canonicalize();

  mpq_class sum = 0;
  const int kmin = std::max({0, j2 - J - m1, j1 - J + m2});
  const int kmax = std::min({j1 + j2 - J, j1 - m1, j2 + m2});
  for (int k = kmin; k <= kmax; ++k) {
    mpz_class den = factorial(k) * factorial(j1 + j2 - J - k) * factorial(j1 - m1 - k) *
                    factorial(j2 + m2 - k) * factorial(J - j2 + m1 + k) * factorial(J - j1 - m2 + k);
    mpq_class term(1, den);
    term.canonicalize();
    if (k % 2) sum -= term;
    else sum += term;
  }
  ExactCoefficient c;
  c.sign = sgn(sum);
  c.square = pref * sum * sum;
  return c;
}

struct CgCache {
  std::shared_mutex mutex;
  std::map<std::tuple<int, int, int, int, int>, ExactCoefficient> values;
};

CgCache& cache() {
  static CgCache c;
  return c;
}

}  // namespace

ExactCoefficient clebsch_gordan(int l1, int m1, int l2, int m2, int L, int M) {
  if (l1 < 0 || l2 < 0 || L < 0 || L < std::abs(l1 - l2) || L > l1 + l2)
    throw DomainError("clebsch_gordan: triangle condition violated");
  if (l1 > kMaxCgArgument || l2 > kMaxCgArgument || L > kMaxCgArgument)
    throw DomainError("clebsch_gordan: angular momentum outside the supported range");
  if (m1 + m2 != M || std::abs(m1) > l1 || std::abs(m2) > l2 || std::abs(M) > L) return {};

  const auto key = std::make_tuple(l1, m1, l2, m2, L);
  auto& c = cache();
  {
    std::shared_lock lock(c.mutex);
    auto it = c.values.find(key);
    if (it != c.values.end()) return it->second;
  }
  ExactCoefficient v = racah(l1, m1, l2, m2, L, M);
  std::unique_lock lock(c.mutex);
  return c.values.emplace(key, std::move(v)).first->second;
}

void AngularConfig::validate() const {
  if (l1 < 0 || l2 < 0 || l1 > kMaxAngular || l2 > kMaxAngular)
    throw DomainError("angular momenta must lie in [0, 12]");
  if (L < std::abs(l1 - l2) || L > l1 + l2) throw DomainError("L=" + std::to_string(L) + " violates the triangle condition for l1=" +
                      std::to_string(l1) + ", l2=" + std::to_string(l2));
  if (std::abs(M) > L) throw DomainError("|M|=" + std::to_string(std::abs(M)) + " exceeds L=" + std::to_string(L));
}

namespace {

void check_pair(int l, int L, int M, int Mprime) {
  AngularConfig{l, l, L, M}.validate();
  AngularConfig{l, l, L, Mprime}.validate();
}

// amplitudes c(i, k) for m1 = l - i, m2 = l - k
Eigen::MatrixXd amplitude_matrix(int l, int L, int M) {
  const int d = 2 * l + 1;
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(d, d);
  for (int i = 0; i < d; ++i) {
    const int m1 = l - i, m2 = M - m1;
    if (std::abs(m2) <= l) a(i, l - m2) = clebsch_gordan(l, m1, l, m2, L, M).value();
  }
  return a;
}

}  // namespace

RationalMatrix coupled_reduced_density_exact(int l, int L, int M, int Mprime, bool alpha_is_one) {
  check_pair(l, L, M, Mprime);
  const int mm = alpha_is_one ? M : Mprime;
  const int d = 2 * l + 1;
  RationalMatrix rho(static_cast<std::size_t>(d), std::vector<mpq_class>(static_cast<std::size_t>(d), 0));
  // With m1 + m2 fixed, only the diagonal survives.
  for (int i = 0; i < d; ++i) {
    const int m1 = l - i, m2 = mm - m1;
    if (std::abs(m2) <= l) rho[i][i] = clebsch_gordan(l, m1, l, m2, L, mm).square;
  }
  return rho;
}

CoefficientTensor coupled_state_tensor(int l, int L, int M, int Mprime, double alpha) {
  check_pair(l, L, M, Mprime);
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw DomainError("alpha outside [0, 1]");
  Eigen::MatrixXd c = std::sqrt(alpha) * amplitude_matrix(l, L, M);
  if (alpha < 1.0) c += std::sqrt(1.0 - alpha) * amplitude_matrix(l, L, Mprime);
  return CoefficientTensor(c.cast<cplx>()).normalized();
}

HermitianMatrix coupled_reduced_density(int l, int L, int M, int Mprime, double alpha) {
  return reduce_pure_state(coupled_state_tensor(l, L, M, Mprime, alpha), "angular-m");
}

int coupled_energy_check(int l, int L, int M) {
  AngularConfig{l, l, L, M}.validate();
  return L * (L + 1) - M * M;
}

Matrix angular_lz(int l) {
  const int d = 2 * l + 1;
  Matrix z = Matrix::Zero(d, d);
  for (int i = 0; i < d; ++i) z(i, i) = double(l - i);
  return z;
}

}  // namespace entconvex
