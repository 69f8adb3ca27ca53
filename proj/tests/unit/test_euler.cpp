#include "doctest.h"

#include "altzeta/special/euler.hpp"

using namespace altzeta;

namespace {

// Akiyama-Tanigawa: independent route to B_n (gives B_1 = +1/2).
std::vector<Rational> bernoulli_akiyama_tanigawa(int n_max) {
  std::vector<Rational> out;
  std::vector<Rational> a(static_cast<std::size_t>(n_max) + 1);
  for (int m = 0; m <= n_max; ++m) {
    a[m] = Rational(1, m + 1);
    for (int j = m; j >= 1; --j) a[j - 1] = Rational(j) * (a[j - 1] - a[j]);
    out.push_back(a[0]);
  }
  return out;
}

}  // namespace

TEST_CASE("euler_polynomial examples") {
  auto e1 = euler_polynomial(1);
  CHECK(e1.coeffs == std::vector<Rational>{Rational(-1, 2), Rational(1)});
  auto e3 = euler_polynomial(3);
  CHECK(e3.coeffs ==
        std::vector<Rational>{Rational(1, 4), Rational(0), Rational(-3, 2), Rational(1)});
  CHECK(euler_polynomial(0).coeffs == std::vector<Rational>{Rational(1)});
}

TEST_CASE("euler_at_zero examples and oracle") {
  CHECK(euler_at_zero(1) == Rational(-1, 2));
  CHECK(euler_at_zero(2).is_zero());
  CHECK(euler_at_zero(5) == Rational(-1, 2));
  auto b = bernoulli_numbers(32);
  auto e0 = euler_numbers_at_zero(30);
  for (int n = 0; n <= 30; ++n) {
    // E_n(0) = 2 (1 - 2^{n+1}) B_{n+1} / (n+1)
    Rational oracle = Rational(2) * (Rational(1) - Rational(2).pow(n + 1)) * b[n + 1] /
                      Rational(n + 1);
    CHECK(e0[n] == oracle);
  }
}

TEST_CASE("bernoulli examples and recurrence oracle") {
  CHECK(bernoulli(2) == Rational(1, 6));
  CHECK(bernoulli(4) == Rational(-1, 30));
  CHECK(bernoulli(12) == Rational(-691, 2730));
  CHECK(bernoulli(1) == Rational(-1, 2));
  auto at = bernoulli_akiyama_tanigawa(40);
  auto b = bernoulli_numbers(40);
  for (int n = 2; n <= 40; ++n) CHECK(b[n] == at[n]);
}

TEST_CASE("Euler polynomial identities") {
  auto e = euler_polynomials(30);
  for (int n = 0; n <= 30; ++n) {
    // E_n(z) + E_n(1+z) = 2 z^n, checked coefficientwise: E_n(1+z) = sum_k c_k (1+z)^k
    std::vector<Rational> shifted(n + 1);
    for (int k = 0; k <= n; ++k)
      for (int j = 0; j <= k; ++j) shifted[j] += e[n].coeff(k) * binomial(k, j);
    for (int j = 0; j <= n; ++j)
      CHECK(e[n].coeff(j) + shifted[j] == (j == n ? Rational(2) : Rational(0)));
    // E_i(0) + E_i(1) = 2 delta_{i0}
    CHECK(e[n](Rational(0)) + e[n](Rational(1)) == (n == 0 ? Rational(2) : Rational(0)));
  }
  // Translation: E_M(z + w) = sum_i C(M,i) E_i(z) w^{M-i}, compared at several rational points.
  for (int M = 0; M <= 15; ++M)
    for (Rational z : {Rational(0), Rational(1, 3), Rational(-2)})
      for (Rational w : {Rational(1), Rational(5, 7)}) {
        Rational rhs;
        for (int i = 0; i <= M; ++i) rhs += binomial(M, i) * e[i](z) * w.pow(M - i);
        CHECK(e[M](z + w) == rhs);
      }
  // Parity of E_{2n-1}: odd powers vanish except the leading one.
  for (int n = 1; n <= 10; ++n) {
    const auto& p = e[2 * n - 1];
    CHECK(p.coeff(2 * n - 1) == Rational(1));
    for (int k = 1; k < 2 * n - 1; k += 2) CHECK(p.coeff(k).is_zero());
    for (int k = 0; k < 2 * n - 1; k += 2) CHECK(!p.coeff(k).is_zero());
  }
}

TEST_CASE("psi_omega examples") {
  auto po = psi_omega(3);
  CHECK(po.psi[0] == Rational(1));
  CHECK(po.psi[1] == Rational(-1, 2));
  CHECK(po.psi[2].is_zero());
  CHECK(po.psi[3] == Rational(1, 4));
  auto po1 = psi_omega(1);
  CHECK(po1.omega[0] == Rational(1));
  CHECK(po1.omega[1] == Rational(-1));
  auto big = psi_omega(20);
  for (int k = 1; k <= 10; ++k) CHECK(big.psi[2 * k].is_zero());
}
