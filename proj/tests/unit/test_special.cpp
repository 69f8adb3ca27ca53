#include "doctest.h"

#include "altzeta/algebra/errors.hpp"
#include "altzeta/mzv/amzv.hpp"
#include "altzeta/special/gamma_ratio.hpp"
#include "altzeta/special/rm.hpp"
#include "altzeta/special/zeta_ring.hpp"

using namespace altzeta;

namespace {

SparsePoly z(int n) { return SparsePoly(sym::zeta(n)); }
SparsePoly A() { return SparsePoly(sym::a); }
SparsePoly B() { return SparsePoly(sym::b); }

// exp by the plain Taylor sum of powers, truncated in total (a,b)-degree.
SparsePoly exp_by_powers(const SparsePoly& e, int max_degree) {
  auto keep = [max_degree](const Monomial& m) {
    return m.exponent(sym::a) + m.exponent(sym::b) <= max_degree;
  };
  SparsePoly total(Rational(1)), power(Rational(1));
  for (int k = 1; k <= max_degree; ++k) {
    power = SparsePoly::multiply_truncated(power, e, keep) * Rational(1, k);
    total += power;
  }
  return total;
}

}  // namespace

TEST_CASE("even zeta normalization") {
  CHECK(even_zeta_ratio(1) == Rational(1));
  CHECK(even_zeta_ratio(2) == Rational(2, 5));
  CHECK(even_zeta_ratio(3) == Rational(8, 35));
  CHECK(normalize_even_zetas(z(4) * z(3)) == z(2).pow(2) * z(3) * Rational(2, 5));
  for (int k = 2; k <= 10; ++k) {
    Real lhs = eval_zeta(2 * k, 40);
    Real rhs = pow(eval_zeta(2, 40), k) * even_zeta_ratio(k);
    CHECK(abs(lhs - rhs) < pow10(-38, lhs.precision()));
  }
  CHECK(zeta_weight(Monomial{{sym::zeta(3), 2}, {sym::zeta(2), 1}}) == 8);
  CHECK(zeta_indices(Monomial{{sym::zeta(3), 2}, {sym::zeta(2), 1}}) == std::vector<int>{2, 3, 3});
}

TEST_CASE("gamma ratio global expansion") {
  SparsePoly ab = A() * B();
  SparsePoly sum = A() + B();
  SparsePoly expected = sum - z(2) * ab * sum + z(3) * ab * sum.pow(2);
  CHECK(gamma_ratio_global(3) == expected);

  // Against exponentiation by powers of the log-Gamma exponent.
  const int W = 9;
  SparsePoly exponent;
  auto lg = symbolic_log_gamma(W);
  for (int n = 1; n <= W; ++n)
    exponent += lg[n] * (A().pow(n) + B().pow(n) - sum.pow(n));
  auto keep = [W](const Monomial& m) { return m.exponent(sym::a) + m.exponent(sym::b) <= W + 1; };
  CHECK(gamma_ratio_global(W) == SparsePoly::multiply_truncated(sum, exp_by_powers(exponent, W), keep));
}

TEST_CASE("gamma ratio structural properties") {
  const int W = 10;
  auto g = gamma_ratio_global(W);
  CHECK(is_gamma_free(g));
  CHECK(g.substitute(sym::b, SparsePoly()) == A());
  CHECK(g.substitute(sym::a, SparsePoly()) == B());
  // Symmetry G(a,b) = G(b,a).
  auto swapped = g.substitute(sym::a, SparsePoly(sym::u))
                     .substitute(sym::b, A())
                     .substitute(sym::u, B());
  CHECK(swapped == g);
  // Homogeneity: degree-d part has zeta weight d-1.
  for (const auto& [mono, c] : g.terms())
    CHECK(zeta_weight(mono) == mono.exponent(sym::a) + mono.exponent(sym::b) - 1);
}

TEST_CASE("gamma ratio jet") {
  const int W = 8;
  auto jet = gamma_ratio_jet(4, 4, -20, W);
  // Symmetry under (u, s) <-> (v, -s).
  for (int p = 0; p <= 4; ++p)
    for (int q = 0; q <= 4; ++q) CHECK(jet.coeff(p, q) == jet.coeff(q, p).reflected());
  // u = s, v = 0 gives G(0, s) = s; u-terms beyond the jet order start at s^5.
  LaurentPoly at_zero;
  for (int p = 0; p <= 4; ++p) at_zero += jet.coeff(p, 0).shifted(p);
  CHECK(at_zero.coeff(1) == SparsePoly(Rational(1)));
  for (int e = 2; e <= 4; ++e) CHECK(at_zero.coeff(e).is_zero());
  // Leading terms: G = (u+v) - zeta2 (-s+u)(s+v)(u+v) + ...
  CHECK(jet.coeff(1, 0).coeff(0) == SparsePoly(Rational(1)));
  CHECK(jet.coeff(1, 0).coeff(2) == z(2));
  CHECK(jet.coeff(0, 0).is_exact() == false);
  CHECK(jet.coeff(2, 2).ceiling() == W + 1 - 4);
  for (const auto& [key, c] : jet.terms())
    for (const auto& [e, poly] : c.terms()) CHECK(is_gamma_free(poly));
  CHECK_THROWS_AS(gamma_ratio_jet(6, 6, -20, 8), InsufficientJetOrder);
  CHECK_THROWS_AS(jet.partial(5, 0), InsufficientJetOrder);
}

TEST_CASE("gamma ratio numeric cross-check at (0.1, 0.2)") {
  const int digits = 40;
  const int W = 60;
  const mpfr_prec_t bits = bits_for_digits(digits, 10);
  std::vector<Real> lg(W + 2, Real(0, bits));
  lg[1] = -Real::euler_gamma(bits);
  for (int n = 2; n <= W + 1; ++n) lg[n] = eval_zeta(n, digits) * Rational(n % 2 == 0 ? 1 : -1, n);
  auto g = gamma_ratio_series<Real>(W + 1, lg, Real(1, bits));
  const Real a(Rational(1, 10), bits), b(Rational(1, 5), bits);
  Real total(0, bits);
  for (int d = 0; d <= W + 1; ++d)
    for (int i = 0; i <= d; ++i) total += g.coeff(i, d - i) * pow(a, i) * pow(b, d - i);
  Real direct = eval_gamma(Real(1, bits) + a, digits) * eval_gamma(Real(1, bits) + b, digits) /
                eval_gamma(a + b, digits);
  CHECK(abs(total - direct) < pow10(-25, bits));
}

TEST_CASE("rm coefficients") {
  auto r = rm_coefficients(4);
  REQUIRE(r.size() == 4);
  CHECK(r[0] == Rational(3, 32));
  CHECK(r[1] == Rational(151, 192));
  CHECK(r[2] == Rational(3287, 1536));
  CHECK(r[3] == Rational(10629, 2560));
  auto e = rm_expansion(6);
  for (int j = 0; j <= 2; ++j) CHECK(e.f[j].is_zero());
  for (std::size_t j = 1; j < e.f.size(); j += 2) CHECK(e.f[j].is_zero());
  CHECK_THROWS_AS(rm_expansion(0), std::domain_error);
}

TEST_CASE("rm Laurent expansion matches direct evaluation") {
  const int digits = 40;
  const mpfr_prec_t bits = bits_for_digits(digits, 10);
  const Real t(Rational(1, 50), bits);
  const Real pi = Real::pi(bits);
  auto e = rm_expansion(14);
  Real series(0, bits);
  for (std::size_t j = 0; j < e.f.size(); ++j)
    series += pow(pi, static_cast<long>(j)) * pow(t, static_cast<long>(j) - 3) * e.f[j];
  Real sn = sin(pi * t);
  Real cs = Real(1, bits) / sn;
  Real ct(bits);
  mpfr_cot(ct.get(), (pi * t).get(), MPFR_RNDN);
  Real direct = -Real(5, bits) / (Real(24, bits) * pow(t, 3)) + pow(pi, 3) * pow(cs, 3) * Rational(1, 12) -
                pow(pi, 3) * cs * Rational(1, 48) + pi * pi * ct * cs / (Real(8, bits) * t);
  CHECK(abs(series - direct) < pow10(-30, bits));
  // and through zeta values: sum_m r_m zeta(2m+2) t^{2m-1}
  Real via_zeta(0, bits);
  for (int m = 1; m <= 14; ++m) via_zeta += eval_zeta(2 * m + 2, digits) * pow(t, 2 * m - 1) * e.r[m];
  CHECK(abs(via_zeta - direct) < pow10(-30, bits));
}
