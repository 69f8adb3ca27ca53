#include "doctest.h"

#include "altzeta/algebra/bivariate_jet.hpp"
#include "altzeta/algebra/elementary.hpp"
#include "altzeta/algebra/laurent.hpp"
#include "altzeta/algebra/xseries.hpp"
#include "altzeta/special/euler.hpp"
#include "support/random_algebra.hpp"

using namespace altzeta;

namespace {

XSeries<Rational> rs(std::initializer_list<long> num, long den = 1) {
  XSeries<Rational> s(static_cast<int>(num.size()) - 1);
  int n = 0;
  for (long c : num) s[n++] = Rational(c, den);
  return s;
}

// x * (c * gen) as a series over SparsePoly.
XSeries<SparsePoly> x_times(int order, const SparsePoly& p) {
  return XSeries<SparsePoly>::monomial(order, 1, p);
}

}  // namespace

TEST_CASE("series_mul examples") {
  CHECK(rs({1, 1, 0}) * rs({1, -1, 0}) == rs({1, 0, -1}));
  CHECK(rs({0, 1}) * rs({0, 1}) == rs({0, 0}));
  auto psi = psi_omega(12).psi;
  auto one = XSeries<Rational>::monomial(12, 0, Rational(1));
  CHECK(psi * reciprocal(psi) == one);
}

TEST_CASE("series_mul rejects mismatched orders") {
  CHECK_THROWS_AS(rs({1, 1}) * rs({1, 1, 1}), TruncationError);
}

TEST_CASE("elementary series examples") {
  CHECK(elementary_series(Elementary::Tanh, 3) == rs({0, 3, 0, -1}, 3));
  CHECK(elementary_series(Elementary::Exp, 2) == rs({2, 2, 1}, 2));
  CHECK(elementary_series(Elementary::Sech, 2) == rs({2, 0, -1}, 2));
}

TEST_CASE("tanh via Euler numbers agrees with sinh/cosh") {
  const int order = 15;
  auto ratio = elementary_series(Elementary::Sinh, order) *
               reciprocal(elementary_series(Elementary::Cosh, order));
  CHECK(elementary_series(Elementary::Tanh, order) == ratio);
  auto one = XSeries<Rational>::monomial(order, 0, Rational(1));
  auto sech2 = elementary_series(Elementary::SechSquared, order);
  auto tanh = elementary_series(Elementary::Tanh, order);
  CHECK(sech2 + tanh * tanh == one);
  // 2/(1+e^w) * (1+e^w) = 2
  auto kernel = elementary_series(Elementary::EulerKernel, order);
  auto ep1 = elementary_series(Elementary::Exp, order) + one;
  CHECK(kernel * ep1 == one * Rational(2));
  CHECK(elementary_series(Elementary::Logistic, order) * ep1 ==
        elementary_series(Elementary::Exp, order));
}

TEST_CASE("csc and cot Laurent data through Bernoulli numbers") {
  const int order = 16;
  auto bern = bernoulli_numbers(order);
  auto csc = elementary_laurent(Elementary::Csc, order);
  auto cot = elementary_laurent(Elementary::Cot, order);
  CHECK(csc.valuation == -1);
  for (int k = 0; 2 * k <= order; ++k) {
    // w csc w = sum (-1)^{k+1} (2^{2k} - 2) B_{2k} w^{2k} / (2k)!
    Rational sign = k % 2 == 0 ? Rational(-1) : Rational(1);
    Rational csc_expected =
        sign * (Rational(2).pow(2 * k) - Rational(2)) * bern[2 * k] / factorial(2 * k);
    CHECK(csc.body[2 * k] == csc_expected);
    // w cot w = sum (-1)^k 2^{2k} B_{2k} w^{2k} / (2k)!
    Rational cot_expected = -sign * Rational(2).pow(2 * k) * bern[2 * k] / factorial(2 * k);
    CHECK(cot.body[2 * k] == cot_expected);
  }
}

TEST_CASE("series_compose examples") {
  SparsePoly y(sym::y);
  auto xy = x_times(2, y);
  XSeries<SparsePoly> expected(2);
  expected[0] = SparsePoly(Rational(1));
  expected[1] = y;
  expected[2] = y.pow(2) * Rational(1, 2);
  CHECK(compose(elementary_series(Elementary::Exp, 2), xy) == expected);

  auto tanh = compose(elementary_series(Elementary::Tanh, 3), x_times(3, y * Rational(1, 2)));
  auto e0 = euler_numbers_at_zero(3);
  XSeries<SparsePoly> via_euler(3);
  via_euler[0] = SparsePoly(Rational(1));
  for (int i = 0; i <= 3; ++i) via_euler[i] -= y.pow(i) * (e0[i] / factorial(i));
  CHECK(tanh == via_euler);

  auto sinh = compose(elementary_series(Elementary::Sinh, 1), x_times(1, y * Rational(1, 2)));
  CHECK(sinh.shift_down()[0] == y * Rational(1, 2));

  XSeries<SparsePoly> bad(2);
  bad[0] = SparsePoly(Rational(1));
  CHECK_THROWS_AS(compose(elementary_series(Elementary::Exp, 2), bad), ValuationError);
  CHECK_THROWS_AS(expected.shift_down(), ValuationError);
}

TEST_CASE("XSeries ring axioms and truncation coherence") {
  testing::RandomAlgebra rnd(99);
  const std::vector<Symbol> gens{sym::y, sym::da};
  for (int t = 0; t < 200; ++t) {
    auto f = rnd.poly_series(4, gens, 2, 3), g = rnd.poly_series(4, gens, 2, 3),
         h = rnd.poly_series(4, gens, 2, 3);
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * (g + h) == f * g + f * h);
    CHECK(f * g == g * f);
  }
  for (int t = 0; t < 50; ++t) {
    auto f = rnd.rational_series(10), g = rnd.rational_series(10);
    CHECK((f * g).truncated(5) == f.truncated(5) * g.truncated(5));
  }
}

TEST_CASE("exp(A+B) = exp(A) exp(B) for commuting x-multiples") {
  testing::RandomAlgebra rnd(5);
  const int order = 6;
  auto exp = elementary_series(Elementary::Exp, order);
  for (int t = 0; t < 10; ++t) {
    auto a = rnd.poly_series(order, {sym::y, sym::da}, 1, 2);
    auto b = rnd.poly_series(order, {sym::db}, 1, 2);
    a[0] = SparsePoly();
    b[0] = SparsePoly();
    CHECK(compose(exp, a + b) == compose(exp, a) * compose(exp, b));
  }
}

TEST_CASE("Laurent window bookkeeping") {
  auto low = Laurent<Rational>::monomial(-5, Rational(1), -6);
  CHECK_THROWS_AS(low * low, WindowError);
  CHECK_THROWS_AS(low.shifted(-2), WindowError);
  CHECK_THROWS_AS(low.derivative().derivative(), WindowError);
  CHECK_NOTHROW(low.derivative());

  // Truncated series: 1 + s + O(s^3), times s^-2, known through s^0.
  Laurent<Rational> trunc;
  trunc.add(0, Rational(1));
  trunc.add(1, Rational(1));
  trunc.truncate_above(2);
  auto prod = trunc * Laurent<Rational>::monomial(-2, Rational(1));
  CHECK(prod.ceiling() == 0);
  CHECK(prod.coeff(-1) == Rational(1));
  CHECK_THROWS_AS(prod.coeff(1), TruncationError);

  // Exact times exact stays exact.
  auto e = Laurent<Rational>::monomial(-1, Rational(2)) * Laurent<Rational>::monomial(3, Rational(3));
  CHECK(e.is_exact());
  CHECK(e.coeff(2) == Rational(6));
}

TEST_CASE("jet_partial examples") {
  BivariateJet<Rational> uv(2, 2);
  uv.add(1, 1, Rational(1));
  CHECK(uv.partial(1, 1) == Rational(1));
  BivariateJet<Rational> u2(2, 2);
  u2.add(2, 0, Rational(1));
  CHECK(u2.partial(2, 0) == Rational(2));
  CHECK_THROWS_AS(u2.partial(3, 0), InsufficientJetOrder);
}
