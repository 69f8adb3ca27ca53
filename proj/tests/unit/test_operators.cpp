#include "doctest.h"

#include <random>

#include "altzeta/algebra/elementary.hpp"
#include "altzeta/operators/builders.hpp"
#include "altzeta/operators/exchange.hpp"
#include "altzeta/special/euler.hpp"
#include "altzeta/special/gamma_ratio.hpp"

using namespace altzeta;

namespace {

SparsePoly dmono(int i, int j) { return SparsePoly(Monomial{{sym::da, i}, {sym::db, j}}, Rational(1)); }

LaurentPoly term(Rational c, int i, int j, int e) { return LaurentPoly::monomial(e, dmono(i, j) * c); }

LaurentPoly sc(Rational c, int e) { return LaurentPoly::monomial(e, SparsePoly(c)); }

SeriesXS zero_series(int order) { return SeriesXS(order); }

struct Gen {
  std::mt19937 rng;
  explicit Gen(unsigned seed) : rng(seed) {}
  int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
  Rational small() { return Rational(pick(-5, 5), pick(1, 4)); }

  // Polynomial in y, da, db of bounded degrees.
  SparsePoly integrand(bool with_da, bool with_db) {
    SparsePoly p;
    const int n = pick(1, 4);
    for (int t = 0; t < n; ++t)
      p.add_term(Monomial{{sym::y, pick(0, 3)}, {sym::da, with_da ? pick(0, 2) : 0},
                          {sym::db, with_db ? pick(0, 2) : 0}},
                 small());
    return p;
  }
  PreLaplaceSeries pre(int order, bool with_da = true, bool with_db = true) {
    XSeries<SparsePoly> b(order);
    for (int n = 0; n <= order; ++n) b[n] = integrand(with_da, with_db);
    return PreLaplaceSeries(b);
  }
  // Laurent polynomial in one variable with exponents in [lo, hi].
  LaurentPoly laurent(int lo, int hi) {
    LaurentPoly l;
    for (int e = lo; e <= hi; ++e)
      if (pick(0, 2) != 0) l.add(e, SparsePoly(small()));
    return l;
  }
  SeriesXS series(int order, int lo, int hi) {
    SeriesXS s(order);
    for (int n = 0; n <= order; ++n) s[n] = laurent(lo, hi);
    return s;
  }
};

SeriesXS L2_of(const SeriesXS& phi, int order) {
  const OperatorSeries L2 = build_L2(order);
  return apply(L2, jet_in_b(phi, order));
}

}  // namespace

TEST_CASE("formal Laplace monomial rule") {
  const SWindow w{-10, 10};
  XSeries<SparsePoly> body(1);
  body[0] = SparsePoly(sym::y).pow(2) + SparsePoly(Rational(1));
  body[1] = SparsePoly(sym::y) * SparsePoly(sym::da);
  const auto L = formal_laplace(PreLaplaceSeries(body), w);
  CHECK(L[0] == sc(2, -3) + sc(1, -1));
  CHECK(L[1] == term(1, 1, 0, -2));
  CHECK_THROWS_AS(formal_laplace(PreLaplaceSeries(body), SWindow{-2, 10}), WindowError);
  XSeries<SparsePoly> bad(0);
  bad[0] = SparsePoly(sym::s);
  CHECK_THROWS_AS((void)PreLaplaceSeries(bad), AlgebraError);
}

TEST_CASE("D1 coefficients") {
  const auto D1 = build_D1(5);
  CHECK(D1.substitution == Substitution::AMinusSBEqualsS);
  CHECK(D1[0].is_zero());
  const LaurentPoly expected = term(Rational(1, 4), 1, 1, -2) + term(Rational(-1, 8), 1, 2, -1) +
                               term(Rational(1, 4), 1, 0, -3) + term(Rational(-1, 4), 0, 2, -2) +
                               term(Rational(1, 24), 0, 3, -1);
  CHECK(D1[3] == expected);
  CHECK(format_operator_coefficient(D1[3], OutputFormat::Text) ==
        "∂_a∂_b/(4s²) − ∂_a(∂_b)²/(8s) + ∂_a/(4s³) − (∂_b)²/(4s²) + (∂_b)³/(24s)");
}

TEST_CASE("D1 at first order by hand") {
  // With d = da - db and e = da + db the x^1 part of the bracket is
  // -dy/4 - dy/4 + dy/4 - ey/4 = -y da / 2, and s L{y} = 1/s.
  CHECK(build_D1(4)[1] == term(Rational(-1, 2), 1, 0, -1));
}

TEST_CASE("D2 on constants gives Euler numbers") {
  const int K = 13;
  const auto D2 = build_D2(K);
  CHECK(D2[0].is_zero());
  const auto one = polynomial_jet(SparsePoly(Rational(1)), Substitution::BEqualsS, K, K);
  const auto r = apply(D2, one);
  const auto B = bernoulli_numbers(K + 2);
  for (int n = 1; n <= K; ++n) {
    // E_n(0) = -2 (2^{n+1} - 1) B_{n+1} / (n+1)
    Rational pow2(1);
    for (int t = 0; t <= n; ++t) pow2 = pow2 * Rational(2);
    const Rational en0 = Rational(-2) * (pow2 - Rational(1)) * B[static_cast<std::size_t>(n + 1)] / Rational(n + 1);
    CHECK(r[n] == sc(-en0, -n));
  }
  CHECK(r[3] == sc(Rational(-1, 4), -3));
}

TEST_CASE("D3 on zero and substitution mismatch") {
  const int N = 6;
  const auto D3 = build_D3(N);
  const auto zero = polynomial_jet(SparsePoly(), Substitution::BEqualsS, N, N);
  CHECK(apply(D3, zero).is_zero());
  const auto wrong = polynomial_jet(SparsePoly(Rational(1)), Substitution::AMinusSBEqualsS, N, N);
  CHECK_THROWS_AS(apply(D3, wrong), AlgebraError);
  const auto shallow = polynomial_jet(SparsePoly(sym::b), Substitution::AMinusSBEqualsS, N, 1);
  CHECK_THROWS_AS(apply(build_D1(N), shallow), InsufficientJetOrder);
}

TEST_CASE("split of D1 sums to D1") {
  for (int N = 0; N <= 10; ++N) {
    const SWindow w = SWindow::for_order(N);
    const auto parts = build_D1_split(N, w);
    CHECK(parts.zero + parts.one + parts.two == build_D1(N, w));
    CHECK(parts.zero[0] == sc(Rational(1, 2), -1));
    for (int n = 1; n <= N; ++n) CHECK(parts.zero[n].is_zero());
  }
}

TEST_CASE("D1 one-part on a derivative-free kernel is Omega") {
  // -(s/2) L{d/dy (y tanh(xy/2))} = (1/2)(-1 + Omega(x/s))
  const int N = 9;
  XSeries<SparsePoly> body(N);
  const auto tanh = elementary_series(Elementary::Tanh, N);
  for (int n = 0; n <= N; ++n)  // d/dy(y tanh(xy/2)) at x^n: (n+1) t_n y^n / 2^n
    body[n] = SparsePoly(Monomial(sym::y, n), tanh[n] * Rational(n + 1) / Rational(1 << n));
  const auto op = s_laplace(PreLaplaceSeries(body), SWindow::for_order(N), Substitution::None);
  const auto omega = scaled_argument(psi_omega(N).omega);
  for (int n = 0; n <= N; ++n) {
    LaurentPoly expected = omega[n] * Rational(1, 2);
    if (n == 0) expected = expected - sc(Rational(1, 2), 0);
    CHECK(op[n] * Rational(-1, 2) == expected);
  }
}

TEST_CASE("L1 and L2 are inverse") {
  const int N = 6;
  SUBCASE("structured") {
    const SeriesXS s3 = constant_series(N, sc(1, 3));
    CHECK(L2_of(apply_L1(s3), N) == s3);
    const SeriesXS inv = constant_series(N, sc(1, -1));
    CHECK(apply_L1(L2_of(inv, N)) == inv);
  }
  SUBCASE("randomized") {
    Gen g(17);
    for (int t = 0; t < 50; ++t) {
      const SeriesXS phi = g.series(N, -3, 3);
      CHECK(apply_L1(L2_of(phi, N)) == phi);
      CHECK(L2_of(apply_L1(phi), N) == phi);
    }
  }
}

TEST_CASE("L1 printed form agrees with the structural action") {
  const int N = 5;
  const auto L1 = build_L1(N);
  Gen g(3);
  for (int t = 0; t < 10; ++t) {
    const LaurentPoly p = g.laurent(-3, 3);
    SeriesXS printed(N);
    for (int n = 0; n <= N; ++n)
      for (const auto& [e, poly] : L1[n].terms())
        for (const auto& [mono, c] : poly.terms()) {
          LaurentPoly d = p;
          for (int r = 0; r < mono.exponent(sym::ds); ++r) d = d.derivative();
          printed[n] += d.shifted(e) * c;
        }
    CHECK(printed == apply_L1(constant_series(N, p)));
  }
}

TEST_CASE("translation") {
  const auto b2 = translate(sc(1, 2), 3);
  CHECK(b2[0] == sc(1, 2));
  CHECK(b2[1] == sc(2, 1));
  CHECK(b2[2] == sc(1, 0));
  CHECK(b2[3].is_zero());
  const auto inv = translate(sc(1, -1), 2);
  CHECK(inv[0] == sc(1, -1));
  CHECK(inv[1] == sc(-1, -2));
  CHECK(inv[2] == sc(1, -3));
  CHECK(inv == reciprocal_shifted(2));
  // exp(x d/ds) Psi(x/s) = 2 - ((x+s)/s) Psi(x/s)
  const int N = 8;
  const auto po = psi_omega(N);
  const SeriesXS psi = scaled_argument(po.psi);
  const SeriesXS one_plus = constant_series(N, sc(1, 0)) + SeriesXS::monomial(N, 1, sc(1, -1));
  CHECK(translate(psi) == constant_series(N, sc(2, 0)) - one_plus * psi);
}

TEST_CASE("Laplace exchange") {
  const SWindow w{-20, 20};
  SUBCASE("f = y") {
    XSeries<SparsePoly> f(4);
    f[0] = SparsePoly(sym::y);
    const auto v = laplace_exchange(PreLaplaceSeries(f), w);
    for (int n = 0; n <= 4; ++n)
      CHECK(v[n] == sc(Rational((n % 2 ? -1 : 1) * (n + 1)), -n - 2));
  }
  SUBCASE("f = 1") {
    XSeries<SparsePoly> f(5);
    f[0] = SparsePoly(Rational(1));
    CHECK(laplace_exchange(PreLaplaceSeries(f), w) == reciprocal_shifted(5));
  }
  SUBCASE("randomized") {
    Gen g(29);
    for (int t = 0; t < 10; ++t) {
      const auto f = g.pre(4);
      CHECK_NOTHROW(laplace_exchange(f, w));
      const SparsePoly target = SparsePoly(sym::a).pow(g.pick(0, 3)) * SparsePoly(sym::b).pow(g.pick(0, 3)) +
                                SparsePoly(sym::b) * g.small();
      CHECK_NOTHROW(laplace_exchange(f, ExchangeKind::SubstitutedAB, target, w));
      const auto fb = g.pre(4, false, true);
      const SparsePoly tb = SparsePoly(sym::b).pow(g.pick(0, 4)) + SparsePoly(Rational(g.pick(-3, 3)));
      CHECK_NOTHROW(laplace_exchange(fb, ExchangeKind::SubstitutedB, tb, w));
      const auto fy = g.pre(4, false, false);
      CHECK_NOTHROW(laplace_exchange(fy, ExchangeKind::ScalarB, tb, w));
    }
  }
  SUBCASE("y db with the a=-s,b=s substitution") {
    XSeries<SparsePoly> f(6);
    f[0] = SparsePoly(sym::y) * SparsePoly(sym::db);
    const SparsePoly target = SparsePoly(sym::a).pow(2) * SparsePoly(sym::b).pow(3);
    CHECK_NOTHROW(laplace_exchange(PreLaplaceSeries(f), ExchangeKind::SubstitutedAB, target, w));
  }
  SUBCASE("ring violations") {
    XSeries<SparsePoly> f(2);
    f[0] = SparsePoly(sym::da);
    CHECK_THROWS_AS(laplace_exchange(PreLaplaceSeries(f), ExchangeKind::SubstitutedB, SparsePoly(sym::b), w),
                    AlgebraError);
  }
}

TEST_CASE("Laplace derivative and shift rules") {
  const int N = 5;
  const SWindow w{-30, 30};
  Gen g(41);
  for (int t = 0; t < 10; ++t) {
    const auto f = g.pre(N);
    const auto Lf = formal_laplace(f, w).body;
    // L{y f} = -d/ds L{f}
    XSeries<SparsePoly> yf = f.body();
    for (int n = 0; n <= N; ++n) yf[n] = yf[n] * SparsePoly(sym::y);
    const auto Lyf = formal_laplace(PreLaplaceSeries(yf), w).body;
    for (int n = 0; n <= N; ++n) CHECK(Lyf[n] == -Lf[n].derivative());
    // L{f'} = s L{f} - f(0)
    XSeries<SparsePoly> df = f.body();
    for (int n = 0; n <= N; ++n) df[n] = df[n].derivative(sym::y);
    const auto Ldf = formal_laplace(PreLaplaceSeries(df), w).body;
    for (int n = 0; n <= N; ++n) {
      const SparsePoly at0 = f.body()[n].substitute(sym::y, SparsePoly());
      CHECK(Ldf[n] == Lf[n].shifted(1) - LaurentPoly(at0));
    }
    // L{f e^{xy}}(s) = L{f}(s - x)
    const auto shifted = formal_laplace(times(f, exp_x_times(SparsePoly(sym::y), N)), w).body;
    CHECK(shifted == translate(Lf, -1));
  }
}

TEST_CASE("Psi from the logistic kernel") {
  // s L{2/(1+e^{xy})} = Psi(x/s)
  const int N = 10;
  const auto k = elementary_series(Elementary::EulerKernel, N);
  XSeries<SparsePoly> body(N);
  for (int n = 0; n <= N; ++n) body[n] = SparsePoly(Monomial(sym::y, n), k[n]);
  const auto op = s_laplace(PreLaplaceSeries(body), SWindow::for_order(N), Substitution::None);
  CHECK(op.body == scaled_argument(psi_omega(N).psi));
}

TEST_CASE("linearity of the action") {
  const int N = 5;
  const auto D1 = build_D1(N);
  Gen g(5);
  for (int t = 0; t < 5; ++t) {
    SparsePoly p, q;
    for (int r = 0; r < 3; ++r) {
      p.add_term(Monomial{{sym::a, g.pick(0, 3)}, {sym::b, g.pick(0, 3)}}, g.small());
      q.add_term(Monomial{{sym::a, g.pick(0, 3)}, {sym::b, g.pick(0, 3)}, {sym::x, g.pick(0, 2)}}, g.small());
    }
    const Rational c = g.small();
    auto jet = [&](const SparsePoly& f) { return polynomial_jet(f, Substitution::AMinusSBEqualsS, N, N + 3); };
    CHECK(apply(D1, jet(p + q * c)) == apply(D1, jet(p)) + apply(D1, jet(q)) * c);
  }
}

TEST_CASE("D1 on the Gamma ratio at first order") {
  const int W = 4;
  const auto G = gamma_ratio_jet(2, 2, -20, W, 2);
  const auto D1 = build_D1(1);
  const auto D2 = build_D2(1);
  const auto lhs = apply(D1, constant_jet(G, Substitution::AMinusSBEqualsS, 1)) +
                   apply(D2, polynomial_jet(SparsePoly(Rational(1)), Substitution::BEqualsS, 1, 2));
  CHECK(lhs[1].coeff(1) == SparsePoly(sym::zeta(2)) * Rational(-1, 2));
  CHECK(lhs[1].coeff(-1).is_zero());
}
