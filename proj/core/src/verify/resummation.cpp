#include "altzeta/special/euler.hpp"
#include "altzeta/verify/checks.hpp"
#include "altzeta/verify/series_helpers.hpp"

namespace altzeta {

namespace {

SparsePoly Z(int k, int n) { return SparsePoly(sym::mzv(k, n)); }

// g(x, sign*v) = sum Z_{k,n} x^k (sign v)^n for k <= order, n <= max_index.
SeriesXS g_series(int order, int max_index, int sign) {
  SeriesXS g(order);
  for (int k = 1; k <= order; ++k)
    for (int n = 1; n <= max_index; ++n) {
      const Rational c = (sign < 0 && n % 2 == 1) ? Rational(-1) : Rational(1);
      g[k].add(n, Z(k, n) * c);
    }
  return g;
}

}  // namespace

CheckReport check_prop_resummation(int order, int max_index) {
  Stopwatch clock;
  CheckReport r;
  r.name = "euler_resummation";
  r.anchor = "generating series of zeta({1}^k, 2m bar) with Euler-polynomial corrections";
  r.param("order", order);
  r.param("max_index", max_index);
  const int N = order;
  const auto euler = euler_polynomials(2 * N + max_index + 2);
  auto E = [&](int n) -> const EulerPolynomial& { return euler.at(static_cast<std::size_t>(n)); };

  // Right side: -g(x,-s) + L2 o ((g(x,-b) + g(x,b)) / 2b).
  const SeriesXS g_minus = g_series(N, max_index, -1), g_plus = g_series(N, max_index, 1);
  const LaurentPoly half_inv = LaurentPoly::monomial(-1, SparsePoly(Rational(1, 2)));
  const SeriesXS h = (g_minus + g_plus).times_coeff(half_inv);
  const SeriesXS l2h = apply(build_L2(N), jet_in_b(h, N));
  const SeriesXS rhs = l2h - g_minus;

  // Left side from the closed form of the coefficients.
  SeriesXS lhs(N);
  for (int k = 0; k + 1 <= N; ++k)
    for (int m = 1; 2 * m - 1 <= max_index + 1; ++m) {
      SparsePoly c;
      if (2 * m - 1 <= max_index) c += Z(k + 1, 2 * m - 1);
      for (int n = m + 1; n <= m + (k + 1) / 2; ++n) {
        if (2 * n - 2 > max_index) continue;
        c += Z(k + 2 - 2 * (n - m), 2 * n - 2) * E(2 * n - 3).coeff(2 * m - 2);
      }
      lhs[k + 1].add(2 * m - 1, c);
    }
  r.add(compare("resummed identity", lhs, rhs));

  // x^1: only the bare depth-one symbols appear.
  SubCheck first{"x^1 has no corrections", true, std::nullopt, {}};
  for (const auto& [e, poly] : rhs[1].terms())
    for (const auto& [mono, c] : poly.terms())
      if (mono.factors().front().symbol.index() != 1) first.passed = false;
  r.add(first);

  // [x^3 s^1] carries [z^0]E_1 = -1/2 on zeta(1, 3 bar).
  SubCheck x3{"[x^3 s] correction coefficient", false, std::nullopt, {}};
  if (N >= 3 && max_index >= 2) {
    const Rational c = rhs[3].coeff(1).coefficient(Monomial(sym::mzv(2, 2)));
    x3.passed = c == Rational(-1, 2);
    x3.detail = "coefficient " + c.to_fraction();
  }
  r.add(x3);

  // (L2 / s) o b^M = x^M E_M(s/x), one power at a time.
  const OperatorSeries L2 = build_L2(N);
  SubCheck powers{"L2 on powers of b gives Euler polynomials", true, std::nullopt, {}};
  for (int M = 0; M <= N && powers.passed; ++M) {
    SeriesXS act = apply(L2, jet_in_b(laurent_constant(N, 1, M), N));
    SeriesXS expected(N);
    for (int i = 0; i <= N; ++i) {
      act[i] = act[i].shifted(-1);
      if (i <= M) expected[i] = LaurentPoly::monomial(M - i, SparsePoly(E(M).coeff(M - i)));
    }
    SubCheck c = compare(powers.name, act, expected);
    if (!c.passed) {
      c.detail = "power b^" + std::to_string(M);
      powers = c;
    }
  }
  r.add(powers);

  // L2 o h = sum Z_{k,2n} x^{k+2n-1} s E_{2n-1}(s/x).
  SeriesXS channel(N);
  for (int k = 1; k <= N; ++k)
    for (int n = 1; 2 * n <= max_index; ++n)
      for (int j = 0; j <= 2 * n - 1; ++j) {
        const int xp = k + 2 * n - 1 - j;
        if (xp > N) continue;
        channel[xp].add(j + 1, Z(k, 2 * n) * E(2 * n - 1).coeff(j));
      }
  r.add(compare("L2 on the symmetric part of g", l2h, channel));
  r.seconds = clock.seconds();
  return r;
}

}  // namespace altzeta
