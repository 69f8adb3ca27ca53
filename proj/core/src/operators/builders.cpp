#include "altzeta/operators/builders.hpp"

#include "altzeta/algebra/elementary.hpp"
#include "altzeta/special/euler.hpp"

namespace altzeta {

namespace {

using PS = XSeries<SparsePoly>;

const SparsePoly Y{sym::y};
const SparsePoly DA{sym::da};
const SparsePoly DB{sym::db};

PS constant(int order, const SparsePoly& p) { return PS::monomial(order, 0, p); }
PS x_times(int order, const SparsePoly& p) { return PS::monomial(order, 1, p); }

/// f(x * p) for an elementary f.
PS of(Elementary f, int order, const SparsePoly& p) {
  return compose(elementary_series(f, order), x_times(order, p));
}

/// (1/x) * series, computed one order higher and checked for divisibility.
template <class Build>
PS divided_by_x(int order, Build&& build) {
  return build(order + 1).shift_down();
}

}  // namespace

PreLaplaceSeries d1_kernel(int order, const D1Constants& k) {
  const SparsePoly diff = DA - DB;
  const SparsePoly half(Rational(1, 2));
  PS t = constant(order, Y * k.c0);
  t += of(Elementary::Tanh, order, Y * half).times_coeff(diff * k.c1);
  t += x_times(order, Y * diff * k.c2) * of(Elementary::SechSquared, order, Y * half);
  t += (of(Elementary::Sech, order, Y * half) * of(Elementary::Sinh, order, diff * half) *
        of(Elementary::Sech, order, (diff + Y) * half))
           .times_coeff(Y * k.c3);
  t += divided_by_x(order, [&](int n) {
         return (of(Elementary::Sinh, n, Y * half) * of(Elementary::Exp, n, (DA + DB) * half) *
                 of(Elementary::Sech, n, (diff + Y) * half)) *
                k.c4;
       });
  return PreLaplaceSeries(std::move(t));
}

OperatorSeries build_D1(int order, SWindow window, const D1Constants& k) {
  return s_laplace(d1_kernel(order, k), window, Substitution::AMinusSBEqualsS);
}

OperatorSeries build_D2(int order, SWindow window) {
  PS t = of(Elementary::Tanh, order, (Y - DB) * Rational(1, 2));
  return s_laplace(PreLaplaceSeries(std::move(t)), window, Substitution::BEqualsS);
}

OperatorSeries build_D3(int order, SWindow window) {
  const SparsePoly half(Rational(1, 2));
  PS inner = constant(order, SparsePoly(Rational(-2))) +
             x_times(order, Y) * of(Elementary::Tanh, order, Y * half);
  PS t = x_times(order, SparsePoly(Rational(-1, 4))) * inner *
         of(Elementary::SechSquared, order, Y * half);
  return s_laplace(PreLaplaceSeries(std::move(t)), window, Substitution::BEqualsS);
}

D1Split build_D1_split(int order, SWindow window) {
  const SparsePoly diff = DA - DB;
  const auto subst = Substitution::AMinusSBEqualsS;
  PS zero = constant(order, Y * Rational(1, 2));

  PS inner = of(Elementary::Tanh, order, Y * Rational(1, 2)).times_coeff(Y * diff);
  PS one = inner.map_coeffs([](const SparsePoly& p) { return p.derivative(sym::y); }) *
           Rational(-1, 2);

  PS expm1_over_x = divided_by_x(order, [&](int n) {
    return of(Elementary::Exp, n, -Y) - constant(n, SparsePoly(Rational(1)));
  });
  PS first = expm1_over_x * of(Elementary::Exp, order, DB);
  PS second = (constant(order, SparsePoly(Rational(1))) - of(Elementary::Exp, order, -diff)) *
              of(Elementary::EulerKernel, order, Y).times_coeff(Y * Rational(1, 2));
  PS two = of(Elementary::Logistic, order, diff + Y) * (first + second);

  return {s_laplace(PreLaplaceSeries(std::move(zero)), window, subst),
          s_laplace(PreLaplaceSeries(std::move(one)), window, subst),
          s_laplace(PreLaplaceSeries(std::move(two)), window, subst)};
}

OperatorSeries build_L2(int order) {
  const auto e0 = euler_numbers_at_zero(order);
  XSeries<LaurentPoly> body(order);
  for (int i = 0; i <= order; ++i)
    body[i] = LaurentPoly::monomial(1, SparsePoly(Monomial(sym::db, i), e0[i] / factorial(i)));
  return {std::move(body), Substitution::BEqualsS};
}

OperatorSeries build_L1(int order) {
  XSeries<LaurentPoly> body(order);
  body[0] = LaurentPoly::monomial(-1, SparsePoly(Rational(1)));
  for (int n = 1; n <= order; ++n)
    for (int k = 0; k <= n; ++k) {
      Rational c = Rational(k % 2 == 0 ? 1 : -1) / (Rational(2) * factorial(n - k));
      body[n].add(-(k + 1), SparsePoly(Monomial(sym::ds, n - k), c));
    }
  return {std::move(body), Substitution::SEqualsB};
}

}  // namespace altzeta
