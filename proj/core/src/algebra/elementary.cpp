#include "altzeta/algebra/elementary.hpp"

#include <stdexcept>

#include "altzeta/special/euler.hpp"

namespace altzeta {

namespace {

XSeries<Rational> exp_like(int order, int sign_period, bool odd, bool even) {
  // sign_period: 0 for hyperbolic (all +), 1 for trigonometric alternation.
  XSeries<Rational> r(order);
  for (int n = 0; n <= order; ++n) {
    if ((n % 2 == 1 && !odd) || (n % 2 == 0 && !even)) continue;
    Rational c = factorial(n).inverse();
    if (sign_period == 1 && (n / 2) % 2 == 1) c = -c;
    r[n] = c;
  }
  return r;
}

}  // namespace

XSeries<Rational> elementary_series(Elementary kind, int order) {
  if (order < 0) throw std::domain_error("elementary_series: negative order");
  switch (kind) {
    case Elementary::Exp: return exp_like(order, 0, true, true);
    case Elementary::Sinh: return exp_like(order, 0, true, false);
    case Elementary::Cosh: return exp_like(order, 0, false, true);
    case Elementary::Sin: return exp_like(order, 1, true, false);
    case Elementary::Cos: return exp_like(order, 1, false, true);
    case Elementary::Tanh: {
      const auto e0 = euler_numbers_at_zero(order);
      XSeries<Rational> r(order);
      r[0] = Rational(1);
      for (int i = 0; i <= order; ++i)
        r[i] -= e0[static_cast<std::size_t>(i)] * Rational(2).pow(i) / factorial(i);
      return r;
    }
    case Elementary::Sech: return reciprocal(elementary_series(Elementary::Cosh, order));
    case Elementary::SechSquared: {
      auto s = elementary_series(Elementary::Sech, order);
      return s * s;
    }
    case Elementary::EulerKernel: {
      const auto e0 = euler_numbers_at_zero(order);
      XSeries<Rational> r(order);
      for (int i = 0; i <= order; ++i) r[i] = e0[static_cast<std::size_t>(i)] / factorial(i);
      return r;
    }
    case Elementary::Logistic: {
      // 1/(1+e^{-w}) = 1 - 2/(1+e^{w}) / 2 evaluated at w.
      auto k = elementary_series(Elementary::EulerKernel, order) * Rational(-1, 2);
      k[0] += Rational(1);
      return k;
    }
    case Elementary::Csc:
    case Elementary::Cot:
      throw std::domain_error("elementary_series: csc/cot have a pole; use elementary_laurent");
  }
  throw std::domain_error("elementary_series: unknown kind");
}

LaurentRational elementary_laurent(Elementary kind, int order) {
  if (kind != Elementary::Csc && kind != Elementary::Cot)
    return {0, elementary_series(kind, order)};
  // sin(w)/w, then w csc w and w cot w.
  XSeries<Rational> sinc(order);
  auto sin = elementary_series(Elementary::Sin, order + 1);
  for (int n = 0; n <= order; ++n) sinc[n] = sin[n + 1];
  auto w_csc = reciprocal(sinc);
  if (kind == Elementary::Csc) return {-1, w_csc};
  return {-1, elementary_series(Elementary::Cos, order) * w_csc};
}

}  // namespace altzeta
