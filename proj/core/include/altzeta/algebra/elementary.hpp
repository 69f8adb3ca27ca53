#pragma once

#include "altzeta/algebra/xseries.hpp"

namespace altzeta {

enum class Elementary {
  Exp,
  Sinh,
  Cosh,
  Tanh,         // 1 - sum_i E_i(0) (2w)^i / i!
  Sech,         // 1 / cosh
  SechSquared,
  Sin,
  Cos,
  Logistic,     // 1 / (1 + e^{-w})
  EulerKernel,  // 2 / (1 + e^{w}) = sum_i E_i(0) w^i / i!
  Csc,          // Laurent, valuation -1
  Cot,          // Laurent, valuation -1
};

/// Exact Taylor coefficients of f(w) up to w^order. Csc and Cot have a pole
/// at 0 and are only available through elementary_laurent().
XSeries<Rational> elementary_series(Elementary kind, int order);

/// f(w) = w^valuation * body(w).
struct LaurentRational {
  int valuation = 0;
  XSeries<Rational> body;
};

LaurentRational elementary_laurent(Elementary kind, int order);

}  // namespace altzeta
