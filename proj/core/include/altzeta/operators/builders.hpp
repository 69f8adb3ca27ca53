#pragma once

#include "altzeta/operators/operator_series.hpp"

namespace altzeta {

/// The five rational constants of the D1 kernel, in order of appearance:
///   c0 y + c1 (da-db) tanh(xy/2) + c2 x y (da-db) sech^2(xy/2)
///   + c3 y sech(xy/2) sinh(x(da-db)/2) sech(x(da-db+y)/2)
///   + (c4/x) sinh(xy/2) exp(x(da+db)/2) sech(x(da-db+y)/2).
/// Exposed so tests can perturb one of them.
struct D1Constants {
  Rational c0{1, 2};
  Rational c1{-1, 2};
  Rational c2{-1, 4};
  Rational c3{1, 2};
  Rational c4{-1};
};

/// The bracket inside s * L_y{...} for D1, through x^order.
PreLaplaceSeries d1_kernel(int order, const D1Constants& k = {});

OperatorSeries build_D1(int order, SWindow window, const D1Constants& k = {});
OperatorSeries build_D2(int order, SWindow window);
OperatorSeries build_D3(int order, SWindow window);
inline OperatorSeries build_D1(int order) { return build_D1(order, SWindow::for_order(order)); }
inline OperatorSeries build_D2(int order) { return build_D2(order, SWindow::for_order(order)); }
inline OperatorSeries build_D3(int order) { return build_D3(order, SWindow::for_order(order)); }

/// D1 = D1^0 + D1^1 + D1^2 with
///   D1^0 = (s/2) L{y},  D1^1 = -(s/2) L{d/dy (y (da-db) tanh(xy/2))},
///   D1^2 = s L{ logistic(x(da-db+y)) ((e^{-xy}-1)/x e^{x db}
///                                     + (1 - e^{-x(da-db)}) y/(1+e^{xy})) }.
struct D1Split {
  OperatorSeries zero;
  OperatorSeries one;
  OperatorSeries two;
};
D1Split build_D1_split(int order, SWindow window);

/// L2 = 2s / (1 + exp(x db)) |_{b=s}: [x^i] = s E_i(0)/i! db^i.
OperatorSeries build_L2(int order);

/// L1 = (1 + exp(x ds)) 1/(2s) |_{s=b} written with ds to the right:
/// [x^0] = 1/s and [x^n] = sum_k (-1)^k / (2 (n-k)! s^{k+1}) ds^{n-k}.
/// For display; applications go through apply_L1().
OperatorSeries build_L1(int order);

}  // namespace altzeta
