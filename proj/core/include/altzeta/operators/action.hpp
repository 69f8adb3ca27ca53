#pragma once

#include <map>

#include "altzeta/algebra/bivariate_jet.hpp"
#include "altzeta/operators/operator_series.hpp"

namespace altzeta {

/// Series in x whose coefficients are Laurent in a single variable: s after
/// an operator has acted, b after L1 (the coefficient ring is the same).
using SeriesXS = XSeries<LaurentPoly>;

/// Target g(a, b; x) of an operator: per x-order, the Taylor jet in the
/// displacements (u, v) around the base point of a substitution
/// (a = -s + u, b = s + v, or b = s + v alone).
struct FunctionJet {
  XSeries<BivariateJet<LaurentPoly>> body;
  Substitution base = Substitution::AMinusSBEqualsS;
  int order() const { return body.order(); }
};

/// Jet of a polynomial g in x, a, b (all other generators are scalars).
/// For base b=s the polynomial must not involve a.
FunctionJet polynomial_jet(const SparsePoly& g, Substitution base, int x_order, int jet_order,
                           int window_lo = kNoFloor);

/// Jet at b = s + v of a series whose coefficients are Laurent polynomials
/// in b, using (s+v)^e = sum_q binom(e, q) s^{e-q} v^q for any integer e.
FunctionJet jet_in_b(const SeriesXS& h, int jet_order, int window_lo = kNoFloor);

/// Places a fixed x-independent jet at x^0.
FunctionJet constant_jet(const BivariateJet<LaurentPoly>& j, Substitution base, int x_order);

/// Operator action: each term c s^k da^i db^j of [x^p] picks i! j! [u^i v^j]
/// of [x^q] of the target, and x-orders convolve. Throws on substitution
/// mismatch and InsufficientJetOrder when the jet is too short.
SeriesXS apply(const OperatorSeries& op, const FunctionJet& g);

/// Maximal total da, db degree over all coefficients.
int max_derivative_degree(const OperatorSeries& op);

/// phi(s + direction * x; x) by Taylor expansion in s.
SeriesXS translate(const SeriesXS& phi, int direction = 1);

/// p(s + x) for a single Laurent polynomial, through x^order.
SeriesXS translate(const LaurentPoly& p, int order);

/// (1 + exp(x d/ds)) 1/(2s) |_{s=b} acting on phi(s; x):
/// phi(b)/(2b) + phi(b+x)/(2(b+x)).
SeriesXS apply_L1(const SeriesXS& phi);

/// F(x/s): [x^k] = F_k s^{-k}.
SeriesXS scaled_argument(const XSeries<Rational>& F, int window_lo = kNoFloor);

/// 1/(s + x) = sum_n (-x)^n s^{-n-1}.
SeriesXS reciprocal_shifted(int order, int window_lo = kNoFloor);

/// Constant series c * var^e at x^0.
SeriesXS constant_series(int order, const LaurentPoly& c);

/// Substitutes series for chosen generators of a polynomial; the remaining
/// generators become scalar coefficients.
SeriesXS evaluate_with(const SparsePoly& f, const std::map<Symbol, SeriesXS>& assign, int order);

/// Laurent polynomial in `var` (given as sym::s or sym::b) from a polynomial
/// whose other generators are scalars; x must not appear.
LaurentPoly as_laurent(const SparsePoly& f, Symbol var);

}  // namespace altzeta
