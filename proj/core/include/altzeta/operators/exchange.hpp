#pragma once

#include "altzeta/operators/action.hpp"

namespace altzeta {

/// Which form of the Laplace/translation exchange is checked.
///   Plain:          exp(x d/ds) L{f}(s) = L{f exp(-xy)}(s)
///   SubstitutedAB:  exp(x d/ds) o L{f}|_{a=-s,b=s} = L{f exp(x(db-da)) exp(-xy)}|_{a=-s,b=s}
///   SubstitutedB:   exp(x d/ds) o L{f}|_{b=s} = L{f exp(x db) exp(-xy)}|_{b=s}, f free of da
///   ScalarB:        as SubstitutedB with f a polynomial in y alone
enum class ExchangeKind { Plain, SubstitutedAB, SubstitutedB, ScalarB };

/// exp(-xy) through x^order.
XSeries<SparsePoly> exp_minus_xy(int order);

/// exp(x * p) through x^order for an x-free polynomial p.
XSeries<SparsePoly> exp_x_times(const SparsePoly& p, int order);

/// Product of a pre-Laplace series with an x-series of polynomials.
PreLaplaceSeries times(const PreLaplaceSeries& f, const XSeries<SparsePoly>& g);

/// Plain form: computes both sides as operator-valued series and returns the
/// common value; throws IdentityMismatch when they differ.
SeriesXS laplace_exchange(const PreLaplaceSeries& f, SWindow window);

/// Substituted forms, applied to a polynomial target g(a, b): both sides act
/// on the same jet, the left side is then translated in s. Throws
/// IdentityMismatch on disagreement and AlgebraError when f is outside the
/// ring the kind allows.
SeriesXS laplace_exchange(const PreLaplaceSeries& f, ExchangeKind kind, const SparsePoly& target,
                          SWindow window);

}  // namespace altzeta
