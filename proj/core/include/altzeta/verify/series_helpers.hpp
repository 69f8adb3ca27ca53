#pragma once

#include "altzeta/operators/action.hpp"

namespace altzeta {

/// The series x.
SeriesXS x_series(int order);

/// sign * v where v is the Laurent variable (s or b depending on context).
SeriesXS var_series(int order, int sign);

/// c * v^e as a constant series.
SeriesXS laurent_constant(int order, const Rational& c, int e);

/// f(A, B) for series A, B; other generators of f stay scalar.
SeriesXS eval_ab(const SparsePoly& f, const SeriesXS& A, const SeriesXS& B);

/// f(p, q) for polynomials p, q (simultaneous substitution).
SparsePoly substitute_ab(const SparsePoly& f, const SparsePoly& p, const SparsePoly& q);

/// Largest combined a, b degree of a monomial of f.
int ab_degree(const SparsePoly& f);

/// sum_k F_k z^k for an x-series z without constant term.
SeriesXS compose(const XSeries<Rational>& F, const SeriesXS& z);

}  // namespace altzeta
