#include "altzeta/verify/series_helpers.hpp"

#include <algorithm>

namespace altzeta {

SeriesXS x_series(int order) { return SeriesXS::monomial(order, 1, LaurentPoly(1)); }

SeriesXS var_series(int order, int sign) { return laurent_constant(order, Rational(sign), 1); }

SeriesXS laurent_constant(int order, const Rational& c, int e) {
  return constant_series(order, LaurentPoly::monomial(e, SparsePoly(c)));
}

SeriesXS eval_ab(const SparsePoly& f, const SeriesXS& A, const SeriesXS& B) {
  return evaluate_with(f, {{sym::a, A}, {sym::b, B}}, A.order());
}

SparsePoly substitute_ab(const SparsePoly& f, const SparsePoly& p, const SparsePoly& q) {
  return f.evaluate<SparsePoly>(
      [&](Symbol s) {
        if (s == sym::a) return p;
        if (s == sym::b) return q;
        return SparsePoly(s);
      },
      [](const Rational& c) { return SparsePoly(c); });
}

int ab_degree(const SparsePoly& f) {
  int d = 0;
  for (const auto& [mono, c] : f.terms()) d = std::max(d, mono.exponent(sym::a) + mono.exponent(sym::b));
  return d;
}

SeriesXS compose(const XSeries<Rational>& F, const SeriesXS& z) {
  if (!z[0].is_zero()) throw ValuationError("compose: inner series has a constant term");
  const int order = z.order();
  SeriesXS out(order);
  for (int k = std::min(F.order(), order); k >= 0; --k)
    out = out * z + laurent_constant(order, F[k], 0);
  return out;
}

}  // namespace altzeta
