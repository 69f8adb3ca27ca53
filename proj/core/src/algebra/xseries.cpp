#include "altzeta/algebra/xseries.hpp"

namespace altzeta {

XSeries<Rational> reciprocal(const XSeries<Rational>& f) {
  if (f[0].is_zero()) throw ValuationError("reciprocal: zero constant term");
  XSeries<Rational> g(f.order());
  const Rational inv0 = f[0].inverse();
  g[0] = inv0;
  for (int n = 1; n <= f.order(); ++n) {
    Rational acc;
    for (int k = 1; k <= n; ++k) acc += f[k] * g[n - k];
    g[n] = -acc * inv0;
  }
  return g;
}

}  // namespace altzeta
