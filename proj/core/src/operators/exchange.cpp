#include "altzeta/operators/exchange.hpp"

#include <algorithm>

namespace altzeta {

XSeries<SparsePoly> exp_x_times(const SparsePoly& p, int order) {
  XSeries<SparsePoly> out(order);
  SparsePoly power(Rational(1));
  for (int n = 0; n <= order; ++n) {
    out[n] = power * (Rational(1) / factorial(n));
    power = power * p;
  }
  return out;
}

XSeries<SparsePoly> exp_minus_xy(int order) { return exp_x_times(-SparsePoly(sym::y), order); }

PreLaplaceSeries times(const PreLaplaceSeries& f, const XSeries<SparsePoly>& g) {
  return PreLaplaceSeries(f.body() * g.truncated(f.order()));
}

namespace {

void require_equal(const SeriesXS& lhs, const SeriesXS& rhs, const char* what) {
  for (int n = 0; n <= lhs.order(); ++n)
    if (!(lhs[n] == rhs[n]))
      throw IdentityMismatch(std::string(what) + ": sides differ at x^" + std::to_string(n) + ": " +
                             lhs[n].to_string() + " vs " + rhs[n].to_string());
}

void require_free_of(const PreLaplaceSeries& f, Symbol s, const char* what) {
  for (int n = 0; n <= f.order(); ++n)
    if (f.body()[n].contains(s))
      throw AlgebraError(std::string(what) + ": integrand involves " + s.name());
}

}  // namespace

SeriesXS laplace_exchange(const PreLaplaceSeries& f, SWindow window) {
  const SeriesXS lhs = translate(formal_laplace(f, window).body);
  const SeriesXS rhs = formal_laplace(times(f, exp_minus_xy(f.order())), window).body;
  require_equal(lhs, rhs, "laplace_exchange");
  return lhs;
}

SeriesXS laplace_exchange(const PreLaplaceSeries& f, ExchangeKind kind, const SparsePoly& target,
                          SWindow window) {
  if (kind == ExchangeKind::Plain) throw AlgebraError("laplace_exchange: plain form takes no target");
  const int order = f.order();
  Substitution subst = Substitution::BEqualsS;
  SparsePoly shift(sym::db);
  if (kind == ExchangeKind::SubstitutedAB) {
    subst = Substitution::AMinusSBEqualsS;
    shift = SparsePoly(sym::db) - SparsePoly(sym::da);
  } else {
    require_free_of(f, sym::da, "laplace_exchange");
    if (kind == ExchangeKind::ScalarB) require_free_of(f, sym::db, "laplace_exchange");
  }
  const OperatorSeries left{formal_laplace(f, window).body, subst};
  const OperatorSeries right{
      formal_laplace(times(times(f, exp_x_times(shift, order)), exp_minus_xy(order)), window).body,
      subst};
  const int jet_order =
      std::max({max_derivative_degree(left), max_derivative_degree(right), target.total_degree()});
  const FunctionJet g = polynomial_jet(target, subst, order, jet_order, window.lo);
  const SeriesXS lhs = translate(apply(left, g));
  const SeriesXS rhs = apply(right, g);
  require_equal(lhs, rhs, "laplace_exchange");
  return lhs;
}

}  // namespace altzeta
