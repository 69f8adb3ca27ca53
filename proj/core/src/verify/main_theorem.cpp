#include <algorithm>

#include "altzeta/verify/checks.hpp"
#include "altzeta/verify/series_helpers.hpp"

namespace altzeta {

SparsePoly generic_function(int degree) {
  SparsePoly f;
  for (int i = 0; i <= degree; ++i)
    for (int j = 0; i + j <= degree; ++j)
      f.add_term(Monomial{{sym::a, i}, {sym::b, j}, {sym::coeff(i, j), 1}}, Rational(1));
  return f;
}

TheoremSides main_theorem_sides(const SparsePoly& f, int order, const D1Constants& k) {
  const SeriesXS X = x_series(order), S = var_series(order, 1), zero(order);
  const LaurentPoly half_inv = LaurentPoly::monomial(-1, SparsePoly(Rational(1, 2)));

  // Left: (f(x,s) - f(0,s)) + L2 o h with h the symmetric combination over 2b.
  const SeriesXS direct = eval_ab(f, X, S) - eval_ab(f, zero, S);
  const SeriesXS h = (eval_ab(f, zero, -S) + eval_ab(f, zero, S) - eval_ab(f, X, -S) - eval_ab(f, X, S))
                         .times_coeff(half_inv);
  const SeriesXS lhs = direct + apply(build_L2(order), jet_in_b(h, order));

  // Right: D1 o (b f(a+b,a) + a f(a+b,b)) + D2 o f(0,b) + D3 o d/db(f(0,b) - f(0,-b)).
  const SparsePoly A(sym::a), B(sym::b);
  const SparsePoly g1 = B * substitute_ab(f, A + B, A) + A * substitute_ab(f, A + B, B);
  const SparsePoly f0 = f.substitute(sym::a, SparsePoly());
  const SparsePoly g3 = (f0 - f0.substitute(sym::b, -B)).derivative(sym::b);

  const SWindow window = SWindow::for_order(order);
  const OperatorSeries D1 = build_D1(order, window, k);
  const OperatorSeries D2 = build_D2(order, window);
  const OperatorSeries D3 = build_D3(order, window);
  const int j1 = std::max(max_derivative_degree(D1), ab_degree(g1));
  const int j2 = std::max({max_derivative_degree(D2), max_derivative_degree(D3), ab_degree(f0)});
  const SeriesXS rhs = apply(D1, polynomial_jet(g1, Substitution::AMinusSBEqualsS, order, j1)) +
                       apply(D2, polynomial_jet(f0, Substitution::BEqualsS, order, j2)) +
                       apply(D3, polynomial_jet(g3, Substitution::BEqualsS, order, j2));
  return {lhs, rhs};
}

CheckReport check_main_theorem_for(const SparsePoly& f, int order, const D1Constants& k) {
  Stopwatch clock;
  CheckReport r;
  r.name = "main_theorem";
  r.anchor = "main theorem: generating identity for D1, D2, D3 as a power series in x";
  r.param("order", order);
  r.param("f_terms", static_cast<long>(f.size()));
  const auto sides = main_theorem_sides(f, order, k);
  r.add(compare("lhs equals rhs", sides.lhs, sides.rhs));
  r.seconds = clock.seconds();
  return r;
}

CheckReport check_main_theorem(int order, int degree, const D1Constants& k) {
  CheckReport r = check_main_theorem_for(generic_function(degree), order, k);
  r.param("degree", degree);
  return r;
}

}  // namespace altzeta
