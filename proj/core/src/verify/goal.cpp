#include <algorithm>

#include "altzeta/special/euler.hpp"
#include "altzeta/verify/checks.hpp"
#include "altzeta/verify/series_helpers.hpp"

namespace altzeta {

namespace {

// Everything below is a series in x over Laurent polynomials in b.
struct GoalContext {
  int N;
  SparsePoly f, fb;
  SeriesXS X, b, bx, zero, inv_b, inv_bx, omega, ratio2;

  GoalContext(const SparsePoly& f_, int order)
      : N(order), f(f_), fb(f_.derivative(sym::b)), X(x_series(order)), b(var_series(order, 1)),
        bx(b + X), zero(order), inv_b(laurent_constant(order, 1, -1)),
        inv_bx(reciprocal_shifted(order)), omega(scaled_argument(psi_omega(order).omega)) {
    const SeriesXS q = laurent_constant(order, 1, 0) + X * inv_b;
    ratio2 = q * q;
  }
  SeriesXS F(const SeriesXS& A, const SeriesXS& B) const { return eval_ab(f, A, B); }
  SeriesXS Fp(const SeriesXS& A, const SeriesXS& B) const { return eval_ab(fb, A, B); }
  SeriesXS c(Rational q) const { return laurent_constant(N, q, 0); }
  // (1/(2x)) (1/(b+x) - 1/b) = sum_m (1/2)(-1)^{m+1} b^{-m-2} x^m
  SeriesXS difference_quotient() const {
    SeriesXS k(N);
    for (int m = 0; m <= N; ++m)
      k[m] = LaurentPoly::monomial(-m - 2, SparsePoly(Rational(m % 2 == 0 ? -1 : 1, 2)));
    return k;
  }
};

}  // namespace

CheckReport check_goal_identity(int order, int degree) {
  Stopwatch clock;
  CheckReport r;
  r.name = "goal_identity";
  r.anchor = "L1 applied to the main theorem, with the term-by-term cancellation";
  r.param("order", order);
  r.param("degree", degree);

  const GoalContext g(generic_function(degree), order);
  const int N = order;
  const SeriesXS &X = g.X, &b = g.b, &bx = g.bx, &zero = g.zero;
  const SeriesXS &inv_b = g.inv_b, &inv_bx = g.inv_bx, &omega = g.omega, &ratio2 = g.ratio2;
  const Rational q(1, 4), h(1, 2);

  // Left-hand side through the operators: L1 o (f(x,s) - f(0,s)) + L1 o L2 o h.
  const LaurentPoly half_inv = LaurentPoly::monomial(-1, SparsePoly(h));
  const SeriesXS direct = g.F(X, b) - g.F(zero, b);
  const SeriesXS sym_part =
      (g.F(zero, -b) + g.F(zero, b) - g.F(X, -b) - g.F(X, b)).times_coeff(half_inv);
  const SeriesXS lhs = apply_L1(direct) + apply_L1(apply(build_L2(N), jet_in_b(sym_part, N)));
  const SeriesXS final_form =
      (g.F(zero, -b) - g.F(X, -b)) * inv_b * h + (g.F(X, bx) - g.F(zero, bx)) * inv_bx * h;
  r.add(compare("left side evaluates to the final form", lhs, final_form));

  // Right-hand side pieces through the operators.
  const SparsePoly A(sym::a), B(sym::b);
  const SparsePoly g1 = B * substitute_ab(g.f, A + B, A) + A * substitute_ab(g.f, A + B, B);
  const SparsePoly f0 = g.f.substitute(sym::a, SparsePoly());
  const SparsePoly g3 = (f0 - f0.substitute(sym::b, -B)).derivative(sym::b);
  const SWindow window = SWindow::for_order(N);
  const D1Split split = build_D1_split(N, window);
  const OperatorSeries D2 = build_D2(N, window), D3 = build_D3(N, window);
  const int j1 = std::max({max_derivative_degree(split.one), max_derivative_degree(split.two), ab_degree(g1)});
  const int j2 = std::max({max_derivative_degree(D2), max_derivative_degree(D3), ab_degree(f0)});
  const FunctionJet jet1 = polynomial_jet(g1, Substitution::AMinusSBEqualsS, N, j1);
  const SeriesXS P0 = apply_L1(apply(split.zero, jet1));
  const SeriesXS P1 = apply_L1(apply(split.one, jet1));
  const SeriesXS P2 = apply_L1(apply(split.two, jet1));
  const SeriesXS PD2 = apply_L1(apply(D2, polynomial_jet(f0, Substitution::BEqualsS, N, j2)));
  const SeriesXS PD3 = apply_L1(apply(D3, polynomial_jet(g3, Substitution::BEqualsS, N, j2)));

  // Displays of the proof.
  const SeriesXS f_minus = g.F(zero, -b), f_plus = g.F(zero, b);
  const SeriesXS f_minus_x = g.F(zero, -bx), f_plus_x = g.F(zero, bx);
  const SeriesXS fp_sum = g.Fp(zero, -b) + g.Fp(zero, b);
  const SeriesXS fp_sum_x = g.Fp(zero, -bx) + g.Fp(zero, bx);
  const SeriesXS one = g.c(1);

  const SeriesXS disp0 = (f_minus - f_plus) * inv_b * q + (f_minus_x - f_plus_x) * inv_bx * q;
  r.add(compare("L1 o D1^0 display", P0, disp0));

  const SeriesXS brace1 = (f_plus - f_minus) * inv_b + fp_sum;
  const SeriesXS brace1x = (f_plus_x - f_minus_x) * inv_bx + fp_sum_x;
  const SeriesXS disp1 = (omega - one) * brace1 * q + (one - ratio2 * omega) * brace1x * q;
  r.add(compare("L1 o D1^1 display", P1, disp1));

  const SeriesXS non_omega2 = g.difference_quotient() * (bx * g.F(X, -b) - b * g.F(X, bx));
  const SeriesXS omega2 = omega * inv_b * (f_minus - f_plus) * q -
                          bx * inv_b * inv_b * omega * (f_minus_x - f_plus_x) * q;
  r.add(compare("L1 o D1^2 display", P2, non_omega2 + omega2));

  const SeriesXS dispD2 = f_plus * inv_b * h - f_plus_x * inv_bx * h;
  r.add(compare("L1 o D2 display", PD2, dispD2));

  const SeriesXS dispD3 = (one - omega) * fp_sum * q + (ratio2 * omega - one) * fp_sum_x * q;
  r.add(compare("L1 o D3 display (partials summed)", PD3, dispD3));
  const SeriesXS fp_diff = g.Fp(zero, b) - g.Fp(zero, -b);
  const SeriesXS fp_diff_x = g.Fp(zero, bx) - g.Fp(zero, -bx);
  const SeriesXS dispD3_diff = (one - omega) * fp_diff * q + (ratio2 * omega - one) * fp_diff_x * q;
  const bool differs = first_mismatch(PD3, dispD3_diff).has_value();
  r.add({"L1 o D3 display with differenced partials does not hold", differs, std::nullopt,
         differs ? "" : "differenced form unexpectedly agrees"});

  const SeriesXS omega_f1 =
      omega * (f_plus - f_minus) * inv_b * q - ratio2 * omega * (f_plus_x - f_minus_x) * inv_bx * q;
  r.add(compare("Omega terms of D1^2 cancel the Omega f terms of D1^1", omega2 + omega_f1, zero));

  const SeriesXS fp_terms1 = (omega - one) * fp_sum * q + (one - ratio2 * omega) * fp_sum_x * q;
  r.add(compare("L1 o D3 cancels the f^(0,1) terms of D1^1", PD3 + fp_terms1, zero));

  const SeriesXS tally = disp0 - (f_plus - f_minus) * inv_b * q + (f_plus_x - f_minus_x) * inv_bx * q +
                         non_omega2 + dispD2;
  r.add(compare("four-line tally equals the final form", tally, final_form));

  r.add(compare("goal identity", lhs, P0 + P1 + P2 + PD2 + PD3));
  r.seconds = clock.seconds();
  return r;
}

}  // namespace altzeta
