#pragma once

#include <vector>

#include "altzeta/algebra/bivariate_jet.hpp"
#include "altzeta/algebra/laurent.hpp"
#include "altzeta/algebra/sparse_poly.hpp"

namespace altzeta {

/// Truncated bivariate series in (a, b) stored by homogeneous parts:
/// parts[d][i] is the coefficient of a^i b^{d-i}.
template <class C>
struct HomogeneousSeries {
  std::vector<std::vector<C>> parts;
  int max_degree() const { return static_cast<int>(parts.size()) - 1; }
  const C& coeff(int i, int j) const { return parts[static_cast<std::size_t>(i + j)][static_cast<std::size_t>(i)]; }
};

/// G(a,b) = Gamma(1+a) Gamma(1+b) / Gamma(a+b) through total degree
/// `max_degree`, written as (a+b) exp(l(a) + l(b) - l(a+b)) where
/// l(t) = log Gamma(1+t) = sum_{n>=1} log_gamma[n] t^n. `one` fixes the
/// coefficient ring (and, for floating rings, the precision).
template <class C>
HomogeneousSeries<C> gamma_ratio_series(int max_degree, const std::vector<C>& log_gamma,
                                        const C& one) {
  const C zero = one * Rational(0);
  const int T = max_degree;
  // Homogeneous parts of the exponent, degree 1..T-1.
  std::vector<std::vector<C>> e(static_cast<std::size_t>(std::max(T, 1)));
  for (int n = 1; n < T; ++n) {
    auto& part = e[static_cast<std::size_t>(n)];
    part.assign(static_cast<std::size_t>(n) + 1, zero);
    for (int i = 0; i <= n; ++i) {
      Rational w = -binomial(n, i);
      if (i == 0) w += Rational(1);
      if (i == n) w += Rational(1);
      part[static_cast<std::size_t>(i)] = log_gamma.at(static_cast<std::size_t>(n)) * w;
    }
  }
  // H = exp(E) by d H_d = sum_j j E_j H_{d-j}.
  std::vector<std::vector<C>> h(static_cast<std::size_t>(std::max(T, 1)));
  h[0] = {one};
  for (int d = 1; d < T; ++d) {
    auto& hd = h[static_cast<std::size_t>(d)];
    hd.assign(static_cast<std::size_t>(d) + 1, zero);
    for (int j = 1; j <= d; ++j) {
      const auto& ej = e[static_cast<std::size_t>(j)];
      const auto& hr = h[static_cast<std::size_t>(d - j)];
      for (int p = 0; p <= j; ++p) {
        if (is_zero(ej[static_cast<std::size_t>(p)])) continue;
        const C w = ej[static_cast<std::size_t>(p)] * Rational(j, d);
        for (int q = 0; q <= d - j; ++q)
          hd[static_cast<std::size_t>(p + q)] = hd[static_cast<std::size_t>(p + q)] +
                                                 w * hr[static_cast<std::size_t>(q)];
      }
    }
  }
  HomogeneousSeries<C> g;
  g.parts.assign(static_cast<std::size_t>(T) + 1, {});
  g.parts[0] = {zero};
  for (int d = 1; d <= T; ++d) {
    auto& gd = g.parts[static_cast<std::size_t>(d)];
    gd.assign(static_cast<std::size_t>(d) + 1, zero);
    const auto& hp = h[static_cast<std::size_t>(d - 1)];
    for (int i = 0; i < d; ++i) {
      gd[static_cast<std::size_t>(i)] = gd[static_cast<std::size_t>(i)] + hp[static_cast<std::size_t>(i)];
      gd[static_cast<std::size_t>(i + 1)] = gd[static_cast<std::size_t>(i + 1)] + hp[static_cast<std::size_t>(i)];
    }
  }
  return g;
}

/// log Gamma(1+t) coefficients with symbolic gamma and zeta_n, n = 1..max_n.
std::vector<SparsePoly> symbolic_log_gamma(int max_n);

/// Global expansion of G through zeta weight `weight` (total degree weight+1),
/// as a polynomial in a, b and zeta symbols.
SparsePoly gamma_ratio_global(int weight);

/// Jet of G at a = -s + u, b = s + v, keeping u^p v^q with p <= order_u,
/// q <= order_v, p + q <= max_total. The coefficient of u^p v^q is exact
/// through s^{weight+1-p-q}; higher powers are marked unknown. Throws
/// InsufficientJetOrder when a requested jet order leaves no known s-power.
BivariateJet<LaurentPoly> gamma_ratio_jet(int order_u, int order_v, int window_lo, int weight,
                                          int max_total = BivariateJet<LaurentPoly>::kUnbounded);

}  // namespace altzeta
