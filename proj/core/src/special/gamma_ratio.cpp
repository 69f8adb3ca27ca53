#include "altzeta/special/gamma_ratio.hpp"

#include <algorithm>
#include <stdexcept>

#include "altzeta/special/zeta_ring.hpp"

namespace altzeta {

std::vector<SparsePoly> symbolic_log_gamma(int max_n) {
  std::vector<SparsePoly> lg(static_cast<std::size_t>(std::max(max_n, 1)) + 1);
  lg[1] = -SparsePoly(sym::euler_gamma);
  for (int n = 2; n <= max_n; ++n)
    lg[static_cast<std::size_t>(n)] =
        SparsePoly(sym::zeta(n)) * Rational(n % 2 == 0 ? 1 : -1, n);
  return lg;
}

SparsePoly gamma_ratio_global(int weight) {
  if (weight < 1) throw std::domain_error("gamma_ratio_global: weight must be positive");
  const int T = weight + 1;
  auto g = gamma_ratio_series<SparsePoly>(T, symbolic_log_gamma(T), SparsePoly(Rational(1)));
  SparsePoly out;
  for (int d = 0; d <= T; ++d)
    for (int i = 0; i <= d; ++i) {
      const auto& c = g.coeff(i, d - i);
      if (c.is_zero()) continue;
      out += c * SparsePoly(Monomial{{sym::a, i}, {sym::b, d - i}}, Rational(1));
    }
  return out;
}

BivariateJet<LaurentPoly> gamma_ratio_jet(int order_u, int order_v, int window_lo, int weight,
                                          int max_total) {
  if (weight < 2) throw std::domain_error("gamma_ratio_jet: weight must be at least 2");
  if (order_u < 1 || order_v < 1) throw std::domain_error("gamma_ratio_jet: jet orders must be >= 1");
  const int T = weight + 1;
  const int top = std::min(order_u + order_v, max_total);
  if (T - top < 0)
    throw InsufficientJetOrder("gamma_ratio_jet: weight " + std::to_string(weight) +
                               " determines no s-power at jet order (" + std::to_string(order_u) +
                               "," + std::to_string(order_v) + ")");
  auto g = gamma_ratio_series<SparsePoly>(T, symbolic_log_gamma(T), SparsePoly(Rational(1)));
  BivariateJet<LaurentPoly> jet(order_u, order_v, max_total);
  for (int p = 0; p <= order_u; ++p)
    for (int q = 0; q <= order_v && p + q <= max_total; ++q) {
      LaurentPoly c;
      c.with_floor(window_lo);
      c.truncate_above(T - p - q);
      for (int i = p; i <= T; ++i)
        for (int j = q; i + j <= T; ++j) {
          const auto& gij = g.coeff(i, j);
          if (gij.is_zero()) continue;
          Rational w = binomial(i, p) * binomial(j, q);
          if ((i - p) % 2 != 0) w = -w;
          c.add(i - p + j - q, gij * w);
        }
      jet.add(p, q, c);
    }
  return jet;
}

}  // namespace altzeta
