#include "altzeta/special/rm.hpp"

#include <stdexcept>

#include "altzeta/algebra/elementary.hpp"
#include "altzeta/algebra/errors.hpp"
#include "altzeta/special/euler.hpp"

namespace altzeta {

RmExpansion rm_expansion(int max_m) {
  if (max_m < 1) throw std::domain_error("rm_expansion: max_m must be >= 1");
  const int order = 2 * max_m + 2;
  // w csc w and w cot w are regular; their product is w^2 cos w / sin^2 w.
  const auto wcsc = elementary_laurent(Elementary::Csc, order).body;
  const auto wcot = elementary_laurent(Elementary::Cot, order).body;
  const auto w2 = XSeries<Rational>::monomial(order, 2, Rational(1));
  XSeries<Rational> F = XSeries<Rational>::monomial(order, 0, Rational(-5, 24));
  F += wcsc * wcsc * wcsc * Rational(1, 12);
  F -= w2 * wcsc * Rational(1, 48);
  F += wcot * wcsc * Rational(1, 8);

  RmExpansion out;
  out.f = F.coefficients();
  for (int j = 0; j <= 2; ++j)
    if (!out.f[static_cast<std::size_t>(j)].is_zero())
      throw SingularPartError("rm_expansion: coefficient of t^" + std::to_string(j - 3) +
                              " is " + out.f[static_cast<std::size_t>(j)].to_string());

  // pi^{2k} = zeta(2k) * 2 (2k)! / ((-1)^{k+1} B_{2k} 2^{2k})
  const auto bern = bernoulli_numbers(order);
  out.r.assign(static_cast<std::size_t>(max_m) + 1, Rational(0));
  for (int m = 1; m <= max_m; ++m) {
    const int k = m + 1;
    Rational denom = bern[static_cast<std::size_t>(2 * k)] * Rational(2).pow(2 * k);
    if (k % 2 == 0) denom = -denom;
    out.r[static_cast<std::size_t>(m)] =
        out.f[static_cast<std::size_t>(2 * k)] * Rational(2) * factorial(2 * k) / denom;
  }
  return out;
}

std::vector<Rational> rm_coefficients(int max_m) {
  auto e = rm_expansion(max_m);
  return {e.r.begin() + 1, e.r.end()};
}

}  // namespace altzeta
