#include "altzeta/special/euler.hpp"

#include <stdexcept>

namespace altzeta {

std::vector<Rational> bernoulli_numbers(int n_max) {
  if (n_max < 0) throw std::domain_error("bernoulli_numbers: negative index");
  std::vector<Rational> b(static_cast<std::size_t>(n_max) + 1);
  b[0] = Rational(1);
  for (int n = 1; n <= n_max; ++n) {
    Rational acc;
    for (int k = 0; k < n; ++k) acc += binomial(n + 1, k) * b[static_cast<std::size_t>(k)];
    b[static_cast<std::size_t>(n)] = -acc / Rational(n + 1);
  }
  return b;
}

Rational bernoulli(int n) { return bernoulli_numbers(n).back(); }

Rational EulerPolynomial::operator()(const Rational& z) const {
  Rational acc;
  for (int k = degree; k >= 0; --k) acc = acc * z + coeffs[static_cast<std::size_t>(k)];
  return acc;
}

std::vector<EulerPolynomial> euler_polynomials(int n_max) {
  if (n_max < 0) throw std::domain_error("euler_polynomials: negative degree");
  std::vector<EulerPolynomial> e;
  e.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    EulerPolynomial p;
    p.degree = n;
    p.coeffs.assign(static_cast<std::size_t>(n) + 1, Rational(0));
    p.coeffs[static_cast<std::size_t>(n)] = Rational(1);
    for (int j = 0; j < n; ++j) {
      const Rational w = binomial(n, j) * Rational(1, 2);
      for (int k = 0; k <= j; ++k)
        p.coeffs[static_cast<std::size_t>(k)] -= w * e[static_cast<std::size_t>(j)].coeff(k);
    }
    e.push_back(std::move(p));
  }
  return e;
}

EulerPolynomial euler_polynomial(int n) { return euler_polynomials(n).back(); }

std::vector<Rational> euler_numbers_at_zero(int n_max) {
  if (n_max < 0) throw std::domain_error("euler_numbers_at_zero: negative index");
  std::vector<Rational> e(static_cast<std::size_t>(n_max) + 1);
  e[0] = Rational(1);
  for (int n = 1; n <= n_max; ++n) {
    Rational acc;
    for (int j = 0; j < n; ++j) acc += binomial(n, j) * e[static_cast<std::size_t>(j)];
    e[static_cast<std::size_t>(n)] = -acc / Rational(2);
  }
  return e;
}

Rational euler_at_zero(int n) { return euler_numbers_at_zero(n).back(); }

PsiOmegaSeries psi_omega(int order) {
  const auto e0 = euler_numbers_at_zero(order);
  PsiOmegaSeries r{XSeries<Rational>(order), XSeries<Rational>(order)};
  for (int k = 0; k <= order; ++k) {
    r.psi[k] = e0[static_cast<std::size_t>(k)];
    r.omega[k] = e0[static_cast<std::size_t>(k)] * Rational(k + 1);
  }
  return r;
}

}  // namespace altzeta
