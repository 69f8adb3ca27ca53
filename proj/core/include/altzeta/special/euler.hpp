#pragma once

#include <vector>

#include "altzeta/algebra/rational.hpp"
#include "altzeta/algebra/xseries.hpp"

namespace altzeta {

/// Bernoulli numbers B_0..B_{n_max}, convention B_1 = -1/2.
std::vector<Rational> bernoulli_numbers(int n_max);
Rational bernoulli(int n);

/// E_n(z) with coefficients for z^0..z^n; generating function 2e^{tz}/(1+e^t).
struct EulerPolynomial {
  int degree = 0;
  std::vector<Rational> coeffs;

  Rational coeff(int k) const {
    return k < 0 || k > degree ? Rational(0) : coeffs[static_cast<std::size_t>(k)];
  }
  Rational operator()(const Rational& z) const;
};

/// E_0..E_{n_max}, from 2 E_n(z) + sum_{j<n} C(n,j) E_j(z) = 2 z^n.
std::vector<EulerPolynomial> euler_polynomials(int n_max);
EulerPolynomial euler_polynomial(int n);

/// E_0(0)..E_{n_max}(0).
std::vector<Rational> euler_numbers_at_zero(int n_max);
Rational euler_at_zero(int n);

struct PsiOmegaSeries {
  XSeries<Rational> psi;    // sum_k E_k(0) z^k
  XSeries<Rational> omega;  // psi + z psi'
};

PsiOmegaSeries psi_omega(int order);

}  // namespace altzeta
