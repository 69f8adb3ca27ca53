#pragma once

#include <random>
#include <vector>

#include "altzeta/algebra/laurent.hpp"
#include "altzeta/algebra/sparse_poly.hpp"
#include "altzeta/algebra/xseries.hpp"

namespace altzeta::testing {

class RandomAlgebra {
 public:
  explicit RandomAlgebra(unsigned seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Rational rational(int max_num = 9, int max_den = 6) {
    return Rational(integer(-max_num, max_num), integer(1, max_den));
  }

  SparsePoly poly(const std::vector<Symbol>& gens, int max_degree, int max_terms) {
    SparsePoly p;
    const int n_terms = integer(0, max_terms);
    for (int t = 0; t < n_terms; ++t) {
      Monomial m;
      for (Symbol g : gens) m = m * Monomial(g, integer(0, max_degree));
      if (m.total_degree() > max_degree) continue;
      p.add_term(m, rational());
    }
    return p;
  }

  /// Laurent polynomial in s with exponents in [lo, hi].
  Laurent<SparsePoly> laurent(const std::vector<Symbol>& gens, int lo, int hi, int max_terms) {
    Laurent<SparsePoly> l;
    const int n_terms = integer(1, max_terms);
    for (int t = 0; t < n_terms; ++t) {
      SparsePoly c = gens.empty() ? SparsePoly(rational()) : poly(gens, 2, 2);
      l.add(integer(lo, hi), c);
    }
    return l;
  }

  XSeries<Rational> rational_series(int order) {
    XSeries<Rational> s(order);
    for (int n = 0; n <= order; ++n) s[n] = rational();
    return s;
  }

  XSeries<SparsePoly> poly_series(int order, const std::vector<Symbol>& gens, int max_degree,
                                  int max_terms) {
    XSeries<SparsePoly> s(order);
    for (int n = 0; n <= order; ++n) s[n] = poly(gens, max_degree, max_terms);
    return s;
  }

  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
};

}  // namespace altzeta::testing
