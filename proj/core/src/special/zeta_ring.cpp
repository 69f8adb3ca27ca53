#include "altzeta/special/zeta_ring.hpp"

#include <algorithm>
#include <stdexcept>

#include "altzeta/special/euler.hpp"

namespace altzeta {

Rational even_zeta_ratio(int k) {
  if (k < 1) throw std::domain_error("even_zeta_ratio: k must be positive");
  Rational sign = k % 2 == 1 ? Rational(1) : Rational(-1);
  return sign * bernoulli(2 * k) * Rational(2).pow(2 * k) * Rational(6).pow(k) /
         (Rational(2) * factorial(2 * k));
}

SparsePoly normalize_even_zetas(const SparsePoly& p) {
  SparsePoly out;
  for (const auto& [mono, c] : p.terms()) {
    SparsePoly term(Monomial(), c);
    for (const auto& f : mono.factors()) {
      const Symbol s = f.symbol;
      if (s.kind() == SymbolKind::Zeta && s.index() % 2 == 0 && s.index() > 2) {
        const int k = s.index() / 2;
        SparsePoly repl = SparsePoly(sym::zeta(2)).pow(k) * even_zeta_ratio(k);
        term = term * repl.pow(f.exponent);
      } else {
        term = term * SparsePoly(Monomial(s, f.exponent), Rational(1));
      }
    }
    out += term;
  }
  return out;
}

int zeta_weight(const Monomial& m) {
  int w = 0;
  for (const auto& f : m.factors()) {
    if (f.symbol.kind() == SymbolKind::Zeta) w += f.symbol.index() * f.exponent;
    else if (f.symbol.kind() == SymbolKind::EulerGamma) w += f.exponent;
  }
  return w;
}

std::vector<int> zeta_indices(const Monomial& m) {
  std::vector<int> out;
  for (const auto& f : m.factors())
    if (f.symbol.kind() == SymbolKind::Zeta)
      for (int e = 0; e < f.exponent; ++e) out.push_back(f.symbol.index());
  std::sort(out.begin(), out.end());
  return out;
}

bool is_gamma_free(const SparsePoly& p) { return !p.contains(sym::euler_gamma); }

bool is_weight_homogeneous(const SparsePoly& p, int weight) {
  for (const auto& [mono, c] : p.terms())
    if (zeta_weight(mono) != weight) return false;
  return true;
}

SparsePoly truncate_weight(const SparsePoly& p, int max_weight) {
  return p.filter([max_weight](const Monomial& m) { return zeta_weight(m) <= max_weight; });
}

}  // namespace altzeta
