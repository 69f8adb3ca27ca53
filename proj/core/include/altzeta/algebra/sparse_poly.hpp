#pragma once

#include <functional>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "altzeta/algebra/rational.hpp"
#include "altzeta/algebra/symbol.hpp"

namespace altzeta {

/// Power product of commuting generators, kept sorted by symbol with
/// strictly positive exponents.
class Monomial {
 public:
  struct Factor {
    Symbol symbol;
    int exponent;
    friend bool operator==(const Factor&, const Factor&) = default;
    friend auto operator<=>(const Factor&, const Factor&) = default;
  };

  Monomial() = default;
  Monomial(Symbol s, int e = 1);
  Monomial(std::initializer_list<std::pair<Symbol, int>> factors);

  const std::vector<Factor>& factors() const { return factors_; }
  bool empty() const { return factors_.empty(); }
  int exponent(Symbol s) const;
  int total_degree() const;
  /// Copy with the given symbol removed.
  Monomial without(Symbol s) const;
  Monomial with_exponent(Symbol s, int e) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial& a, const Monomial& b) {
    return a.factors_ <=> b.factors_;
  }

  std::string to_string() const;

 private:
  std::vector<Factor> factors_;
};

/// Multivariate polynomial over Rational in named commuting generators.
/// Zero coefficients are never stored.
class SparsePoly {
 public:
  using TermMap = std::map<Monomial, Rational>;

  SparsePoly() = default;
  SparsePoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  SparsePoly(long c) : SparsePoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  SparsePoly(Symbol s);  // NOLINT(google-explicit-constructor)
  SparsePoly(const Monomial& m, const Rational& c);

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  Rational coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const Rational& c);

  SparsePoly operator-() const;
  SparsePoly& operator+=(const SparsePoly& o);
  SparsePoly& operator-=(const SparsePoly& o);
  SparsePoly& operator*=(const SparsePoly& o);
  SparsePoly& operator*=(const Rational& c);

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly operator*(SparsePoly a, const Rational& c) { return a *= c; }
  friend SparsePoly operator*(const Rational& c, SparsePoly a) { return a *= c; }
  friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

  SparsePoly pow(int e) const;
  SparsePoly derivative(Symbol s) const;
  /// Replaces every occurrence of `s` by `value`.
  SparsePoly substitute(Symbol s, const SparsePoly& value) const;
  /// Name-based substitution; unknown generator names throw UnknownGenerator.
  SparsePoly substitute(std::string_view name, const SparsePoly& value) const;

  int degree(Symbol s) const;
  int total_degree() const;
  bool contains(Symbol s) const;
  /// Groups terms by the exponent of `s`: p = sum_e result[e] * s^e.
  std::map<int, SparsePoly> split(Symbol s) const;
  /// Keeps only terms accepted by the predicate.
  SparsePoly filter(const std::function<bool(const Monomial&)>& keep) const;

  /// Product that discards monomials rejected by `keep` as they are formed.
  static SparsePoly multiply_truncated(const SparsePoly& p, const SparsePoly& q,
                                       const std::function<bool(const Monomial&)>& keep);

  /// Evaluates with every generator mapped to a value of ring T.
  template <class T, class Assign, class FromRational>
  T evaluate(Assign&& assign, FromRational&& from_rational) const;

  std::string to_string() const;

 private:
  TermMap terms_;
};

inline bool is_zero(const SparsePoly& p) { return p.is_zero(); }

template <class T, class Assign, class FromRational>
T SparsePoly::evaluate(Assign&& assign, FromRational&& from_rational) const {
  T total = from_rational(Rational(0));
  for (const auto& [mono, c] : terms_) {
    T term = from_rational(c);
    for (const auto& f : mono.factors()) {
      T base = assign(f.symbol);
      for (int k = 0; k < f.exponent; ++k) term = term * base;
    }
    total = total + term;
  }
  return total;
}

}  // namespace altzeta
