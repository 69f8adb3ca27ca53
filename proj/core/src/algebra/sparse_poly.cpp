#include "altzeta/algebra/sparse_poly.hpp"

#include <algorithm>
#include <sstream>

#include "altzeta/algebra/errors.hpp"

namespace altzeta {

Monomial::Monomial(Symbol s, int e) {
  if (e < 0) throw AlgebraError("Monomial: negative exponent");
  if (e > 0) factors_.push_back({s, e});
}

Monomial::Monomial(std::initializer_list<std::pair<Symbol, int>> factors) {
  for (const auto& [s, e] : factors) *this = *this * Monomial(s, e);
}

int Monomial::exponent(Symbol s) const {
  for (const auto& f : factors_)
    if (f.symbol == s) return f.exponent;
  return 0;
}

int Monomial::total_degree() const {
  int d = 0;
  for (const auto& f : factors_) d += f.exponent;
  return d;
}

Monomial Monomial::without(Symbol s) const {
  Monomial m;
  for (const auto& f : factors_)
    if (f.symbol != s) m.factors_.push_back(f);
  return m;
}

Monomial Monomial::with_exponent(Symbol s, int e) const {
  Monomial m = without(s);
  return e == 0 ? m : m * Monomial(s, e);
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin(), j = b.factors_.begin();
  while (i != a.factors_.end() && j != b.factors_.end()) {
    if (i->symbol < j->symbol) {
      r.factors_.push_back(*i++);
    } else if (j->symbol < i->symbol) {
      r.factors_.push_back(*j++);
    } else {
      r.factors_.push_back({i->symbol, i->exponent + j->exponent});
      ++i;
      ++j;
    }
  }
  r.factors_.insert(r.factors_.end(), i, a.factors_.end());
  r.factors_.insert(r.factors_.end(), j, b.factors_.end());
  return r;
}

std::string Monomial::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& f : factors_) {
    if (!out.empty()) out += "*";
    out += f.symbol.name();
    if (f.exponent != 1) out += "^" + std::to_string(f.exponent);
  }
  return out;
}

SparsePoly::SparsePoly(const Rational& c) {
  if (!c.is_zero()) terms_.emplace(Monomial(), c);
}

SparsePoly::SparsePoly(Symbol s) { terms_.emplace(Monomial(s), Rational(1)); }

SparsePoly::SparsePoly(const Monomial& m, const Rational& c) {
  if (!c.is_zero()) terms_.emplace(m, c);
}

bool SparsePoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational SparsePoly::constant_term() const { return coefficient(Monomial()); }

Rational SparsePoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SparsePoly::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

SparsePoly& SparsePoly::operator*=(const SparsePoly& o) { return *this = *this * o; }

SparsePoly& SparsePoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  SparsePoly r;
  if (a.is_zero() || b.is_zero()) return r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

SparsePoly SparsePoly::multiply_truncated(const SparsePoly& p, const SparsePoly& q,
                                          const std::function<bool(const Monomial&)>& keep) {
  SparsePoly r;
  for (const auto& [ma, ca] : p.terms_)
    for (const auto& [mb, cb] : q.terms_) {
      Monomial m = ma * mb;
      if (keep(m)) r.add_term(m, ca * cb);
    }
  return r;
}

SparsePoly SparsePoly::pow(int e) const {
  if (e < 0) throw AlgebraError("SparsePoly::pow: negative exponent");
  SparsePoly r(Rational(1)), base = *this;
  while (e > 0) {
    if (e & 1) r *= base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return r;
}

SparsePoly SparsePoly::derivative(Symbol s) const {
  SparsePoly r;
  for (const auto& [m, c] : terms_) {
    int e = m.exponent(s);
    if (e == 0) continue;
    r.add_term(m.with_exponent(s, e - 1), c * Rational(e));
  }
  return r;
}

SparsePoly SparsePoly::substitute(Symbol s, const SparsePoly& value) const {
  SparsePoly r;
  std::vector<SparsePoly> powers{SparsePoly(Rational(1))};
  for (const auto& [m, c] : terms_) {
    int e = m.exponent(s);
    if (e == 0) {
      r.add_term(m, c);
      continue;
    }
    while (static_cast<int>(powers.size()) <= e) powers.push_back(powers.back() * value);
    r += SparsePoly(m.without(s), c) * powers[static_cast<std::size_t>(e)];
  }
  return r;
}

SparsePoly SparsePoly::substitute(std::string_view name, const SparsePoly& value) const {
  return substitute(Symbol::parse(name), value);
}

int SparsePoly::degree(Symbol s) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(s));
  return d;
}

int SparsePoly::total_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

bool SparsePoly::contains(Symbol s) const {
  for (const auto& [m, c] : terms_)
    if (m.exponent(s) > 0) return true;
  return false;
}

std::map<int, SparsePoly> SparsePoly::split(Symbol s) const {
  std::map<int, SparsePoly> out;
  for (const auto& [m, c] : terms_) out[m.exponent(s)].add_term(m.without(s), c);
  return out;
}

SparsePoly SparsePoly::filter(const std::function<bool(const Monomial&)>& keep) const {
  SparsePoly r;
  for (const auto& [m, c] : terms_)
    if (keep(m)) r.terms_.emplace(m, c);
  return r;
}

std::string SparsePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (m.empty()) {
      os << mag;
    } else {
      if (!mag.is_one()) os << mag << "*";
      os << m.to_string();
    }
  }
  return os.str();
}

}  // namespace altzeta
