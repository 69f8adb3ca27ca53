#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <string>

#include "altzeta/algebra/errors.hpp"
#include "altzeta/algebra/rational.hpp"
#include "altzeta/algebra/sparse_poly.hpp"

namespace altzeta {

/// Admissible range of s-exponents. `lo` is a hard floor (going below it is an
/// error); `hi` is the precision to which truncated expansions are carried.
struct SWindow {
  int lo;
  int hi;

  static SWindow for_order(int order) { return {-(order + 3), order + 3}; }
};

inline constexpr int kNoFloor = std::numeric_limits<int>::min() / 4;
inline constexpr int kExact = std::numeric_limits<int>::max() / 4;

/// Laurent series in s over a coefficient ring C.
///
/// Coefficients are known exactly for every exponent up to `ceiling()`; an
/// exact object (a Laurent polynomial) has ceiling kExact. Exponents below
/// `floor()` may never be produced: any operation that would need one throws
/// WindowError instead of dropping it. Products shrink the ceiling the way
/// truncated series multiplication requires, so a coefficient that is not
/// determined by the inputs is never reported.
template <class C>
class Laurent {
 public:
  using Coeff = C;

  Laurent() = default;
  Laurent(const C& c) {  // NOLINT(google-explicit-constructor)
    if (!is_zero_coeff(c)) terms_.emplace(0, c);
  }
  template <class R = C>
    requires(!std::is_same_v<R, Rational>)
  Laurent(const Rational& r) : Laurent(C(r)) {}  // NOLINT(google-explicit-constructor)
  Laurent(long r) : Laurent(C(Rational(r))) {}   // NOLINT(google-explicit-constructor)

  static Laurent monomial(int exponent, const C& c, int floor = kNoFloor) {
    Laurent l;
    l.floor_ = floor;
    l.add(exponent, c);
    return l;
  }

  const std::map<int, C>& terms() const { return terms_; }
  int floor() const { return floor_; }
  int ceiling() const { return ceiling_; }
  bool is_exact() const { return ceiling_ >= kExact; }
  /// Exactly zero: no terms and no unknown tail.
  bool is_zero() const { return terms_.empty() && is_exact(); }

  std::optional<int> valuation() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first;
  }
  std::optional<int> max_exponent() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first;
  }

  /// Coefficient of s^e; throws TruncationError above the known precision.
  C coeff(int e) const {
    if (e > ceiling_)
      throw TruncationError("Laurent: coefficient of s^" + std::to_string(e) +
                            " requested beyond precision s^" + std::to_string(ceiling_));
    auto it = terms_.find(e);
    return it == terms_.end() ? C() : it->second;
  }

  void add(int e, const C& c) {
    if (is_zero_coeff(c) || e > ceiling_) return;
    check_floor(e);
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second = it->second + c;
      if (is_zero_coeff(it->second)) terms_.erase(it);
    }
  }

  Laurent& with_floor(int f) {
    floor_ = f;
    for (const auto& [e, c] : terms_) check_floor(e);
    return *this;
  }

  /// Declares everything above s^h unknown.
  Laurent& truncate_above(int h) {
    ceiling_ = std::min(ceiling_, h);
    terms_.erase(terms_.upper_bound(ceiling_), terms_.end());
    return *this;
  }

  Laurent operator-() const {
    Laurent r = *this;
    for (auto& [e, c] : r.terms_) c = c * Rational(-1);
    return r;
  }

  Laurent& operator+=(const Laurent& o) {
    floor_ = std::max(floor_, o.floor_);
    for (const auto& [e, c] : terms_) check_floor(e);
    truncate_above(o.ceiling_);
    for (const auto& [e, c] : o.terms_) add(e, c);
    return *this;
  }
  Laurent& operator-=(const Laurent& o) { return *this += -o; }

  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }

  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    r.floor_ = std::max(a.floor_, b.floor_);
    r.ceiling_ = product_ceiling(a, b);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        if (ea + eb > r.ceiling_) continue;
        r.add(ea + eb, ca * cb);
      }
    return r;
  }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  friend Laurent operator*(Laurent a, const Rational& k) {
    if (k.is_zero()) {
      a.terms_.clear();
      return a;
    }
    for (auto& [e, c] : a.terms_) c = c * k;
    return a;
  }
  friend Laurent operator*(const Rational& k, Laurent a) { return std::move(a) * k; }

  /// Multiplies every coefficient by c (c must not involve s).
  Laurent times_coeff(const C& c) const {
    Laurent r;
    r.floor_ = floor_;
    r.ceiling_ = ceiling_;
    for (const auto& [e, v] : terms_) r.add(e, v * c);
    return r;
  }

  /// Multiplies by s^k.
  Laurent shifted(int k) const {
    Laurent r;
    r.floor_ = floor_;
    r.ceiling_ = is_exact() ? kExact : ceiling_ + k;
    for (const auto& [e, c] : terms_) r.add(e + k, c);
    return r;
  }

  /// d/ds.
  Laurent derivative() const {
    Laurent r;
    r.floor_ = floor_;
    r.ceiling_ = is_exact() ? kExact : ceiling_ - 1;
    for (const auto& [e, c] : terms_)
      if (e != 0) r.add(e - 1, c * Rational(e));
    return r;
  }

  /// Replaces s by -s.
  Laurent reflected() const {
    Laurent r = *this;
    for (auto& [e, c] : r.terms_)
      if (e % 2 != 0) c = c * Rational(-1);
    return r;
  }

  template <class F>
  auto map_coeffs(F&& f) const {
    using D = std::decay_t<decltype(f(std::declval<const C&>()))>;
    Laurent<D> r;
    r.with_floor(floor_);
    if (!is_exact()) r.truncate_above(ceiling_);
    for (const auto& [e, c] : terms_) r.add(e, f(c));
    return r;
  }

  /// Equality of all coefficients determined by both operands.
  friend bool operator==(const Laurent& a, const Laurent& b) {
    int h = std::min(a.ceiling_, b.ceiling_);
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    while (true) {
      while (ia != a.terms_.end() && ia->first > h) ia = a.terms_.end();
      while (ib != b.terms_.end() && ib->first > h) ib = b.terms_.end();
      if (ia == a.terms_.end() || ib == b.terms_.end())
        return ia == a.terms_.end() && ib == b.terms_.end();
      if (ia->first != ib->first || !(ia->second == ib->second)) return false;
      ++ia;
      ++ib;
    }
  }

  std::string to_string() const {
    if (terms_.empty()) return is_exact() ? "0" : "O(s^" + std::to_string(ceiling_ + 1) + ")";
    std::string out;
    for (const auto& [e, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += "(" + coeff_string(c) + ")*s^" + std::to_string(e);
    }
    if (!is_exact()) out += " + O(s^" + std::to_string(ceiling_ + 1) + ")";
    return out;
  }

 private:
  template <class>
  friend class Laurent;

  static bool is_zero_coeff(const C& c) {
    using altzeta::is_zero;
    return is_zero(c);
  }
  static std::string coeff_string(const C& c) {
    if constexpr (requires { c.to_string(); }) return c.to_string();
    else return "?";
  }

  void check_floor(int e) const {
    if (e < floor_)
      throw WindowError("Laurent: exponent s^" + std::to_string(e) + " below window floor s^" +
                        std::to_string(floor_));
  }

  static std::int64_t effective_valuation(const Laurent& l) {
    if (!l.terms_.empty()) return l.terms_.begin()->first;
    return static_cast<std::int64_t>(l.ceiling_) + 1;
  }

  static int product_ceiling(const Laurent& a, const Laurent& b) {
    if (a.is_exact() && b.is_exact()) return kExact;
    if ((a.is_exact() && a.terms_.empty()) || (b.is_exact() && b.terms_.empty())) return kExact;
    std::int64_t h = kExact;
    if (!a.is_exact()) h = std::min<std::int64_t>(h, a.ceiling_ + effective_valuation(b));
    if (!b.is_exact()) h = std::min<std::int64_t>(h, b.ceiling_ + effective_valuation(a));
    return static_cast<int>(std::clamp<std::int64_t>(h, kNoFloor, kExact));
  }

  std::map<int, C> terms_;
  int floor_ = kNoFloor;
  int ceiling_ = kExact;
};

template <class C>
bool is_zero(const Laurent<C>& l) {
  return l.is_zero();
}

/// Laurent polynomial in s with polynomial coefficients: the scalar ring of
/// operator coefficients and of applied operator results.
using LaurentPoly = Laurent<SparsePoly>;

}  // namespace altzeta
