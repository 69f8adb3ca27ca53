#pragma once

#include <limits>
#include <map>
#include <string>
#include <utility>

#include "altzeta/algebra/errors.hpp"
#include "altzeta/algebra/rational.hpp"

namespace altzeta {

/// Truncated Taylor expansion sum c_{ij} u^i v^j in two displacement
/// variables, with u-degree <= order_u, v-degree <= order_v and, optionally,
/// total degree <= max_total.
template <class C>
class BivariateJet {
 public:
  using Key = std::pair<int, int>;
  static constexpr int kUnbounded = std::numeric_limits<int>::max() / 4;

  BivariateJet() = default;
  BivariateJet(int order_u, int order_v, int max_total = kUnbounded)
      : order_u_(order_u), order_v_(order_v), max_total_(max_total) {
    if (order_u < 0 || order_v < 0) throw TruncationError("BivariateJet: negative order");
  }

  int order_u() const { return order_u_; }
  int order_v() const { return order_v_; }
  int max_total() const { return max_total_; }
  const std::map<Key, C>& terms() const { return terms_; }

  bool in_range(int i, int j) const {
    return i >= 0 && j >= 0 && i <= order_u_ && j <= order_v_ && i + j <= max_total_;
  }

  void add(int i, int j, const C& c) {
    using altzeta::is_zero;
    if (!in_range(i, j) || is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(Key{i, j}, c);
    if (!inserted) {
      it->second = it->second + c;
      if (is_zero(it->second)) terms_.erase(it);
    }
  }

  /// [u^i v^j]; throws InsufficientJetOrder outside the truncation.
  C coeff(int i, int j) const {
    if (!in_range(i, j))
      throw InsufficientJetOrder("BivariateJet: coefficient (" + std::to_string(i) + "," +
                                 std::to_string(j) + ") outside jet orders (" +
                                 std::to_string(order_u_) + "," + std::to_string(order_v_) + ")");
    auto it = terms_.find(Key{i, j});
    return it == terms_.end() ? C() : it->second;
  }

  /// Mixed partial at the base point: i! j! [u^i v^j].
  C partial(int i, int j) const { return coeff(i, j) * (factorial(i) * factorial(j)); }

  BivariateJet operator-() const {
    BivariateJet r = *this;
    for (auto& [k, c] : r.terms_) c = c * Rational(-1);
    return r;
  }

  friend BivariateJet operator+(const BivariateJet& a, const BivariateJet& b) {
    BivariateJet r = a.common_truncation(b);
    for (const auto& [k, c] : a.terms_) r.add(k.first, k.second, c);
    for (const auto& [k, c] : b.terms_) r.add(k.first, k.second, c);
    return r;
  }
  friend BivariateJet operator-(const BivariateJet& a, const BivariateJet& b) { return a + (-b); }

  friend BivariateJet operator*(const BivariateJet& a, const BivariateJet& b) {
    BivariateJet r = a.common_truncation(b);
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) {
        int i = ka.first + kb.first, j = ka.second + kb.second;
        if (r.in_range(i, j)) r.add(i, j, ca * cb);
      }
    return r;
  }

  friend BivariateJet operator*(BivariateJet a, const Rational& k) {
    BivariateJet r(a.order_u_, a.order_v_, a.max_total_);
    for (const auto& [key, c] : a.terms_) r.add(key.first, key.second, c * k);
    return r;
  }

  BivariateJet times_coeff(const C& k) const {
    BivariateJet r(order_u_, order_v_, max_total_);
    for (const auto& [key, c] : terms_) r.add(key.first, key.second, c * k);
    return r;
  }

  template <class F>
  auto map_coeffs(F&& f) const {
    using D = std::decay_t<decltype(f(std::declval<const C&>()))>;
    BivariateJet<D> r(order_u_, order_v_, max_total_);
    for (const auto& [key, c] : terms_) r.add(key.first, key.second, f(c));
    return r;
  }

  bool is_zero() const { return terms_.empty(); }

  friend bool operator==(const BivariateJet& a, const BivariateJet& b) {
    return a.order_u_ == b.order_u_ && a.order_v_ == b.order_v_ && a.max_total_ == b.max_total_ &&
           a.terms_ == b.terms_;
  }

 private:
  BivariateJet common_truncation(const BivariateJet& b) const {
    return BivariateJet(std::min(order_u_, b.order_u_), std::min(order_v_, b.order_v_),
                        std::min(max_total_, b.max_total_));
  }

  int order_u_ = 0;
  int order_v_ = 0;
  int max_total_ = kUnbounded;
  std::map<Key, C> terms_;
};

template <class C>
bool is_zero(const BivariateJet<C>& j) {
  return j.is_zero();
}

}  // namespace altzeta
