#pragma once

#include <string>
#include <utility>
#include <vector>

#include "altzeta/algebra/errors.hpp"
#include "altzeta/algebra/rational.hpp"

namespace altzeta {

/// Power series in the distinguished variable x, truncated after x^order,
/// with coefficients in the ring R.
template <class R>
class XSeries {
 public:
  using Coeff = R;

  XSeries() : coeffs_(1) {}
  explicit XSeries(int order) : coeffs_(check_order(order) + 1) {}
  XSeries(int order, std::vector<R> coeffs) : coeffs_(std::move(coeffs)) {
    coeffs_.resize(static_cast<std::size_t>(check_order(order) + 1));
  }

  /// c * x^power, truncated at `order`.
  static XSeries monomial(int order, int power, const R& c) {
    XSeries r(order);
    if (power >= 0 && power <= order) r[power] = c;
    return r;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  R& operator[](int n) { return coeffs_.at(static_cast<std::size_t>(n)); }
  const R& operator[](int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
  const std::vector<R>& coefficients() const { return coeffs_; }

  bool is_zero() const {
    using altzeta::is_zero;
    for (const auto& c : coeffs_)
      if (!is_zero(c)) return false;
    return true;
  }

  /// Lowest n with a nonzero coefficient, or order()+1 when the series is zero.
  int valuation() const {
    using altzeta::is_zero;
    for (int n = 0; n <= order(); ++n)
      if (!is_zero((*this)[n])) return n;
    return order() + 1;
  }

  XSeries truncated(int order) const {
    if (order > this->order())
      throw TruncationError("XSeries: cannot extend order " + std::to_string(this->order()) +
                            " to " + std::to_string(order));
    return XSeries(order, std::vector<R>(coeffs_.begin(), coeffs_.begin() + order + 1));
  }

  XSeries operator-() const {
    XSeries r = *this;
    for (auto& c : r.coeffs_) c = c * Rational(-1);
    return r;
  }

  XSeries& operator+=(const XSeries& o) {
    require_same_order(o);
    for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] = coeffs_[n] + o.coeffs_[n];
    return *this;
  }
  XSeries& operator-=(const XSeries& o) {
    require_same_order(o);
    for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] = coeffs_[n] - o.coeffs_[n];
    return *this;
  }
  friend XSeries operator+(XSeries a, const XSeries& b) { return a += b; }
  friend XSeries operator-(XSeries a, const XSeries& b) { return a -= b; }

  /// Cauchy product truncated at the shared order.
  friend XSeries operator*(const XSeries& a, const XSeries& b) {
    a.require_same_order(b);
    using altzeta::is_zero;
    XSeries r(a.order());
    const int n_max = a.order();
    for (int p = 0; p <= n_max; ++p) {
      if (is_zero(a[p])) continue;
      for (int q = 0; p + q <= n_max; ++q) {
        if (is_zero(b[q])) continue;
        r[p + q] = r[p + q] + a[p] * b[q];
      }
    }
    return r;
  }
  XSeries& operator*=(const XSeries& o) { return *this = *this * o; }

  friend XSeries operator*(XSeries a, const Rational& k) {
    for (auto& c : a.coeffs_) c = c * k;
    return a;
  }
  friend XSeries operator*(const Rational& k, XSeries a) { return std::move(a) * k; }

  /// Multiplies every coefficient by an x-free ring element.
  XSeries times_coeff(const R& c) const {
    XSeries r = *this;
    for (auto& v : r.coeffs_) v = v * c;
    return r;
  }

  /// Division by x. The constant coefficient must be exactly zero; the result
  /// loses one order.
  XSeries shift_down() const {
    using altzeta::is_zero;
    if (!is_zero(coeffs_[0]))
      throw ValuationError("XSeries: division by x of a series with nonzero constant term");
    if (order() == 0) throw TruncationError("XSeries: division by x of an order-0 series");
    return XSeries(order() - 1, std::vector<R>(coeffs_.begin() + 1, coeffs_.end()));
  }

  /// Multiplication by x^k at the same order.
  XSeries shift_up(int k) const {
    XSeries r(order());
    for (int n = 0; n + k <= order(); ++n) r[n + k] = (*this)[n];
    return r;
  }

  /// d/dx; the top coefficient is lost.
  XSeries derivative() const {
    if (order() == 0) return XSeries(0);
    XSeries r(order() - 1);
    for (int n = 1; n <= order(); ++n) r[n - 1] = (*this)[n] * Rational(n);
    return r;
  }

  template <class F>
  auto map_coeffs(F&& f) const {
    using D = std::decay_t<decltype(f(std::declval<const R&>()))>;
    XSeries<D> r(order());
    for (int n = 0; n <= order(); ++n) r[n] = f((*this)[n]);
    return r;
  }

  friend bool operator==(const XSeries& a, const XSeries& b) {
    if (a.order() != b.order()) return false;
    for (int n = 0; n <= a.order(); ++n)
      if (!(a[n] == b[n])) return false;
    return true;
  }

 private:
  static int check_order(int order) {
    if (order < 0) throw TruncationError("XSeries: negative order");
    return order;
  }
  void require_same_order(const XSeries& o) const {
    if (o.order() != order())
      throw TruncationError("XSeries: mismatched orders " + std::to_string(order()) + " and " +
                            std::to_string(o.order()));
  }

  std::vector<R> coeffs_;
};

template <class R>
bool is_zero(const XSeries<R>& s) {
  return s.is_zero();
}

/// Embeds a rational series into a series over R.
template <class R>
XSeries<R> lift(const XSeries<Rational>& f) {
  return f.map_coeffs([](const Rational& c) { return R(c); });
}

/// Formal composition outer(inner) truncated at inner's order. The inner
/// series must have zero constant term.
template <class R>
XSeries<R> compose(const XSeries<Rational>& outer, const XSeries<R>& inner) {
  using altzeta::is_zero;
  if (!is_zero(inner[0]))
    throw ValuationError("compose: inner series has nonzero constant term");
  const int order = inner.order();
  if (outer.order() < order)
    throw TruncationError("compose: outer series order " + std::to_string(outer.order()) +
                          " below inner order " + std::to_string(order));
  // Horner from the top; inner has valuation >= 1, so x^order is reached
  // after at most `order` steps.
  XSeries<R> acc(order);
  for (int k = order; k >= 0; --k) {
    acc = acc * inner;
    acc[0] = acc[0] + R(outer[k]);
  }
  return acc;
}

/// Multiplicative inverse of a rational series with nonzero constant term.
XSeries<Rational> reciprocal(const XSeries<Rational>& f);

}  // namespace altzeta
