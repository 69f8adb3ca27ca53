#pragma once

#include <mpfr.h>

#include <compare>
#include <string>
#include <string_view>

#include "altzeta/algebra/rational.hpp"

namespace altzeta {

/// Working precision in bits for a target of `digits` decimal digits plus
/// `guard` extra digits.
mpfr_prec_t bits_for_digits(int digits, int guard = 0);

/// Owning wrapper around an MPFR number. Every value carries its own
/// precision; binary operations round to the larger of the two.
class Real {
 public:
  explicit Real(mpfr_prec_t bits = 128);
  Real(long v, mpfr_prec_t bits);
  Real(const Rational& q, mpfr_prec_t bits);
  Real(std::string_view decimal, mpfr_prec_t bits);
  Real(const Real& o);
  Real(Real&& o) noexcept;
  Real& operator=(const Real& o);
  Real& operator=(Real&& o) noexcept;
  ~Real();

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  static Real pi(mpfr_prec_t bits);
  static Real log2(mpfr_prec_t bits);
  static Real euler_gamma(mpfr_prec_t bits);

  Real operator-() const;
  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  friend Real operator+(Real a, const Real& b) { return a += b; }
  friend Real operator-(Real a, const Real& b) { return a -= b; }
  friend Real operator*(Real a, const Real& b) { return a *= b; }
  friend Real operator/(Real a, const Real& b) { return a /= b; }
  friend Real operator*(const Real& a, const Rational& q);
  friend Real operator*(const Rational& q, const Real& a) { return a * q; }
  friend Real operator+(const Real& a, long b) { return a + Real(b, a.precision()); }
  friend Real operator*(const Real& a, long b) { return a * Real(b, a.precision()); }
  friend Real operator/(const Real& a, long b) { return a / Real(b, a.precision()); }

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_); }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Base-10 exponent e with 10^e <= |value| < 10^{e+1}; very negative for 0.
  long decimal_exponent() const;
  /// Scientific notation with `digits` significant digits.
  std::string to_string(int digits) const;
  /// Fixed-point style "-0.8224670334..." with `digits` digits after the point.
  std::string to_fixed(int digits) const;

 private:
  mpfr_t v_;
};

inline bool is_zero(const Real& r) { return r.is_zero(); }

Real abs(const Real& r);
Real sqrt(const Real& r);
Real exp(const Real& r);
Real log(const Real& r);
Real pow(const Real& r, long n);
Real pow(const Real& base, const Real& e);
Real sin(const Real& r);
/// 10^n at the given precision.
Real pow10(long n, mpfr_prec_t bits);

}  // namespace altzeta
