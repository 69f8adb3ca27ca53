#include "altzeta/mzv/real.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace altzeta {

mpfr_prec_t bits_for_digits(int digits, int guard) {
  const double d = std::max(1, digits + guard);
  return static_cast<mpfr_prec_t>(std::ceil(d * 3.3219280948873623)) + 8;
}

Real::Real(mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_zero(v_, 1);
}

Real::Real(long v, mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_si(v_, v, MPFR_RNDN);
}

Real::Real(const Rational& q, mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_q(v_, q.get().get_mpq_t(), MPFR_RNDN);
}

Real::Real(std::string_view decimal, mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  std::string s(decimal);
  if (mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN) != 0)
    throw std::invalid_argument("Real: cannot parse '" + s + "'");
}

Real::Real(const Real& o) {
  mpfr_init2(v_, o.precision());
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_swap(v_, o.v_);
}

Real& Real::operator=(const Real& o) {
  if (this != &o) {
    mpfr_set_prec(v_, o.precision());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::pi(mpfr_prec_t bits) {
  Real r(bits);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

Real Real::log2(mpfr_prec_t bits) {
  Real r(bits);
  mpfr_const_log2(r.v_, MPFR_RNDN);
  return r;
}

Real Real::euler_gamma(mpfr_prec_t bits) {
  Real r(bits);
  mpfr_const_euler(r.v_, MPFR_RNDN);
  return r;
}

Real Real::operator-() const {
  Real r(*this);
  mpfr_neg(r.v_, r.v_, MPFR_RNDN);
  return r;
}

namespace {

void widen(mpfr_ptr target, mpfr_srcptr other) {
  if (mpfr_get_prec(other) > mpfr_get_prec(target))
    mpfr_prec_round(target, mpfr_get_prec(other), MPFR_RNDN);
}

}  // namespace

Real& Real::operator+=(const Real& o) {
  widen(v_, o.v_);
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& o) {
  widen(v_, o.v_);
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& o) {
  widen(v_, o.v_);
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& o) {
  widen(v_, o.v_);
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real operator*(const Real& a, const Rational& q) {
  Real r(a);
  mpfr_mul_q(r.v_, r.v_, q.get().get_mpq_t(), MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.v_, b.v_);
  return c < 0 ? std::partial_ordering::less
               : c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent;
}

long Real::decimal_exponent() const {
  if (mpfr_zero_p(v_)) return -1000000;
  Real t(*this);
  mpfr_abs(t.v_, t.v_, MPFR_RNDN);
  mpfr_log10(t.v_, t.v_, MPFR_RNDN);
  mpfr_floor(t.v_, t.v_);
  return mpfr_get_si(t.v_, MPFR_RNDN);
}

std::string Real::to_string(int digits) const {
  std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", std::max(0, digits - 1), v_);
  return buf.data();
}

std::string Real::to_fixed(int digits) const {
  std::vector<char> buf(static_cast<std::size_t>(digits) + 64 +
                        static_cast<std::size_t>(std::max(0L, decimal_exponent())));
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rf", digits, v_);
  return buf.data();
}

Real abs(const Real& r) {
  Real t(r);
  mpfr_abs(t.get(), t.get(), MPFR_RNDN);
  return t;
}

Real sqrt(const Real& r) {
  Real t(r);
  mpfr_sqrt(t.get(), t.get(), MPFR_RNDN);
  return t;
}

Real exp(const Real& r) {
  Real t(r);
  mpfr_exp(t.get(), t.get(), MPFR_RNDN);
  return t;
}

Real log(const Real& r) {
  Real t(r);
  mpfr_log(t.get(), t.get(), MPFR_RNDN);
  return t;
}

Real pow(const Real& r, long n) {
  Real t(r);
  mpfr_pow_si(t.get(), t.get(), n, MPFR_RNDN);
  return t;
}

Real pow(const Real& base, const Real& e) {
  Real t(std::max(base.precision(), e.precision()));
  mpfr_pow(t.get(), base.get(), e.get(), MPFR_RNDN);
  return t;
}

Real sin(const Real& r) {
  Real t(r);
  mpfr_sin(t.get(), t.get(), MPFR_RNDN);
  return t;
}

Real pow10(long n, mpfr_prec_t bits) {
  Real t(10, bits);
  mpfr_pow_si(t.get(), t.get(), n, MPFR_RNDN);
  return t;
}

}  // namespace altzeta
