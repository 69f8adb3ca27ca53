#include <vector>

#include "altzeta/mzv/errors.hpp"
#include "altzeta/special/euler.hpp"
#include "altzeta/special/rm.hpp"
#include "altzeta/verify/checks.hpp"
#include "altzeta/verify/reduction.hpp"

namespace altzeta {

namespace {

CheckReport start(const std::string& name, const std::string& anchor, int digits) {
  CheckReport r;
  r.name = name;
  r.anchor = anchor;
  r.param("digits", digits);
  return r;
}

SubCheck within(const std::string& name, const Real& lhs, const Real& rhs, int digits) {
  const Real diff = abs(lhs - rhs);
  const bool ok = diff <= pow10(-(digits - 5), diff.precision());
  return {name, ok, std::nullopt, "|lhs - rhs| = " + diff.to_string(3)};
}

// Truncated Laurent series with real coefficients: c[i] is the coefficient
// of s^{lo+i}, known through s^hi.
struct RealLaurent {
  int lo;
  int hi;
  std::vector<Real> c;

  RealLaurent(int lo_, int hi_, mpfr_prec_t bits) : lo(lo_), hi(hi_), c(static_cast<std::size_t>(hi_ - lo_ + 1), Real(0L, bits)) {}
  Real& at(int e) { return c[static_cast<std::size_t>(e - lo)]; }
  Real get(int e) const {
    return e < lo || e > hi ? Real(0L, c.front().precision()) : c[static_cast<std::size_t>(e - lo)];
  }
  // The product is known through s^{min(hi + o.lo, o.hi + lo)}.
  RealLaurent operator*(const RealLaurent& o) const {
    RealLaurent r(lo + o.lo, std::min(hi + o.lo, o.hi + lo), c.front().precision());
    for (int i = lo; i <= hi; ++i)
      for (int j = o.lo; j <= o.hi; ++j)
        if (i + j <= r.hi) r.at(i + j) += get(i) * o.get(j);
    return r;
  }
  RealLaurent operator+(const RealLaurent& o) const {
    RealLaurent r(std::min(lo, o.lo), std::min(hi, o.hi), c.front().precision());
    for (int e = r.lo; e <= r.hi; ++e) r.at(e) = get(e) + o.get(e);
    return r;
  }
  RealLaurent operator*(const Real& k) const {
    RealLaurent r = *this;
    for (auto& v : r.c) v *= k;
    return r;
  }
};

}  // namespace

CheckReport check_beta_identity(int digits) {
  Stopwatch clock;
  auto r = start("beta_identity", "b 2F1(a,a+b;a+1;-1) + a 2F1(b,a+b;b+1;-1) as a ratio of Gamma values", digits);
  const mpfr_prec_t bits = bits_for_digits(digits, guard_digits(digits));
  const std::vector<std::pair<Rational, Rational>> points = {
      {Rational(3, 10), Rational(1, 2)}, {Rational(1, 3), Rational(2, 7)},
      {Rational(-1, 5), Rational(9, 20)}, {Rational(3, 2), Rational(1, 4)}};
  for (const auto& [qa, qb] : points) {
    const Real a(qa, bits), b(qb, bits), one(1L, bits);
    const Real lhs = b * eval_2f1_at_minus1(a, a + b, a + one, digits) +
                     a * eval_2f1_at_minus1(b, a + b, b + one, digits);
    const Real rhs = eval_gamma(one + a, digits) * eval_gamma(one + b, digits) / eval_gamma(a + b, digits);
    r.add(within("a=" + qa.to_fraction() + ", b=" + qb.to_fraction(), lhs, rhs, digits));
  }
  r.seconds = clock.seconds();
  return r;
}

CheckReport check_corollary_numeric(int k_max, int m_max, int digits) {
  Stopwatch clock;
  auto r = start("corollary_numeric", "coefficients of D1 o G + D2 o 1 against zeta({1}^k, 2m bar) with corrections", digits);
  r.param("k_max", k_max);
  r.param("m_max", m_max);
  for (int k = 0; k <= k_max; ++k) {
    const LaurentPoly row = corollary_row(k, m_max);
    // Only odd positive s-powers may appear.
    SubCheck shape{"k=" + std::to_string(k) + ": only s^{2m-1}, m >= 1, survive", true, std::nullopt, {}};
    for (const auto& [e, c] : row.terms())
      if (e <= 0 || e % 2 == 0) {
        shape.passed = false;
        shape.detail = "nonzero coefficient at s^" + std::to_string(e);
        break;
      }
    r.add(shape);
    for (int m = 1; m <= m_max; ++m) {
      const std::string tag = "k=" + std::to_string(k) + ", m=" + std::to_string(m);
      try {
        const IdentityRecord rec = make_record(k, m, row, digits, false);
        r.add({tag, true, std::nullopt, "residual " + rec.residual});
      } catch (const std::exception& e) {
        r.add({tag, false, std::nullopt, e.what()});
      }
    }
  }
  // The zeta(2 bar) channel against the partial-fraction value -pi^2/12.
  const mpfr_prec_t bits = bits_for_digits(digits, guard_digits(digits));
  const Real pi = Real::pi(bits);
  const Real expected = -(pi * pi) / 12L;
  r.add(within("[x s] of the right side equals -pi^2/12",
               evaluate_zeta_polynomial(corollary_row(0, 1).coeff(1), digits), expected, digits));
  r.add(within("zeta(2 bar) equals -pi^2/12", eval_amzv(MzvIndex::parse("-2"), digits), expected, digits));
  r.seconds = clock.seconds();
  return r;
}

CheckReport check_example_and_rm(int digits) {
  Stopwatch clock;
  auto r = start("example_and_rm", "zeta(1,1,2m bar): the x^3 operator, the psi/csc closed form and r_m", digits);
  const std::string printed = "∂_a∂_b/(4s²) − ∂_a(∂_b)²/(8s) + ∂_a/(4s³) − (∂_b)²/(4s²) + (∂_b)³/(24s)";
  const std::string got = format_operator_coefficient(build_D1(3)[3], OutputFormat::Text);
  r.add({"[x^3] D1 matches the printed operator", got == printed, std::nullopt, got});

  // Closed form: -1/(4s^3) + C/(4s^2) + pi^2 C/24 + C A/(4s) - C A B/4 - C B/(4s),
  // C = pi csc(pi s), A = psi(1-s) + gamma, B = psi(1+s) + gamma.
  const int M = 3, top = 2 * M + 1;
  const mpfr_prec_t bits = bits_for_digits(digits, guard_digits(digits));
  const Real pi = Real::pi(bits);
  RealLaurent C(-1, top + 3, bits), A(1, top + 3, bits), Bv(1, top + 3, bits);
  C.at(-1) = Real(1L, bits);
  for (int j = 1; 2 * j - 1 <= top + 3; ++j) {
    // 2 eta(2j) = 2 (1 - 2^{1-2j}) zeta(2j)
    const Real z = eval_zeta(2 * j, digits);
    C.at(2 * j - 1) = (z - z * pow(Real(2L, bits), 1 - 2 * j)) * 2L;
  }
  for (int n = 2; n - 1 <= top + 3; ++n) {
    const Real z = eval_zeta(n, digits);
    A.at(n - 1) = -z;
    Bv.at(n - 1) = n % 2 == 0 ? z : -z;
  }
  auto mono = [&](int e, const Real& c) {
    RealLaurent t(e, top + 10, bits);
    t.at(e) = c;
    return t;
  };
  const Real q(Rational(1, 4), bits);
  RealLaurent rhs = mono(-3, Real(Rational(-1, 4), bits));
  rhs = rhs + C * mono(-2, q);
  rhs = rhs + C * (pi * pi / 24L);
  rhs = rhs + C * A * mono(-1, q);
  rhs = rhs + C * A * Bv * Real(Rational(-1, 4), bits);
  rhs = rhs + C * Bv * mono(-1, -q);
  SubCheck vanish{"closed form has only odd positive powers", true, std::nullopt, {}};
  for (int e = -3; e <= top; ++e)
    if ((e <= 0 || e % 2 == 0) && abs(rhs.get(e)) > pow10(-(digits - 5), bits)) {
      vanish.passed = false;
      vanish.detail = "s^" + std::to_string(e) + ": " + rhs.get(e).to_string(5);
    }
  r.add(vanish);
  for (int m = 1; m <= M; ++m) {
    const auto corrs = corollary_corrections(2, m);
    const bool single = corrs.size() == 1 && corrs[0].ones == 1 && corrs[0].bar == 2 * m + 1;
    const Rational corr = single ? corrs[0].coeff : Rational(0);
    r.add({"k=2, m=" + std::to_string(m) + ": single correction -(2m-1)/2 on zeta(1, " +
               std::to_string(2 * m + 1) + " bar)",
           single && corr == Rational(-(2 * m - 1), 2), std::nullopt, corr.to_fraction()});
    const Real lhs = eval_amzv(MzvIndex::ones_then_bar(2, 2 * m), digits) +
                     eval_amzv(MzvIndex::ones_then_bar(1, 2 * m + 1), digits) * corr;
    r.add(within("closed form coefficient of s^" + std::to_string(2 * m - 1), lhs, rhs.get(2 * m - 1), digits));
    const IdentityRecord rec = reduce_identity(2, m, digits);
    r.add(within("operator-side P for m=" + std::to_string(m) + " matches the closed form",
                 evaluate_zeta_polynomial(rec.P, digits), rhs.get(2 * m - 1), digits));
  }
  for (int m = M + 1; m <= 5; ++m) {
    const auto corrs = corollary_corrections(2, m);
    const bool ok = corrs.size() == 1 && corrs[0].coeff == Rational(-(2 * m - 1), 2);
    r.add({"k=2, m=" + std::to_string(m) + ": single correction -(2m-1)/2", ok, std::nullopt,
           corrs.empty() ? "none" : corrs[0].coeff.to_fraction()});
  }

  SubCheck rm{"r_1..r_4 = 3/32, 151/192, 3287/1536, 10629/2560", false, std::nullopt, {}};
  try {
    const auto values = rm_coefficients(4);
    const std::vector<Rational> expected = {Rational(3, 32), Rational(151, 192), Rational(3287, 1536),
                                            Rational(10629, 2560)};
    rm.passed = values == expected;
    for (const auto& v : values) rm.detail += (rm.detail.empty() ? "" : ", ") + v.to_fraction();
  } catch (const std::exception& e) {
    rm.detail = e.what();
  }
  r.add(rm);
  r.seconds = clock.seconds();
  return r;
}

}  // namespace altzeta
