#include <random>

#include "altzeta/mzv/amzv.hpp"
#include "altzeta/special/euler.hpp"
#include "altzeta/verify/checks.hpp"

namespace altzeta {

CheckReport check_d2_channel(int max_k) {
  Stopwatch clock;
  CheckReport r;
  r.name = "d2_channel";
  r.anchor = "[x^{k+1}] (D2 o 1) = -E_{k+1}(0) / s^{k+1}";
  r.param("max_k", max_k);
  const int N = max_k + 1;
  const auto D2 = build_D2(N);
  const auto out = apply(D2, polynomial_jet(SparsePoly(Rational(1)), Substitution::BEqualsS, N, N));
  SeriesXS expected(N);
  for (int n = 1; n <= N; ++n) {
    LaurentPoly c;
    c.add(-n, SparsePoly(-euler_at_zero(n)));
    expected[n] = c;
  }
  r.add(compare("D2 o 1 against Euler numbers at zero", out, expected));
  r.seconds = clock.seconds();
  return r;
}

CheckReport check_amzv_consistency(int digits, int random_count, unsigned seed) {
  Stopwatch clock;
  CheckReport r;
  r.name = "amzv_consistency";
  r.anchor = "alternating MZVs against closed forms, and agreement across precisions";
  r.param("digits", digits);
  r.param("random_count", random_count);
  r.param("seed", static_cast<long>(seed));
  const mpfr_prec_t bits = bits_for_digits(digits + 10, 10);
  const Real tol = pow10(-digits, bits);
  auto close = [&](const std::string& name, const Real& lhs, const Real& rhs, const Real& eps) {
    const Real d = abs(lhs - rhs);
    r.add({name, d <= eps, std::nullopt, "|lhs - rhs| = " + d.to_string(3)});
  };
  const Real pi = Real::pi(bits);
  close("zeta(2 bar) = -pi^2/12", eval_amzv(MzvIndex::parse("-2"), digits), -(pi * pi) / 12L, tol);
  close("zeta(1, 2 bar) = zeta(3)/8", eval_amzv(MzvIndex::parse("1,-2"), digits), eval_zeta(3, digits + 10) / 8L, tol);
  close("zeta(1 bar) = -ln 2", eval_amzv(MzvIndex::parse("-1"), digits), -Real::log2(bits), tol);

  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> depth(1, 4), entry(1, 3), last(1, 4);
  for (int t = 0; t < random_count; ++t) {
    MzvIndex idx;
    const int d = depth(rng);
    for (int i = 0; i + 1 < d; ++i) idx.entries.push_back(entry(rng));
    idx.entries.push_back(-last(rng));
    close("precision " + std::to_string(digits) + " vs " + std::to_string(digits + 10) + " for " + idx.to_string(),
          eval_amzv(idx, digits), eval_amzv(idx, digits + 10), tol);
  }
  r.seconds = clock.seconds();
  return r;
}

}  // namespace altzeta
