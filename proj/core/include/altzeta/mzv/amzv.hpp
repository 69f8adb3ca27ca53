#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "altzeta/mzv/errors.hpp"
#include "altzeta/mzv/real.hpp"

namespace altzeta {

/// Signed argument list of an alternating MZV; -k stands for a barred k.
/// Summation runs over 0 < n_1 < ... < n_d with entry i attached to n_i.
struct MzvIndex {
  std::vector<int> entries;

  /// Comma-separated signed integers, e.g. "1,1,-2".
  static MzvIndex parse(std::string_view text);
  /// ({1}^ones, bar(last)).
  static MzvIndex ones_then_bar(int ones, int last);

  int depth() const { return static_cast<int>(entries.size()); }
  int weight() const;
  bool convergent() const;
  std::string to_string() const;
  friend bool operator==(const MzvIndex&, const MzvIndex&) = default;
  friend auto operator<=>(const MzvIndex&, const MzvIndex&) = default;
};

inline constexpr int kMaxDigits = 2000;

/// 15 + ceil(digits / 4).
int guard_digits(int digits);

/// Sum_{k>=0} (-1)^k a(k) by Chebyshev (Cohen-Rodriguez Villegas-Zagier)
/// acceleration, retried with more terms to confirm convergence and falling
/// back to the Euler transform. `a` must return values at precision `bits`.
Real accelerate_alternating(const std::function<std::vector<Real>(int count)>& terms, int digits,
                            mpfr_prec_t bits);

/// Chebyshev acceleration with exactly `n` terms a(0..n-1).
Real crvz_sum(const std::vector<Real>& a);
/// Euler transform sum_j (-1)^j Delta^j a(0) / 2^{j+1} using all given terms.
Real euler_transform_sum(const std::vector<Real>& a);

/// Alternating MZV to `digits` decimal digits. Supported shapes: depth 1
/// (either sign), and deeper indices whose leading entries are unbarred and
/// whose last entry is barred.
Real eval_amzv(const MzvIndex& index, int digits);

/// Enclosure [lo, hi] from partial sums through n_d = cutoff and cutoff+1;
/// valid once the outer terms decrease monotonically, which is checked over
/// the summed range. Only for indices with barred last entry.
struct Bracket {
  Real lo;
  Real hi;
};
Bracket bracket_amzv(const MzvIndex& index, long cutoff);

Real eval_zeta(int n, int digits);
Real eval_gamma(const Real& z, int digits);
Real eval_digamma(const Real& z, int digits);

/// 2F1(a, b; c; -1) through 2^{-a} 2F1(a, c-b; c; 1/2).
Real eval_2f1_at_minus1(const Real& a, const Real& b, const Real& c, int digits);

/// [x^k s^n] of 1 - 2F1(x, -s; 1-s; -1) for 0 <= k <= k_max, 0 <= n <= n_max,
/// computed with truncated bivariate series arithmetic on
/// 2^{-x} sum_j (x)_j / (1-s)_j 2^{-j}.
std::vector<std::vector<Real>> hypergeometric_generating_coefficients(int k_max, int n_max,
                                                                      int digits);

}  // namespace altzeta
