#pragma once

#include <string>
#include <utility>
#include <vector>

#include "altzeta/mzv/amzv.hpp"
#include "altzeta/mzv/real.hpp"
#include "altzeta/operators/operator_series.hpp"

namespace altzeta {

/// Raised when an identity fails its numeric validation.
struct ResidualFailure : NumericsError {
  using NumericsError::NumericsError;
};

/// [z^{2m-2}] E_{2n-3}(z) times zeta({1}^ones, bar) on the left side.
struct Correction {
  int n = 0;
  Rational coeff;
  int ones = 0;
  int bar = 0;
};

/// zeta({1}^k, 2m bar) + sum corrections = P, with P a polynomial in single zetas.
struct IdentityRecord {
  int k = 0;
  int m = 0;
  SparsePoly P;
  std::vector<Correction> corrections;
  std::string residual;
  std::vector<std::pair<std::string, std::string>> config;
};

/// [x^{k+1}] of D1 o G + D2 o 1 with G = Gamma(1+a)Gamma(1+b)/Gamma(a+b),
/// exact through s^{2 max_m - 1}.
LaurentPoly corollary_row(int k, int max_m);

/// The corrections for (k, m): n = m+1 .. m + ceil(k/2).
std::vector<Correction> corollary_corrections(int k, int m);

/// zeta({1}^k, 2m bar) + sum of corrections, numerically.
Real corollary_lhs(int k, int m, int digits);

/// Zeta polynomial evaluated with zeta_n -> zeta(n) and gamma -> Euler's constant.
Real evaluate_zeta_polynomial(const SparsePoly& p, int digits);

/// Extracts P from `row`, checks gamma-freeness and weight k+2m, validates
/// numerically to 10^{-(digits-5)} and returns the record. Throws
/// ResidualFailure or AlgebraError instead of emitting a bad record.
IdentityRecord make_record(int k, int m, const LaurentPoly& row, int digits, bool normalize_even);

/// make_record(k, m, corollary_row(k, m), ...).
IdentityRecord reduce_identity(int k, int m, int digits, bool normalize_even = false);

std::string to_json(const IdentityRecord& r);
std::string to_latex(const IdentityRecord& r);
std::string to_text(const IdentityRecord& r);

}  // namespace altzeta
