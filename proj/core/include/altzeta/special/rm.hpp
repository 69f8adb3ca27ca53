#pragma once

#include <vector>

#include "altzeta/algebra/rational.hpp"

namespace altzeta {

/// Laurent data of
///   -5/(24 t^3) + (1/12) pi^3 csc^3(pi t) - (1/48) pi^3 csc(pi t)
///     + pi^2 cot(pi t) csc(pi t) / (8 t).
/// With w = pi t the combination is t^{-3} F(w); `f[j]` is [w^j] F, so the
/// coefficient of t^{j-3} is f[j] pi^j.
struct RmExpansion {
  std::vector<Rational> f;
  /// r[m] for m = 1..max_m (r[0] is unused and left at 0): the coefficient
  /// of zeta(2m+2) t^{2m-1}.
  std::vector<Rational> r;
};

/// Throws SingularPartError if the t^{-3}, t^{-2} or t^{-1} parts survive.
RmExpansion rm_expansion(int max_m);

/// r_1..r_max_m.
std::vector<Rational> rm_coefficients(int max_m);

}  // namespace altzeta
