#pragma once

#include <vector>

#include "altzeta/operators/builders.hpp"
#include "altzeta/verify/report.hpp"

namespace altzeta {

/// f(a, b) = sum_{i+j<=D} c_ij a^i b^j with free symbols c_ij.
SparsePoly generic_function(int degree);

/// Both sides of the main theorem for a polynomial f(a, b) with scalar
/// coefficients, through x^order, as series in x over Laurent polynomials in s.
struct TheoremSides {
  SeriesXS lhs;
  SeriesXS rhs;
};
TheoremSides main_theorem_sides(const SparsePoly& f, int order, const D1Constants& k = {});

CheckReport check_main_theorem(int order, int degree, const D1Constants& k = {});
CheckReport check_main_theorem_for(const SparsePoly& f, int order, const D1Constants& k = {});

/// The identity obtained by applying L1 to the main theorem, together with
/// each intermediate display of the term-by-term proof as its own sub-check.
CheckReport check_goal_identity(int order, int degree);

/// The Euler-polynomial resummation over free symbols Z_{k,n} standing for
/// zeta({1}^{k-1}, n+1 bar), with n <= max_index.
CheckReport check_prop_resummation(int order, int max_index);
inline CheckReport check_prop_resummation(int order) { return check_prop_resummation(order, 2 * order + 2); }

/// Translation, inversion, Laplace exchange (plain and substituted), the
/// Laplace derivative and shift rules, the Psi/Omega identities, the D1
/// split and the printed form of L1, on structured and random inputs.
std::vector<CheckReport> check_lemma_suite(int order, int random_count, unsigned seed = 20240611);
inline std::vector<CheckReport> check_lemma_suite() { return check_lemma_suite(8, 50); }

/// b 2F1(a,a+b;a+1;-1) + a 2F1(b,a+b;b+1;-1) = Gamma(1+a)Gamma(1+b)/Gamma(a+b)
/// at a few sample points.
CheckReport check_beta_identity(int digits);

/// [x^{k+1} s^{2m-1}] of D1 o G + D2 o 1 against the alternating MZV side,
/// for k <= k_max, m <= m_max.
CheckReport check_corollary_numeric(int k_max, int m_max, int digits);

/// [x^3]D1 exactly, the psi/csc closed form of the zeta(1,1,2m bar) series at
/// coefficient level for m <= 3, and r_1..r_4.
CheckReport check_example_and_rm(int digits);

/// [x^{k+1}] of D2 acting on the constant 1 against -E_{k+1}(0) s^{-(k+1)},
/// for k <= max_k.
CheckReport check_d2_channel(int max_k);

/// Closed forms of zeta(2 bar), zeta(1, 2 bar) and zeta(1 bar), and agreement
/// between `digits` and `digits + 10` on random convergent indices.
CheckReport check_amzv_consistency(int digits, int random_count, unsigned seed = 20240611);

}  // namespace altzeta
