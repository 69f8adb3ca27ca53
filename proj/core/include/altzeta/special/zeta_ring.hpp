#pragma once

#include <vector>

#include "altzeta/algebra/sparse_poly.hpp"

namespace altzeta {

/// zeta(2k) / zeta(2)^k, from zeta(2k) = (-1)^{k+1} B_{2k} (2 pi)^{2k} / (2 (2k)!).
Rational even_zeta_ratio(int k);

/// Rewrites every zeta_{2k} (k >= 2) as even_zeta_ratio(k) * zeta_2^k.
SparsePoly normalize_even_zetas(const SparsePoly& p);

/// Sum of zeta indices in a monomial; gamma counts as weight 1, other
/// generators as 0.
int zeta_weight(const Monomial& m);

/// Sorted multiset of zeta indices of a monomial (gamma and other generators
/// are ignored).
std::vector<int> zeta_indices(const Monomial& m);

bool is_gamma_free(const SparsePoly& p);
bool is_weight_homogeneous(const SparsePoly& p, int weight);

/// Drops all terms of zeta weight above `max_weight`.
SparsePoly truncate_weight(const SparsePoly& p, int max_weight);

}  // namespace altzeta
