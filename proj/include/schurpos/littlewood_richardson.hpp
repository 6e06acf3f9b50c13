#pragma once

// Littlewood-Richardson coefficients by enumeration of LR skew tableaux.
//
// The skew shape lambda/mu is filled one letter at a time: the cells holding
// letter i form a horizontal strip of size nu_i, which keeps columns strict,
// and the reverse reading word (rows from row 0 upward, each right to left)
// must stay a lattice word.

#include "schurpos/expansion.hpp"

#include <optional>
#include <span>

namespace schurpos {

/// s_mu * s_nu, keeping only shapes contained in `bound` when one is given.
SchurExpansion lr_product(const Partition& mu, const Partition& nu,
                          const std::optional<Partition>& bound = std::nullopt);

/// c^lambda_{mu,nu}. Zero on size mismatch or when [mu] is not inside [lambda].
Integer lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Bilinear extension of lr_product.
SchurExpansion schur_product(const SchurExpansion& f, const SchurExpansion& g);

/// <s_lambda, s_{factors[0]} * ... * s_{factors[k-1]}>, evaluated as a chain of
/// binary products restricted to shapes inside [lambda]. With `prune`, an
/// intermediate shape tau is also dropped when lambda falls outside the
/// outer-corner bound of (tau, remaining factors...), which cannot change the
/// result.
Integer generalized_lr_coefficient(const Partition& lambda, std::span<const Partition> factors,
                                   bool prune = false);

}  // namespace schurpos
