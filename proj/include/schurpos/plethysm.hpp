#pragma once

// Change of basis between Schur and power sums, the SXP rule for p_n o s_lambda,
// and general Schur plethysm s_mu o s_nu assembled from SXP pieces:
//
//   s_mu o s_nu = sum_rho chi^mu(rho) / z_rho * prod_i (p_{rho_i} o s_nu).

#include "schurpos/characters.hpp"
#include "schurpos/expansion.hpp"

namespace schurpos {

struct PlethysmOptions {
    /// Drop intermediate LR terms that the outer-corner bound rules out, and
    /// skip SXP candidates failing the containment check.
    bool prune = false;
    /// Worker threads for independent coefficients. Output does not depend on it.
    unsigned threads = 1;
    /// Shared character memo; a call-scoped cache is used when null.
    CharacterCache* cache = nullptr;
};

PowerSumExpansion schur_to_power(const Partition& mu, CharacterCache* cache = nullptr);

/// <s_lambda, f> = sum_rho chi^lambda(rho) [p_rho] f. Throws NonIntegralResult
/// if any coefficient is not an integer.
SchurExpansion power_to_schur(const PowerSumExpansion& f, CharacterCache* cache = nullptr);

/// p_n o s_lambda by the SXP rule: <s_mu, p_n o s_lambda> is sgn_n(mu) times
/// the generalized LR coefficient of lambda against the n-quotient of mu.
SchurExpansion sxp_plethysm(std::int64_t n, const Partition& lambda, const PlethysmOptions& options = {});

SchurExpansion schur_plethysm(const Partition& mu, const Partition& nu, const PlethysmOptions& options = {});

/// All n-tuples of partitions whose sizes add up to `total`.
std::vector<std::vector<Partition>> multipartitions(std::int64_t n, std::int64_t total);

}  // namespace schurpos
