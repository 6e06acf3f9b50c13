#pragma once

// Brute-force reference path working entirely in the power-sum basis. It
// shares only Partition, z_of and character with the main engine; products
// and plethysms are assembled here from p_a * p_b = p_{a u b} and
// p_n o p_m = p_{nm}.

#include "schurpos/characters.hpp"
#include "schurpos/expansion.hpp"

namespace schurpos::oracle {

/// s_mu expanded as sum_rho chi^mu(rho) / z_rho p_rho.
PowerSumExpansion power_expansion(const Partition& mu, CharacterCache& cache);

PowerSumExpansion multiply(const PowerSumExpansion& f, const PowerSumExpansion& g);

/// p_k o f for f given on the power-sum basis.
PowerSumExpansion power_plethysm(std::int64_t k, const PowerSumExpansion& f);

/// Back to the Schur basis; throws NonIntegralResult on a fractional coefficient.
SchurExpansion to_schur(const PowerSumExpansion& f, CharacterCache& cache);

SchurExpansion oracle_product(const Partition& mu, const Partition& nu, CharacterCache* cache = nullptr);

/// p_n o s_lambda.
SchurExpansion oracle_power_plethysm(std::int64_t n, const Partition& lambda, CharacterCache* cache = nullptr);

SchurExpansion oracle_plethysm(const Partition& mu, const Partition& nu, CharacterCache* cache = nullptr);

}  // namespace schurpos::oracle
