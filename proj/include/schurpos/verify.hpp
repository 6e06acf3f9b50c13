#pragma once

// Exhaustive cross-checks between the main engine, the power-sum oracle and
// the positivity filters. Each sweep stops at the first counterexample.

#include "schurpos/characters.hpp"
#include "schurpos/plethysm.hpp"

#include <optional>
#include <string>
#include <vector>

namespace schurpos::verify {

struct SweepReport {
    std::string name;
    std::size_t checked = 0;
    std::optional<std::string> counterexample;

    bool passed() const noexcept { return !counterexample.has_value(); }
};

/// schur_product against oracle_product for |mu| + |nu| <= max_degree.
SweepReport product_vs_oracle(std::int64_t max_degree, CharacterCache& cache);

/// c^lambda_{mu,nu} = c^lambda_{nu,mu} for |lambda| <= max_degree.
SweepReport lr_symmetry(std::int64_t max_degree);

/// Dominance bounds mu u nu <= lambda <= mu + nu on supp(s_mu s_nu), with
/// both extremes at coefficient 1.
SweepReport lr_support_bounds(std::int64_t max_degree);

/// Every lambda in supp(prod_k s_{mu^k}) lies inside lr_bound, for up to
/// `max_factors` nonempty factors of total size <= max_degree.
SweepReport lr_bound_soundness(std::int64_t max_degree, std::size_t max_factors = 3);

/// sxp_plethysm against the oracle for n <= max_n, |lambda| <= max_size and
/// n|lambda| <= max_degree.
SweepReport sxp_vs_oracle(std::int64_t max_n, std::int64_t max_size, std::int64_t max_degree, CharacterCache& cache);

/// Lower/upper bound soundness and empty n-core on supp(p_n o s_lambda).
SweepReport sxp_bounds_soundness(std::int64_t max_n, std::int64_t max_size, std::int64_t max_degree);

/// <s_{n lambda}, p_n o s_lambda> = 1 and <s_{u^n lambda}, .> = (-1)^{|lambda|(n-1)}.
SweepReport sxp_extreme_terms(std::int64_t max_n, std::int64_t max_size);

/// schur_plethysm against oracle_plethysm for nonempty mu, nu with |mu||nu| <= max_degree.
SweepReport plethysm_vs_oracle(std::int64_t max_degree, CharacterCache& cache);

/// [nu] inside [lambda] on supp(s_mu o s_nu), and trivial/sign multiplicities
/// read off the expansion.
SweepReport plethysm_filter_soundness(std::int64_t max_degree, CharacterCache& cache);

/// Core/quotient bijection for |mu| <= max_size, 1 <= n <= max_n.
SweepReport quotient_bijection(std::int64_t max_size, std::int64_t max_n);

/// |mu| = |core| + n |quotient| for |mu| <= max_size, 2 <= n <= max_n.
SweepReport quotient_size_formula(std::int64_t max_size, std::int64_t max_n);

/// ideal_complement(outer_corners(lambda)) = lambda and conjugation is an involution.
SweepReport corner_round_trip(std::int64_t max_size);

/// sum_rho chi^mu(rho) chi^nu(rho) / z_rho = delta_{mu,nu} for mu, nu of n <= max_size.
SweepReport character_orthogonality(std::int64_t max_size, CharacterCache& cache);

struct PruningStats {
    std::int64_t total = 0;
    std::int64_t after_filter = 0;
    std::int64_t actual_support = 0;
    double filter_ms = 0;
    double expand_ms = 0;
};

/// p(|mu||nu|), how many partitions survive plethysm_filter_check against nu,
/// and |supp(s_mu o s_nu)|.
PruningStats pruning_stats(const Partition& mu, const Partition& nu, const PlethysmOptions& options = {});

enum class Scope { All, LR, SXP, Plethysm };

/// Sweeps selected by scope, all bounded by max_degree.
std::vector<SweepReport> run_scope(Scope scope, std::int64_t max_degree, unsigned threads = 1);

}  // namespace schurpos::verify
