#pragma once

// Necessary conditions for nonzero coefficients, usable as pruning filters in
// front of any coefficient engine. Each predicate returning false guarantees
// the corresponding coefficient vanishes; true carries no guarantee.

#include "schurpos/partition.hpp"

#include <span>
#include <vector>

namespace schurpos {

/// Row bound Xi1, column bound Xi2 and their intersection.
struct BoundPair {
    Partition xi1;
    Partition xi2;
    Partition intersection;
};

/// Theta = complement of the ideal spanned by the Minkowski sum of the outer
/// corners of every factor. Every lambda in supp(prod_k s_{mus[k]}) fits in
/// [Theta].
Partition lr_bound(std::span<const Partition> mus);

/// [lambda] inside [mu]; false means <s_mu, p_n o s_lambda> = 0 for all n.
bool sxp_lower_check(const Partition& lambda, const Partition& mu);

/// Row bound a_r = floor((n|lambda| - (lambda_{r+1} + lambda_{r+2} + ...)) / r)
/// and the same on columns of lambda. With tail_correction off, the tails are
/// dropped and a_r = floor(n|lambda| / r).
BoundPair sxp_upper_bound(std::int64_t n, const Partition& lambda, bool tail_correction = true);

/// [nu] inside [lambda]; false means <s_lambda, s_mu o s_nu> = 0 for all mu.
bool plethysm_filter_check(const Partition& nu, const Partition& lambda);

struct TrivialSignMultiplicity {
    int trivial = 0;
    int sign = 0;
    friend bool operator==(const TrivialSignMultiplicity&, const TrivialSignMultiplicity&) = default;
};

/// Multiplicities of s_(N) and s_(1^N), N = |mu||nu|, in s_mu o s_nu.
/// trivial: mu and nu both rows. sign: nu a column, and mu a column when |nu|
/// is odd or a row when |nu| is even.
TrivialSignMultiplicity trivial_sign_multiplicity(const Partition& mu, const Partition& nu);

/// Every mu of size n|lambda| with empty n-core, [lambda] inside [mu] and [mu]
/// inside the sxp upper bound. A superset of supp(p_n o s_lambda), in
/// descending lexicographic order.
std::vector<Partition> enumerate_candidates(std::int64_t n, const Partition& lambda);

/// Partitions of `size` whose diagrams fit inside [box], descending lex.
std::vector<Partition> partitions_inside(std::int64_t size, const Partition& box);

}  // namespace schurpos
