#pragma once

// n-cores, n-quotients and the signed canonical tableau.
//
// Everything here goes through beta-sets on an n-runner abacus. A beta-set of
// length m for mu is {mu_j + m - 1 - j : 0 <= j < m}; m is always taken to be
// a multiple of n so that runner i (beads congruent to i mod n) carries a
// well-defined quotient component mu^(i).

#include "schurpos/partition.hpp"

#include <optional>
#include <vector>

namespace schurpos {

class NotACore : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NonEmptyCore : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class PointInDiagram : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct QuotientDecomposition {
    std::int64_t n = 1;
    Partition core;
    std::vector<Partition> quotient;
    /// Only defined when the core is empty.
    std::optional<int> sign;

    std::int64_t quotient_size() const;
    friend bool operator==(const QuotientDecomposition&, const QuotientDecomposition&) = default;
};

/// Strictly decreasing first-column hook lengths, padded to `length` beads.
std::vector<std::int64_t> beta_set(const Partition& mu, std::size_t length);
Partition from_beta_set(std::vector<std::int64_t> beta);

/// The n-core alone, without the quotient or sign.
Partition core_of(const Partition& mu, std::int64_t n);

QuotientDecomposition decompose(const Partition& mu, std::int64_t n);

/// Inverse of decompose. Throws NotACore if `core` has a removable n-rim hook.
Partition reconstruct(std::int64_t n, const Partition& core, const std::vector<Partition>& quotient);

/// (-1)^(sum of rim hook heights) over any removal of n-rim hooks down to the
/// empty core. Throws NonEmptyCore when the n-core of mu is not empty.
int sxp_sign(const Partition& mu, std::int64_t n);

bool is_core(const Partition& mu, std::int64_t n);

/// A filling of a diagram by nonzero integers. rows[r][c] is the entry in
/// cell (c, r), row 0 at the bottom.
struct SignedTableau {
    Partition shape;
    std::vector<std::vector<std::int64_t>> rows;

    friend bool operator==(const SignedTableau&, const SignedTableau&) = default;
};

/// Positive letters: weak along rows, strict up columns. Negative letters: the
/// opposite. Negatives precede positives in each row and sit below them in
/// each column (follows from ordering -c < ... < -1 < 1 < ... < r).
bool is_semistandard(const SignedTableau& t);

/// Largest positive letter and largest |negative letter| used by t.
Point alphabet_extent(const SignedTableau& t);

/// The canonical filling of lambda in the alphabet {-c..-1, 1..r} where
/// corner = (c, r): column k < c holds -(c - k); every remaining cell of row k
/// holds k + 1. Throws PointInDiagram when corner lies in [lambda].
SignedTableau canonical_ssyt(const Partition& lambda, Point corner);

}  // namespace schurpos
