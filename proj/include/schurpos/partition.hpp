#pragma once

// Integer partitions and their Ferrers diagrams.
//
// Coordinates follow the French convention throughout the library: a cell is
// a Point{c, r} with column c and row r, both 0-indexed, origin at the
// bottom-left. Row 0 is the longest row, so (c, r) belongs to [lambda] iff
// c < lambda[r].

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace schurpos {

class SizeMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class InfiniteRegion : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A weakly decreasing sequence of positive integers. Trailing zeros are
/// stripped on construction; any other non-monotone input is rejected.
class Partition {
public:
    using Part = std::int64_t;

    Partition() = default;
    Partition(std::initializer_list<Part> parts);
    explicit Partition(std::vector<Part> parts);

    /// Sorts arbitrary non-negative parts into a partition.
    static Partition from_unsorted(std::vector<Part> parts);

    const std::vector<Part>& parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    Part size() const noexcept { return size_; }

    /// 0-indexed row length; rows past the end read as 0.
    Part operator[](std::size_t row) const noexcept {
        return row < parts_.size() ? parts_[row] : 0;
    }

    auto begin() const noexcept { return parts_.begin(); }
    auto end() const noexcept { return parts_.end(); }

    bool operator==(const Partition& other) const noexcept { return parts_ == other.parts_; }

    /// Lexicographic on parts. Used for deterministic ordering only.
    std::strong_ordering operator<=>(const Partition& other) const noexcept {
        return parts_ <=> other.parts_;
    }

    std::string to_string() const;

private:
    std::vector<Part> parts_;
    Part size_ = 0;
};

struct PartitionHash {
    std::size_t operator()(const Partition& p) const noexcept;
};

struct Point {
    Partition::Part c = 0;
    Partition::Part r = 0;

    friend bool operator==(const Point&, const Point&) = default;
    friend auto operator<=>(const Point&, const Point&) = default;

    Point operator+(const Point& o) const noexcept { return {c + o.c, r + o.r}; }

    /// Coordinate-wise order on N0^2.
    bool below_or_equal(const Point& o) const noexcept { return c <= o.c && r <= o.r; }
};

/// Finite set of lattice points, ordered lexicographically by (c, r).
using CornerSet = std::set<Point>;

/// [inner] is a subset of [outer].
bool contains(const Partition& outer, const Partition& inner);

Partition conjugate(const Partition& lambda);

/// Part-wise sum lambda + mu.
Partition sum(const Partition& lambda, const Partition& mu);

/// Multiset union of parts, re-sorted.
Partition union_of(const Partition& lambda, const Partition& mu);

/// n * lambda = lambda + ... + lambda (n times).
Partition scale(const Partition& lambda, std::int64_t n);

/// Union of n copies of lambda.
Partition repeat_union(const Partition& lambda, std::int64_t n);

/// big dominates small (big >= small in dominance order). Throws
/// SizeMismatch when the sizes differ.
bool dominates(const Partition& big, const Partition& small);

/// Outer corners of [lambda]: cells outside the diagram whose addition keeps
/// it a partition diagram. Always contains (lambda_1, 0) and (0, l(lambda)).
CornerSet outer_corners(const Partition& lambda);

CornerSet minkowski_sum(const CornerSet& a, const CornerSet& b);

/// Minimal elements of s under the coordinate-wise order.
CornerSet minimal_antichain(const CornerSet& s);

/// The partition whose diagram is the complement of the ideal generated by s.
/// Throws InfiniteRegion unless s has a point on each axis.
Partition ideal_complement(const CornerSet& s);

bool point_in_diagram(const Partition& lambda, Point p);

/// s_lambda[X_r - Y_c] is nonzero exactly when (c, r) lies outside [lambda].
inline bool evaluation_nonzero(const Partition& lambda, Partition::Part r, Partition::Part c) {
    return !point_in_diagram(lambda, Point{c, r});
}

/// All partitions of n in descending lexicographic order.
std::vector<Partition> partitions_of(std::int64_t n);

/// Number of partitions of n.
std::int64_t partition_count(std::int64_t n);

/// Debug rendering of the diagram, longest row at the bottom.
std::string diagram_string(const Partition& lambda);

}  // namespace schurpos
