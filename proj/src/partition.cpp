#include "schurpos/partition.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace schurpos {

namespace {

Partition::Part checked_add(Partition::Part a, Partition::Part b) {
    Partition::Part out;
    if (__builtin_add_overflow(a, b, &out)) {
        throw std::overflow_error("partition arithmetic overflow");
    }
    return out;
}

Partition::Part checked_mul(Partition::Part a, Partition::Part b) {
    Partition::Part out;
    if (__builtin_mul_overflow(a, b, &out)) {
        throw std::overflow_error("partition arithmetic overflow");
    }
    return out;
}

}  // namespace

Partition::Partition(std::initializer_list<Part> parts) : Partition(std::vector<Part>(parts)) {}

Partition::Partition(std::vector<Part> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) {
        parts_.pop_back();
    }
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) {
            throw std::invalid_argument("partition parts must be positive: " + to_string());
        }
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw std::invalid_argument("partition parts must be weakly decreasing: " + to_string());
        }
        size_ = checked_add(size_, parts_[i]);
    }
}

Partition Partition::from_unsorted(std::vector<Part> parts) {
    if (std::any_of(parts.begin(), parts.end(), [](Part p) { return p < 0; })) {
        throw std::invalid_argument("partition parts must be non-negative");
    }
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

std::string Partition::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    out += ')';
    return out;
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto part : p) {
        h ^= static_cast<std::size_t>(part) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

bool contains(const Partition& outer, const Partition& inner) {
    if (inner.length() > outer.length()) return false;
    for (std::size_t i = 0; i < inner.length(); ++i) {
        if (inner[i] > outer[i]) return false;
    }
    return true;
}

Partition conjugate(const Partition& lambda) {
    if (lambda.empty()) return {};
    std::vector<Partition::Part> cols(static_cast<std::size_t>(lambda[0]), 0);
    for (auto row : lambda) {
        for (Partition::Part c = 0; c < row; ++c) ++cols[static_cast<std::size_t>(c)];
    }
    return Partition(std::move(cols));
}

Partition sum(const Partition& lambda, const Partition& mu) {
    std::vector<Partition::Part> parts(std::max(lambda.length(), mu.length()));
    for (std::size_t i = 0; i < parts.size(); ++i) parts[i] = checked_add(lambda[i], mu[i]);
    return Partition(std::move(parts));
}

Partition union_of(const Partition& lambda, const Partition& mu) {
    std::vector<Partition::Part> parts(lambda.begin(), lambda.end());
    parts.insert(parts.end(), mu.begin(), mu.end());
    return Partition::from_unsorted(std::move(parts));
}

Partition scale(const Partition& lambda, std::int64_t n) {
    std::vector<Partition::Part> parts;
    parts.reserve(lambda.length());
    for (auto p : lambda) parts.push_back(checked_mul(p, n));
    return Partition(std::move(parts));
}

Partition repeat_union(const Partition& lambda, std::int64_t n) {
    std::vector<Partition::Part> parts;
    for (auto p : lambda) parts.insert(parts.end(), static_cast<std::size_t>(n), p);
    return Partition(std::move(parts));
}

bool dominates(const Partition& big, const Partition& small) {
    if (big.size() != small.size()) {
        throw SizeMismatch("dominance compares partitions of equal size: " + big.to_string() +
                           " vs " + small.to_string());
    }
    Partition::Part a = 0, b = 0;
    const std::size_t len = std::max(big.length(), small.length());
    for (std::size_t i = 0; i < len; ++i) {
        a += big[i];
        b += small[i];
        if (a < b) return false;
    }
    return true;
}

CornerSet outer_corners(const Partition& lambda) {
    CornerSet out;
    const auto len = static_cast<Partition::Part>(lambda.length());
    for (Partition::Part r = 0; r <= len; ++r) {
        const auto row = lambda[static_cast<std::size_t>(r)];
        // (row, r) is addable when the row below is strictly longer (or r == 0).
        if (r == 0 || lambda[static_cast<std::size_t>(r - 1)] > row) out.insert(Point{row, r});
    }
    return out;
}

CornerSet minkowski_sum(const CornerSet& a, const CornerSet& b) {
    CornerSet out;
    for (const auto& p : a) {
        for (const auto& q : b) out.insert(p + q);
    }
    return out;
}

CornerSet minimal_antichain(const CornerSet& s) {
    CornerSet out;
    for (const auto& p : s) {
        bool dominated = false;
        for (const auto& q : s) {
            if (q != p && q.below_or_equal(p)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) out.insert(p);
    }
    return out;
}

Partition ideal_complement(const CornerSet& s) {
    const auto gens = minimal_antichain(s);
    const bool has_column_axis = std::any_of(gens.begin(), gens.end(), [](const Point& p) { return p.c == 0; });
    const bool has_row_axis = std::any_of(gens.begin(), gens.end(), [](const Point& p) { return p.r == 0; });
    if (!has_column_axis || !has_row_axis) {
        throw InfiniteRegion("generator set needs a point with c = 0 and a point with r = 0");
    }
    Partition::Part height = std::numeric_limits<Partition::Part>::max();
    for (const auto& p : gens) {
        if (p.c == 0) height = std::min(height, p.r);
    }
    std::vector<Partition::Part> rows;
    rows.reserve(static_cast<std::size_t>(height));
    for (Partition::Part r = 0; r < height; ++r) {
        // Row r ends at the first column blocked by a generator at or below it.
        Partition::Part len = std::numeric_limits<Partition::Part>::max();
        for (const auto& p : gens) {
            if (p.r <= r) len = std::min(len, p.c);
        }
        rows.push_back(len);
    }
    return Partition(std::move(rows));
}

bool point_in_diagram(const Partition& lambda, Point p) {
    if (p.c < 0 || p.r < 0) return false;
    return p.c < lambda[static_cast<std::size_t>(p.r)];
}

namespace {

void partitions_rec(std::int64_t remaining, std::int64_t max_part, std::vector<Partition::Part>& cur,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (auto p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(std::int64_t n) {
    std::vector<Partition> out;
    if (n < 0) return out;
    std::vector<Partition::Part> cur;
    partitions_rec(n, n, cur, out);
    return out;
}

std::int64_t partition_count(std::int64_t n) {
    if (n < 0) return 0;
    // Euler's pentagonal recurrence.
    std::vector<std::int64_t> p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = 1;
    for (std::int64_t m = 1; m <= n; ++m) {
        std::int64_t total = 0;
        for (std::int64_t k = 1;; ++k) {
            const auto g1 = k * (3 * k - 1) / 2;
            const auto g2 = k * (3 * k + 1) / 2;
            if (g1 > m) break;
            const std::int64_t sign = (k % 2) ? 1 : -1;
            total += sign * p[static_cast<std::size_t>(m - g1)];
            if (g2 <= m) total += sign * p[static_cast<std::size_t>(m - g2)];
        }
        p[static_cast<std::size_t>(m)] = total;
    }
    return p[static_cast<std::size_t>(n)];
}

std::string diagram_string(const Partition& lambda) {
    std::ostringstream os;
    for (auto r = lambda.length(); r-- > 0;) {
        os << std::string(static_cast<std::size_t>(lambda[r]), '#') << '\n';
    }
    return os.str();
}

}  // namespace schurpos
