#include "schurpos/positivity.hpp"

#include "schurpos/quotient.hpp"

#include <algorithm>

namespace schurpos {

Partition lr_bound(std::span<const Partition> mus) {
    if (mus.empty()) throw std::invalid_argument("lr_bound needs at least one partition");
    CornerSet acc{Point{0, 0}};
    for (const auto& mu : mus) acc = minimal_antichain(minkowski_sum(acc, outer_corners(mu)));
    return ideal_complement(acc);
}

bool sxp_lower_check(const Partition& lambda, const Partition& mu) { return contains(mu, lambda); }

namespace {

// floor((total - tail_r) / r) for r = 1, 2, ... until it reaches zero.
Partition row_bound(std::int64_t total, const Partition& shape, bool tail_correction) {
    std::vector<Partition::Part> tails(shape.length() + 1, 0);
    for (auto r = shape.length(); r-- > 0;) tails[r] = tails[r + 1] + shape[r];
    std::vector<Partition::Part> bound;
    for (std::int64_t r = 1; r <= total; ++r) {
        const auto idx = static_cast<std::size_t>(r);
        const auto tail = (tail_correction && idx < tails.size()) ? tails[idx] : 0;
        const auto a = (total - tail) / r;
        if (a <= 0) break;
        bound.push_back(a);
    }
    return Partition(std::move(bound));
}

Partition meet(const Partition& a, const Partition& b) {
    std::vector<Partition::Part> rows(std::min(a.length(), b.length()));
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = std::min(a[i], b[i]);
    return Partition(std::move(rows));
}

}  // namespace

BoundPair sxp_upper_bound(std::int64_t n, const Partition& lambda, bool tail_correction) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    const auto total = n * lambda.size();
    BoundPair out;
    out.xi1 = row_bound(total, lambda, tail_correction);
    out.xi2 = conjugate(row_bound(total, conjugate(lambda), tail_correction));
    out.intersection = meet(out.xi1, out.xi2);
    return out;
}

bool plethysm_filter_check(const Partition& nu, const Partition& lambda) { return contains(lambda, nu); }

TrivialSignMultiplicity trivial_sign_multiplicity(const Partition& mu, const Partition& nu) {
    const auto is_row = [](const Partition& p) { return p.length() <= 1; };
    const auto is_column = [](const Partition& p) { return p.empty() || p[0] == 1; };
    // In degree zero both read the coefficient of s_(), which is s_mu[1].
    if (mu.empty() || nu.empty()) {
        const int value = is_row(mu) ? 1 : 0;
        return {value, value};
    }
    TrivialSignMultiplicity out;
    out.trivial = (is_row(mu) && is_row(nu)) ? 1 : 0;
    // omega(s_mu o s_nu) is s_mu o s_nu' for |nu| even and s_mu' o s_nu' for |nu| odd.
    const bool odd = nu.size() % 2 == 1;
    out.sign = (is_column(nu) && (odd ? is_column(mu) : is_row(mu))) ? 1 : 0;
    return out;
}

namespace {

void inside_rec(std::int64_t remaining, std::size_t row, Partition::Part cap, const Partition& box,
                std::vector<Partition::Part>& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    if (row >= box.length()) return;
    // Rows from here on are at most min(cap, box[row]) and the box is a partition.
    const auto hi = std::min({remaining, cap, box[row]});
    std::int64_t room = 0;
    for (std::size_t r = row; r < box.length(); ++r) room += std::min(hi, box[r]);
    if (room < remaining) return;
    for (auto p = hi; p >= 1; --p) {
        cur.push_back(p);
        inside_rec(remaining - p, row + 1, p, box, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_inside(std::int64_t size, const Partition& box) {
    std::vector<Partition> out;
    if (size < 0) return out;
    std::vector<Partition::Part> cur;
    inside_rec(size, 0, size, box, cur, out);
    return out;
}

std::vector<Partition> enumerate_candidates(std::int64_t n, const Partition& lambda) {
    const auto bound = sxp_upper_bound(n, lambda).intersection;
    std::vector<Partition> out;
    for (auto& mu : partitions_inside(n * lambda.size(), bound)) {
        if (!core_of(mu, n).empty()) continue;
        if (!sxp_lower_check(lambda, mu)) continue;
        out.push_back(std::move(mu));
    }
    return out;
}

}  // namespace schurpos
