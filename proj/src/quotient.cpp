#include "schurpos/quotient.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace schurpos {

namespace {

std::size_t abacus_length(std::size_t len, std::int64_t n) {
    const auto un = static_cast<std::size_t>(n);
    return (len + un - 1) / un * un;
}

void require_modulus(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("modulus n must be >= 1");
}

}  // namespace

std::int64_t QuotientDecomposition::quotient_size() const {
    std::int64_t total = 0;
    for (const auto& q : quotient) total += q.size();
    return total;
}

std::vector<std::int64_t> beta_set(const Partition& mu, std::size_t length) {
    if (length < mu.length()) throw std::invalid_argument("beta-set shorter than partition");
    std::vector<std::int64_t> beta(length);
    for (std::size_t j = 0; j < length; ++j) {
        beta[j] = mu[j] + static_cast<std::int64_t>(length - 1 - j);
    }
    return beta;
}

Partition from_beta_set(std::vector<std::int64_t> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<>());
    const auto m = beta.size();
    std::vector<Partition::Part> parts(m);
    for (std::size_t j = 0; j < m; ++j) {
        parts[j] = beta[j] - static_cast<std::int64_t>(m - 1 - j);
        if (j > 0 && beta[j] == beta[j - 1]) throw std::invalid_argument("beta-set has repeated beads");
    }
    return Partition(std::move(parts));
}

QuotientDecomposition decompose(const Partition& mu, std::int64_t n) {
    require_modulus(n);
    const auto m = abacus_length(mu.length(), n);
    const auto beta = beta_set(mu, m);

    QuotientDecomposition out;
    out.n = n;
    std::vector<std::int64_t> core_beta;
    for (std::int64_t runner = 0; runner < n; ++runner) {
        std::vector<std::int64_t> levels;
        for (auto b : beta) {
            if (b % n == runner) levels.push_back(b / n);
        }
        // levels are strictly decreasing; read them as a beta-set on the runner.
        out.quotient.push_back(from_beta_set(levels));
        for (std::size_t k = 0; k < levels.size(); ++k) {
            core_beta.push_back(static_cast<std::int64_t>(k) * n + runner);
        }
    }
    out.core = from_beta_set(std::move(core_beta));
    if (out.core.empty()) out.sign = sxp_sign(mu, n);
    return out;
}

Partition core_of(const Partition& mu, std::int64_t n) {
    require_modulus(n);
    const auto m = abacus_length(mu.length(), n);
    std::vector<std::size_t> count(static_cast<std::size_t>(n), 0);
    for (auto b : beta_set(mu, m)) ++count[static_cast<std::size_t>(b % n)];
    std::vector<std::int64_t> core_beta;
    for (std::int64_t runner = 0; runner < n; ++runner) {
        for (std::size_t k = 0; k < count[static_cast<std::size_t>(runner)]; ++k) {
            core_beta.push_back(static_cast<std::int64_t>(k) * n + runner);
        }
    }
    return from_beta_set(std::move(core_beta));
}

bool is_core(const Partition& mu, std::int64_t n) {
    require_modulus(n);
    const auto beta = beta_set(mu, mu.length());
    const std::set<std::int64_t> beads(beta.begin(), beta.end());
    for (auto b : beta) {
        if (b >= n && !beads.count(b - n)) return false;
    }
    return true;
}

Partition reconstruct(std::int64_t n, const Partition& core, const std::vector<Partition>& quotient) {
    require_modulus(n);
    if (quotient.size() != static_cast<std::size_t>(n)) {
        throw std::invalid_argument("quotient must have exactly n components");
    }
    if (!is_core(core, n)) throw NotACore(core.to_string() + " has a removable rim hook of length " + std::to_string(n));

    auto m = abacus_length(core.length(), n);
    for (;;) {
        // Bead counts per runner for a core: beads sit at the bottom of each runner.
        std::vector<std::size_t> count(static_cast<std::size_t>(n), 0);
        for (auto b : beta_set(core, m)) ++count[static_cast<std::size_t>(b % n)];
        bool fits = true;
        for (std::int64_t i = 0; i < n; ++i) {
            if (count[static_cast<std::size_t>(i)] < quotient[static_cast<std::size_t>(i)].length()) fits = false;
        }
        if (!fits) {
            m += static_cast<std::size_t>(n);
            continue;
        }
        std::vector<std::int64_t> beta;
        for (std::int64_t i = 0; i < n; ++i) {
            const auto k = count[static_cast<std::size_t>(i)];
            for (auto level : beta_set(quotient[static_cast<std::size_t>(i)], k)) beta.push_back(level * n + i);
        }
        return from_beta_set(std::move(beta));
    }
}

int sxp_sign(const Partition& mu, std::int64_t n) {
    require_modulus(n);
    auto beta = beta_set(mu, abacus_length(mu.length(), n));
    std::set<std::int64_t> beads(beta.begin(), beta.end());
    std::int64_t legs = 0;
    // Sliding a bead from b to b - n removes an n-rim hook whose height equals
    // the number of beads strictly between the two positions.
    for (bool moved = true; moved;) {
        moved = false;
        for (auto it = beads.rbegin(); it != beads.rend(); ++it) {
            const auto b = *it;
            if (b < n || beads.count(b - n)) continue;
            legs += static_cast<std::int64_t>(std::distance(beads.upper_bound(b - n), beads.lower_bound(b)));
            beads.erase(b);
            beads.insert(b - n);
            moved = true;
            break;
        }
    }
    if (!from_beta_set({beads.begin(), beads.end()}).empty()) {
        throw NonEmptyCore(mu.to_string() + " has a nonempty " + std::to_string(n) + "-core");
    }
    return legs % 2 == 0 ? 1 : -1;
}

bool is_semistandard(const SignedTableau& t) {
    if (t.rows.size() != t.shape.length()) return false;
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        if (static_cast<Partition::Part>(t.rows[r].size()) != t.shape[r]) return false;
        for (std::size_t c = 0; c < t.rows[r].size(); ++c) {
            const auto v = t.rows[r][c];
            if (v == 0) return false;
            if (c > 0) {
                const auto left = t.rows[r][c - 1];
                if (left > v) return false;
                if (left == v && v < 0) return false;
            }
            if (r > 0) {
                const auto below = t.rows[r - 1][c];
                if (below > v) return false;
                if (below == v && v > 0) return false;
            }
        }
    }
    return true;
}

Point alphabet_extent(const SignedTableau& t) {
    Point extent;
    for (const auto& row : t.rows) {
        for (auto v : row) {
            if (v > 0) extent.r = std::max(extent.r, v);
            else extent.c = std::max(extent.c, -v);
        }
    }
    return extent;
}

SignedTableau canonical_ssyt(const Partition& lambda, Point corner) {
    if (corner.c < 0 || corner.r < 0) throw std::invalid_argument("corner coordinates must be non-negative");
    if (point_in_diagram(lambda, corner)) {
        throw PointInDiagram("(" + std::to_string(corner.c) + "," + std::to_string(corner.r) + ") lies in " +
                             lambda.to_string());
    }
    SignedTableau t{lambda, {}};
    for (std::size_t r = 0; r < lambda.length(); ++r) {
        std::vector<std::int64_t> row(static_cast<std::size_t>(lambda[r]));
        for (std::size_t c = 0; c < row.size(); ++c) {
            const auto col = static_cast<std::int64_t>(c);
            row[c] = col < corner.c ? -(corner.c - col) : static_cast<std::int64_t>(r) + 1;
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

}  // namespace schurpos
