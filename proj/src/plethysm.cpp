#include "schurpos/plethysm.hpp"

#include "schurpos/littlewood_richardson.hpp"
#include "schurpos/positivity.hpp"
#include "schurpos/quotient.hpp"

#include <algorithm>
#include <future>
#include <memory>

namespace schurpos {

namespace {

struct CacheHandle {
    std::unique_ptr<CharacterCache> owned;
    CharacterCache* cache;

    explicit CacheHandle(CharacterCache* given)
        : owned(given ? nullptr : std::make_unique<CharacterCache>()), cache(given ? given : owned.get()) {}
};

Integer checked_integer(const Rational& q, const Partition& at) {
    if (q.get_den() != 1) {
        throw NonIntegralResult("coefficient of s" + at.to_string() + " is not an integer: " + q.get_str());
    }
    return q.get_num();
}

void multipartitions_rec(std::int64_t n, std::int64_t remaining, std::vector<Partition>& cur,
                         std::vector<std::vector<Partition>>& out) {
    if (static_cast<std::int64_t>(cur.size()) == n - 1) {
        for (auto& last : partitions_of(remaining)) {
            cur.push_back(std::move(last));
            out.push_back(cur);
            cur.pop_back();
        }
        return;
    }
    for (std::int64_t k = remaining; k >= 0; --k) {
        for (auto& part : partitions_of(k)) {
            cur.push_back(std::move(part));
            multipartitions_rec(n, remaining - k, cur, out);
            cur.pop_back();
        }
    }
}

}  // namespace

std::vector<std::vector<Partition>> multipartitions(std::int64_t n, std::int64_t total) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    std::vector<std::vector<Partition>> out;
    std::vector<Partition> cur;
    multipartitions_rec(n, total, cur, out);
    return out;
}

PowerSumExpansion schur_to_power(const Partition& mu, CharacterCache* cache) {
    CacheHandle chars(cache);
    PowerSumExpansion out(mu.size());
    for (const auto& rho : partitions_of(mu.size())) {
        out.add(rho, ratio(character(mu, rho, chars.cache), z_of(rho)));
    }
    return out;
}

SchurExpansion power_to_schur(const PowerSumExpansion& f, CharacterCache* cache) {
    CacheHandle chars(cache);
    SchurExpansion out(f.degree());
    if (f.is_zero()) return out;
    for (const auto& lambda : partitions_of(f.degree())) {
        Rational total = 0;
        for (const auto& [rho, c] : f) total += c * character(lambda, rho, chars.cache);
        total.canonicalize();
        out.add(lambda, checked_integer(total, lambda));
    }
    return out;
}

SchurExpansion sxp_plethysm(std::int64_t n, const Partition& lambda, const PlethysmOptions& options) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    const auto tuples = multipartitions(n, lambda.size());

    using Term = std::pair<Partition, Integer>;
    auto work = [&](std::size_t begin, std::size_t end) {
        std::vector<Term> found;
        for (std::size_t i = begin; i < end; ++i) {
            const auto& quotient = tuples[i];
            auto mu = reconstruct(n, Partition{}, quotient);
            if (options.prune && !sxp_lower_check(lambda, mu)) continue;
            const auto c = generalized_lr_coefficient(lambda, quotient, options.prune);
            if (c == 0) continue;
            found.emplace_back(std::move(mu), sxp_sign(mu, n) * c);
        }
        return found;
    };

    SchurExpansion out(n * lambda.size());
    const auto threads = std::max(1u, options.threads);
    if (threads == 1 || tuples.size() < 2) {
        for (auto& [mu, c] : work(0, tuples.size())) out.add(mu, c);
        return out;
    }
    std::vector<std::future<std::vector<Term>>> parts;
    const auto chunk = (tuples.size() + threads - 1) / threads;
    for (std::size_t begin = 0; begin < tuples.size(); begin += chunk) {
        parts.push_back(std::async(std::launch::async, work, begin, std::min(tuples.size(), begin + chunk)));
    }
    for (auto& part : parts) {
        for (auto& [mu, c] : part.get()) out.add(mu, c);
    }
    return out;
}

SchurExpansion schur_plethysm(const Partition& mu, const Partition& nu, const PlethysmOptions& options) {
    CacheHandle chars(options.cache);
    PlethysmOptions inner = options;
    inner.cache = chars.cache;

    std::map<std::int64_t, SchurExpansion> power_pieces;
    auto piece = [&](std::int64_t k) -> const SchurExpansion& {
        auto it = power_pieces.find(k);
        if (it == power_pieces.end()) it = power_pieces.emplace(k, sxp_plethysm(k, nu, inner)).first;
        return it->second;
    };

    // prod_i (p_{rho_i} o s_nu), memoized on prefixes of rho.
    std::map<Partition, SchurExpansion> products;
    products.emplace(Partition{}, SchurExpansion::basis(Partition{}));
    std::function<const SchurExpansion&(const Partition&)> product = [&](const Partition& rho) -> const SchurExpansion& {
        auto it = products.find(rho);
        if (it != products.end()) return it->second;
        std::vector<Partition::Part> prefix(rho.begin(), rho.end() - 1);
        auto value = schur_product(product(Partition(prefix)), piece(rho.parts().back()));
        return products.emplace(rho, std::move(value)).first->second;
    };

    SparseExpansion<Rational> acc(mu.size() * nu.size());
    for (const auto& rho : partitions_of(mu.size())) {
        const auto chi = character(mu, rho, chars.cache);
        if (chi == 0) continue;
        const auto weight = ratio(chi, z_of(rho));
        for (const auto& [lambda, c] : product(rho)) acc.add(lambda, weight * c);
    }

    SchurExpansion out(mu.size() * nu.size());
    for (const auto& [lambda, q] : acc) {
        Rational value = q;
        value.canonicalize();
        out.add(lambda, checked_integer(value, lambda));
    }
    return out;
}

}  // namespace schurpos
