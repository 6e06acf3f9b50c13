#include "schurpos/oracle.hpp"

#include <memory>

namespace schurpos::oracle {

namespace {

template <typename F>
auto with_cache(CharacterCache* given, F&& body) {
    if (given) return body(*given);
    CharacterCache local;
    return body(local);
}

}  // namespace

PowerSumExpansion power_expansion(const Partition& mu, CharacterCache& cache) {
    PowerSumExpansion out(mu.size());
    for (const auto& rho : partitions_of(mu.size())) {
        out.add(rho, ratio(Integer(static_cast<long>(cache.get_or_compute(mu, rho))), z_of(rho)));
    }
    return out;
}

PowerSumExpansion multiply(const PowerSumExpansion& f, const PowerSumExpansion& g) {
    PowerSumExpansion out(f.degree() + g.degree());
    for (const auto& [a, x] : f) {
        for (const auto& [b, y] : g) out.add(union_of(a, b), x * y);
    }
    return out;
}

PowerSumExpansion power_plethysm(std::int64_t k, const PowerSumExpansion& f) {
    PowerSumExpansion out(k * f.degree());
    for (const auto& [rho, c] : f) out.add(scale(rho, k), c);
    return out;
}

SchurExpansion to_schur(const PowerSumExpansion& f, CharacterCache& cache) {
    SchurExpansion out(f.degree());
    if (f.is_zero()) return out;
    for (const auto& lambda : partitions_of(f.degree())) {
        Rational total = 0;
        for (const auto& [rho, c] : f) total += c * static_cast<long>(cache.get_or_compute(lambda, rho));
        total.canonicalize();
        if (total.get_den() != 1) {
            throw NonIntegralResult("oracle: coefficient of s" + lambda.to_string() + " is " + total.get_str());
        }
        out.add(lambda, total.get_num());
    }
    return out;
}

SchurExpansion oracle_product(const Partition& mu, const Partition& nu, CharacterCache* cache) {
    return with_cache(cache, [&](CharacterCache& chars) {
        return to_schur(multiply(power_expansion(mu, chars), power_expansion(nu, chars)), chars);
    });
}

SchurExpansion oracle_power_plethysm(std::int64_t n, const Partition& lambda, CharacterCache* cache) {
    return with_cache(cache, [&](CharacterCache& chars) {
        return to_schur(power_plethysm(n, power_expansion(lambda, chars)), chars);
    });
}

SchurExpansion oracle_plethysm(const Partition& mu, const Partition& nu, CharacterCache* cache) {
    return with_cache(cache, [&](CharacterCache& chars) {
        const auto inner = power_expansion(nu, chars);
        PowerSumExpansion total(mu.size() * nu.size());
        for (const auto& [rho, weight] : power_expansion(mu, chars)) {
            // p_rho o f = prod_i p_{rho_i} o f.
            auto term = PowerSumExpansion::basis(Partition{});
            for (auto part : rho) term = multiply(term, power_plethysm(part, inner));
            term *= weight;
            total += term;
        }
        return to_schur(total, chars);
    });
}

}  // namespace schurpos::oracle
