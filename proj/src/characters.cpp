#include "schurpos/characters.hpp"

#include "schurpos/quotient.hpp"

#include <mutex>

namespace schurpos {

namespace {

Partition drop_first(const Partition& rho) {
    return Partition(std::vector<Partition::Part>(rho.begin() + 1, rho.end()));
}

}  // namespace

std::int64_t CharacterCache::get_or_compute(const Partition& mu, const Partition& rho) {
    {
        std::shared_lock lock(mutex_);
        auto it = memo_.find({mu, rho});
        if (it != memo_.end()) return it->second;
    }
    const auto value = compute(mu, rho);
    std::unique_lock lock(mutex_);
    return memo_.try_emplace({mu, rho}, value).first->second;
}

std::int64_t CharacterCache::compute(const Partition& mu, const Partition& rho) {
    if (rho.empty()) return 1;
    const auto k = rho[0];
    const auto tail = drop_first(rho);
    // Remove every k-rim hook of mu: on the beta-set, a bead b slides to an
    // empty position b - k and the hook height counts the beads it jumps over.
    auto beta = beta_set(mu, mu.length());
    std::int64_t total = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        const auto target = beta[i] - k;
        if (target < 0) continue;
        bool occupied = false;
        std::int64_t jumped = 0;
        for (std::size_t j = i + 1; j < beta.size(); ++j) {
            if (beta[j] == target) occupied = true;
            if (beta[j] > target) ++jumped;
        }
        if (occupied) continue;
        auto next = beta;
        next[i] = target;
        const auto sub = get_or_compute(from_beta_set(std::move(next)), tail);
        const auto term = (jumped % 2 == 0) ? sub : -sub;
        if (__builtin_add_overflow(total, term, &total)) throw std::overflow_error("character value overflow");
    }
    return total;
}

std::size_t CharacterCache::size() const {
    std::shared_lock lock(mutex_);
    return memo_.size();
}

void CharacterCache::clear() {
    std::unique_lock lock(mutex_);
    memo_.clear();
}

CharacterCache& CharacterCache::shared() {
    static CharacterCache cache;
    return cache;
}

Integer character(const Partition& mu, const Partition& rho, CharacterCache* cache) {
    if (mu.size() != rho.size()) {
        throw SizeMismatch("character needs |mu| == |rho|: " + mu.to_string() + " vs " + rho.to_string());
    }
    if (cache) return Integer(static_cast<long>(cache->get_or_compute(mu, rho)));
    CharacterCache local;
    return Integer(static_cast<long>(local.get_or_compute(mu, rho)));
}

Integer z_of(const Partition& rho) {
    Integer z = 1;
    std::size_t i = 0;
    while (i < rho.length()) {
        std::size_t j = i;
        while (j < rho.length() && rho[j] == rho[i]) ++j;
        const auto mult = static_cast<unsigned long>(j - i);
        Integer power, fact;
        mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(rho[i]), mult);
        mpz_fac_ui(fact.get_mpz_t(), mult);
        z *= power * fact;
        i = j;
    }
    return z;
}

}  // namespace schurpos
