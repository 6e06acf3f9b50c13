#pragma once

// Irreducible characters of the symmetric group (Murnaghan-Nakayama) and
// centralizer orders z_rho.

#include "schurpos/expansion.hpp"

#include <shared_mutex>
#include <unordered_map>
#include <utility>

namespace schurpos {

struct PartitionPairHash {
    std::size_t operator()(const std::pair<Partition, Partition>& key) const noexcept {
        PartitionHash h;
        return h(key.first) * 31 + h(key.second);
    }
};

/// Memo table for chi^mu(rho). Safe for concurrent use: lookups and inserts
/// are guarded, and a value computed twice by racing threads is identical.
class CharacterCache {
public:
    CharacterCache() = default;
    CharacterCache(const CharacterCache&) = delete;
    CharacterCache& operator=(const CharacterCache&) = delete;

    std::int64_t get_or_compute(const Partition& mu, const Partition& rho);

    std::size_t size() const;
    void clear();

    /// Process-wide cache, opt-in.
    static CharacterCache& shared();

private:
    std::int64_t compute(const Partition& mu, const Partition& rho);

    mutable std::shared_mutex mutex_;
    std::unordered_map<std::pair<Partition, Partition>, std::int64_t, PartitionPairHash> memo_;
};

/// chi^mu(rho). Throws SizeMismatch unless |mu| == |rho|. With no cache
/// given, a cache scoped to this call is used.
Integer character(const Partition& mu, const Partition& rho, CharacterCache* cache = nullptr);

/// prod_i i^{m_i} m_i! with m_i the multiplicity of i in rho.
Integer z_of(const Partition& rho);

}  // namespace schurpos
