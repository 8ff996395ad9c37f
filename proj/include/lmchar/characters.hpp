#pragma once

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "partition.hpp"

namespace lmchar {
namespace detail {

// First-column hook lengths (beta numbers), strictly decreasing.
inline std::vector<unsigned> beta_numbers(const Partition& la) {
    const auto& p = la.parts();
    const unsigned len = la.length();
    std::vector<unsigned> beta(len);
    for (unsigned i = 0; i < len; ++i) beta[i] = p[i] + (len - 1 - i);
    return beta;
}

inline Partition partition_from_beta(std::vector<unsigned> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<unsigned>());
    const unsigned len = static_cast<unsigned>(beta.size());
    std::vector<unsigned> parts(len);
    for (unsigned i = 0; i < len; ++i) parts[i] = beta[i] - (len - 1 - i);
    return Partition(std::move(parts));
}

inline long long mn_character(const Partition& la, const Partition& mu);

// Removing a border strip of length k moves one beta number down by k; the
// strip height is the number of beta numbers jumped over.
inline long long mn_character_uncached(const Partition& la, const Partition& mu) {
    if (la.empty()) return 1;  // weights agree, so mu is empty too
    const unsigned k = mu.parts().front();
    const Partition rest(std::vector<unsigned>(mu.parts().begin() + 1, mu.parts().end()));
    const auto beta = beta_numbers(la);
    long long total = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        if (beta[i] < k) continue;
        const unsigned target = beta[i] - k;
        bool occupied = false;
        unsigned crossings = 0;
        for (std::size_t j = 0; j < beta.size(); ++j) {
            if (j == i) continue;
            if (beta[j] == target) {
                occupied = true;
                break;
            }
            if (beta[j] < beta[i] && beta[j] > target) ++crossings;
        }
        if (occupied) continue;
        auto nb = beta;
        nb[i] = target;
        const long long sub = mn_character(partition_from_beta(std::move(nb)), rest);
        total += (crossings % 2 == 0) ? sub : -sub;
    }
    return total;
}

struct CharacterCache {
    std::mutex mutex;
    std::map<std::pair<Partition, Partition>, long long> values;
};

inline CharacterCache& character_cache() {
    static CharacterCache cache;
    return cache;
}

inline long long mn_character(const Partition& la, const Partition& mu) {
    // Cache only the weights the basis conversions hammer on; fills are
    // idempotent, so a racing recompute is harmless.
    if (la.weight() > 16) return mn_character_uncached(la, mu);
    auto& cache = character_cache();
    const auto key = std::make_pair(la, mu);
    {
        std::lock_guard lock(cache.mutex);
        auto it = cache.values.find(key);
        if (it != cache.values.end()) return it->second;
    }
    const long long v = mn_character_uncached(la, mu);
    std::lock_guard lock(cache.mutex);
    cache.values.emplace(key, v);
    return v;
}

}  // namespace detail

// Irreducible symmetric-group character value χ^λ(μ), computed by the
// Murnaghan–Nakayama border-strip recursion.
inline long long character(const Partition& la, const Partition& mu) {
    if (la.weight() != mu.weight()) throw std::invalid_argument("incompatible weights");
    return detail::mn_character(la, mu);
}

}  // namespace lmchar
