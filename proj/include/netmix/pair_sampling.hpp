#pragma once

#include <cstdint>
#include <vector>

#include "netmix/graph.hpp"
#include "netmix/rng.hpp"

namespace netmix {

/// Draw `count` distinct pairs uniformly from the pairs on n nodes for
/// which `excluded(key)` is false; `pool` is the number of such pairs.
/// Uses rejection while the request is a small fraction of the pool (the
/// common sparse case, expected cost O(count)), and falls back to
/// enumerating the pool otherwise, so dense corners stay correct.
///
/// Together with a Binomial(pool, q) draw for `count`, this reproduces
/// independent Bernoulli(q) trials over the pool exactly: conditioned on
/// the number of successes, the set of successes is uniform.
template <typename Excluded>
std::vector<PairKey> sample_excluded_pairs(int n, std::int64_t pool, std::int64_t count,
                                           Excluded excluded, Rng& rng,
                                           std::uint64_t* rejections = nullptr) {
    std::vector<PairKey> chosen;
    if (count <= 0)
        return chosen;
    if (count > pool)
        throw validation_error("sample_excluded_pairs: count exceeds pool");
    chosen.reserve(static_cast<std::size_t>(count));

    if (count <= pool / 4 + 1) {
        std::unordered_set<PairKey> taken;
        taken.reserve(static_cast<std::size_t>(count) * 2);
        const auto nodes = static_cast<std::uint64_t>(n);
        while (chosen.size() < static_cast<std::size_t>(count)) {
            const int i = static_cast<int>(rng.next_below(nodes));
            const int j = static_cast<int>(rng.next_below(nodes));
            if (i == j)
                continue;
            const PairKey key = pair_key(i, j);
            if (excluded(key) || !taken.insert(key).second) {
                if (rejections)
                    ++*rejections;
                continue;
            }
            chosen.push_back(key);
        }
        return chosen;
    }

    // Dense request: enumerate the pool and take a uniform subset via
    // partial Fisher-Yates.
    std::vector<PairKey> all;
    all.reserve(static_cast<std::size_t>(pool));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const PairKey key = pair_key(i, j);
            if (!excluded(key))
                all.push_back(key);
        }
    if (static_cast<std::int64_t>(all.size()) != pool)
        throw validation_error("sample_excluded_pairs: pool size disagrees with predicate");
    for (std::int64_t idx = 0; idx < count; ++idx) {
        const std::uint64_t pick =
            idx + rng.next_below(static_cast<std::uint64_t>(all.size() - idx));
        std::swap(all[static_cast<std::size_t>(idx)], all[static_cast<std::size_t>(pick)]);
        chosen.push_back(all[static_cast<std::size_t>(idx)]);
    }
    return chosen;
}

} // namespace netmix
