#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "netmix/graph.hpp"
#include "netmix/model.hpp"

namespace netmix {

/// Counts from which every conditional distribution of the model can be
/// evaluated without rescanning the raw data.
///
/// Only the true-positive agreements y11 are stored per (sample, mode);
/// the other three agreement matrices follow from the identities
///   y10 = M_t - y11,   y01 = M*_u - y11,   y00 = C(n,2) - y10 - y01 - y11.
/// The per-cluster occurrence maps are sparse: pairs never observed in a
/// cluster are absent.
struct SuffStats {
    int n = 0;                    // shared node count
    std::int64_t pairs = 0;       // C(n,2)
    int num_modes = 0;            // K

    std::vector<int> cluster_sizes;              // N_u
    std::vector<std::int64_t> sample_edges;      // M_t
    std::vector<std::int64_t> mode_edges;        // M*_u
    std::int64_t total_mode_edges = 0;           // M*

    /// X^u: pair -> number of cluster-u samples containing the pair.
    std::vector<std::unordered_map<PairKey, int>> occurrence;

    /// Y^11, row-major N x K.
    std::vector<std::int64_t> y11;

    /// Aggregate agreement counts per cluster.
    std::vector<std::int64_t> w11, w10, w01, w00;

    std::int64_t y11_at(int t, int u) const { return y11[static_cast<std::size_t>(t) * num_modes + u]; }
    std::int64_t y10_at(int t, int u) const { return sample_edges[t] - y11_at(t, u); }
    std::int64_t y01_at(int t, int u) const { return mode_edges[u] - y11_at(t, u); }
    std::int64_t y00_at(int t, int u) const {
        return pairs - y10_at(t, u) - y01_at(t, u) - y11_at(t, u);
    }

    int num_samples() const { return static_cast<int>(sample_edges.size()); }
};

/// Full scan of (population, assignment, modes) into counts.
SuffStats build_suff_stats(const Population& pop, const Assignment& g,
                           const std::vector<Graph>& modes);

/// Move sample t to cluster u_new, updating stats and g in place. Cost is
/// proportional to the sample's edge count, not C(n,2). No-op when the
/// sample already lives in u_new.
void update_stats_on_reassign(SuffStats& stats, const Population& pop, Assignment& g,
                              int t, int u_new);

/// Recompute everything that depends on the modes (M*_u, M*, y11, W) after
/// the mode set changed. Occurrence maps and cluster sizes are untouched.
void update_stats_on_mode_change(SuffStats& stats, const Population& pop,
                                 const Assignment& g, const std::vector<Graph>& modes);

} // namespace netmix
