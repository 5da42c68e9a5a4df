#include "netmix/suffstats.hpp"

namespace netmix {

namespace {

void rebuild_w(SuffStats& stats, const Assignment& g) {
    const int k = stats.num_modes;
    stats.w11.assign(k, 0);
    stats.w10.assign(k, 0);
    stats.w01.assign(k, 0);
    stats.w00.assign(k, 0);
    for (int t = 0; t < stats.num_samples(); ++t) {
        const int u = g.labels[t];
        stats.w11[u] += stats.y11_at(t, u);
        stats.w10[u] += stats.y10_at(t, u);
        stats.w01[u] += stats.y01_at(t, u);
        stats.w00[u] += stats.y00_at(t, u);
    }
}

} // namespace

SuffStats build_suff_stats(const Population& pop, const Assignment& g,
                           const std::vector<Graph>& modes) {
    const int k = static_cast<int>(modes.size());
    if (k == 0)
        throw validation_error("build_suff_stats: modes must be nonempty");
    if (g.num_modes != k)
        throw validation_error("build_suff_stats: assignment mode count differs from modes");
    if (g.size() != pop.size())
        throw validation_error("build_suff_stats: assignment length differs from population");
    for (const Graph& m : modes)
        if (m.node_count() != pop.n)
            throw validation_error("build_suff_stats: mode node count differs from population");

    SuffStats stats;
    stats.n = pop.n;
    stats.pairs = pair_count(pop.n);
    stats.num_modes = k;
    stats.cluster_sizes = g.cluster_sizes();
    stats.occurrence.assign(k, {});

    const int num_samples = pop.size();
    stats.sample_edges.resize(num_samples);
    for (int t = 0; t < num_samples; ++t) {
        stats.sample_edges[t] = pop.graphs[t].edge_count();
        auto& occ = stats.occurrence[g.labels[t]];
        for (const PairKey key : pop.graphs[t].edge_keys())
            ++occ[key];
    }

    stats.mode_edges.resize(k);
    stats.total_mode_edges = 0;
    for (int u = 0; u < k; ++u) {
        stats.mode_edges[u] = modes[u].edge_count();
        stats.total_mode_edges += stats.mode_edges[u];
    }

    stats.y11.assign(static_cast<std::size_t>(num_samples) * k, 0);
    for (int t = 0; t < num_samples; ++t)
        for (int u = 0; u < k; ++u)
            stats.y11[static_cast<std::size_t>(t) * k + u] =
                edge_intersection_count(pop.graphs[t], modes[u]);

    rebuild_w(stats, g);
    return stats;
}

void update_stats_on_reassign(SuffStats& stats, const Population& pop, Assignment& g,
                              int t, int u_new) {
    if (t < 0 || t >= stats.num_samples())
        throw validation_error("update_stats_on_reassign: sample index out of range");
    if (u_new < 0 || u_new >= stats.num_modes)
        throw validation_error("update_stats_on_reassign: mode index out of range");
    const int u_old = g.labels[t];
    if (u_old == u_new)
        return;

    --stats.cluster_sizes[u_old];
    ++stats.cluster_sizes[u_new];

    auto& occ_old = stats.occurrence[u_old];
    auto& occ_new = stats.occurrence[u_new];
    for (const PairKey key : pop.graphs[t].edge_keys()) {
        auto it = occ_old.find(key);
        if (--it->second == 0)
            occ_old.erase(it);
        ++occ_new[key];
    }

    stats.w11[u_old] -= stats.y11_at(t, u_old);
    stats.w10[u_old] -= stats.y10_at(t, u_old);
    stats.w01[u_old] -= stats.y01_at(t, u_old);
    stats.w00[u_old] -= stats.y00_at(t, u_old);
    stats.w11[u_new] += stats.y11_at(t, u_new);
    stats.w10[u_new] += stats.y10_at(t, u_new);
    stats.w01[u_new] += stats.y01_at(t, u_new);
    stats.w00[u_new] += stats.y00_at(t, u_new);

    g.labels[t] = u_new;
}

void update_stats_on_mode_change(SuffStats& stats, const Population& pop,
                                 const Assignment& g, const std::vector<Graph>& modes) {
    const int k = stats.num_modes;
    if (static_cast<int>(modes.size()) != k)
        throw validation_error("update_stats_on_mode_change: mode count changed");

    stats.total_mode_edges = 0;
    for (int u = 0; u < k; ++u) {
        stats.mode_edges[u] = modes[u].edge_count();
        stats.total_mode_edges += stats.mode_edges[u];
    }
    for (int t = 0; t < stats.num_samples(); ++t)
        for (int u = 0; u < k; ++u)
            stats.y11[static_cast<std::size_t>(t) * k + u] =
                edge_intersection_count(pop.graphs[t], modes[u]);

    rebuild_w(stats, g);
}

} // namespace netmix
