#include "netmix/metrics.hpp"

#include <cmath>
#include <unordered_map>

#include "netmix/matching.hpp"

namespace netmix {

double variation_of_information(const Assignment& g1, const Assignment& g2) {
    const std::size_t count = g1.labels.size();
    if (count == 0)
        throw validation_error("variation_of_information: empty assignments");
    if (g2.labels.size() != count)
        throw validation_error("variation_of_information: length mismatch");

    std::unordered_map<std::uint64_t, std::int64_t> joint;
    std::unordered_map<int, std::int64_t> first, second;
    for (std::size_t t = 0; t < count; ++t) {
        ++joint[(static_cast<std::uint64_t>(static_cast<std::uint32_t>(g1.labels[t])) << 32) |
                static_cast<std::uint32_t>(g2.labels[t])];
        ++first[g1.labels[t]];
        ++second[g2.labels[t]];
    }

    const double total = static_cast<double>(count);
    auto entropy = [&](const auto& histogram) {
        double h = 0.0;
        for (const auto& [label, c] : histogram) {
            const double p = static_cast<double>(c) / total;
            h -= p * std::log(p);
        }
        return h;
    };
    // VI = 2 H(joint) - H(g1) - H(g2)
    const double vi = 2.0 * entropy(joint) - entropy(first) - entropy(second);
    return vi < 1e-12 ? 0.0 : vi;
}

namespace {

/// l1 distance between one soft mode estimate and one binary mode: both
/// vanish off their supports, so only the union of supports contributes.
double soft_mode_l1(const std::unordered_map<PairKey, double>& est, const Graph& truth) {
    double total = 0.0;
    for (const auto& [key, p] : est)
        total += truth.has_edge_key(key) ? 1.0 - p : p;
    for (const PairKey key : truth.edge_keys())
        if (est.find(key) == est.end())
            total += 1.0;
    return total;
}

std::vector<std::vector<double>> mode_cost_matrix(const ModeEstimate& est,
                                                  const std::vector<Graph>& truth) {
    const int k = est.num_modes;
    if (static_cast<int>(truth.size()) != k)
        throw validation_error("mode comparison: mode count mismatch");
    for (const Graph& g : truth)
        if (g.node_count() != est.n)
            throw validation_error("mode comparison: node count mismatch");
    std::vector<std::vector<double>> cost(k, std::vector<double>(k));
    for (int u = 0; u < k; ++u)
        for (int v = 0; v < k; ++v)
            cost[u][v] = soft_mode_l1(est.edge_prob[u], truth[v]);
    return cost;
}

} // namespace

std::vector<int> mode_matching(const ModeEstimate& est, const std::vector<Graph>& truth) {
    return min_cost_permutation(mode_cost_matrix(est, truth));
}

double mode_set_error(const ModeEstimate& est, const std::vector<Graph>& truth) {
    const auto cost = mode_cost_matrix(est, truth);
    const std::vector<int> sigma = min_cost_permutation(cost);
    double total = 0.0;
    for (std::size_t u = 0; u < sigma.size(); ++u)
        total += cost[u][sigma[u]];
    return total;
}

double param_l1(const Params& est, const Params& truth) {
    std::vector<int> identity(est.alpha.size());
    for (std::size_t u = 0; u < identity.size(); ++u)
        identity[u] = static_cast<int>(u);
    return param_l1(est, truth, identity);
}

double param_l1(const Params& est, const Params& truth, std::span<const int> perm) {
    const int k = est.num_modes();
    if (truth.num_modes() != k || static_cast<int>(perm.size()) != k)
        throw validation_error("param_l1: mode count mismatch");
    double total = 0.0;
    for (int u = 0; u < k; ++u) {
        const int v = perm[u];
        total += std::abs(est.alpha[u] - truth.alpha[v]) +
                 std::abs(est.beta[u] - truth.beta[v]) +
                 std::abs(est.pi[u] - truth.pi[v]);
    }
    return total;
}

std::vector<std::vector<std::int64_t>> pairwise_hamming(const Population& pop) {
    const int count = pop.size();
    if (count < 1)
        throw validation_error("pairwise_hamming: population must be nonempty");
    std::vector<std::vector<std::int64_t>> dist(
        count, std::vector<std::int64_t>(static_cast<std::size_t>(count), 0));
    for (int s = 0; s < count; ++s)
        for (int t = s + 1; t < count; ++t) {
            const std::int64_t overlap =
                edge_intersection_count(pop.graphs[s], pop.graphs[t]);
            const std::int64_t d =
                pop.graphs[s].edge_count() + pop.graphs[t].edge_count() - 2 * overlap;
            dist[s][t] = d;
            dist[t][s] = d;
        }
    return dist;
}

} // namespace netmix
