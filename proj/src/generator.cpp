#include "netmix/generator.hpp"

#include <cmath>

#include "netmix/pair_sampling.hpp"

namespace netmix {

namespace {

/// Bernoulli(q) over every pair not in `forbidden`: count first, then a
/// uniform subset, which avoids touching all C(n,2) pairs when q is small.
void add_outside_edges(Graph& out, const Graph& forbidden, double q, Rng& rng) {
    const std::int64_t pool = pair_count(out.node_count()) - forbidden.edge_count();
    const std::int64_t count = rng.binomial(pool, q);
    auto excluded = [&](PairKey key) {
        return forbidden.has_edge_key(key) || out.has_edge_key(key);
    };
    for (const PairKey key : sample_excluded_pairs(out.node_count(), pool, count,
                                                   excluded, rng))
        out.add_edge_key(key);
}

} // namespace

std::vector<Graph> sample_modes_from_prior(int k, int n, double rho, Rng& rng) {
    if (k < 1)
        throw validation_error("sample_modes_from_prior: k must be >= 1");
    if (!(rho >= 0.0 && rho <= 1.0))
        throw validation_error("sample_modes_from_prior: rho must lie in [0,1]");
    std::vector<Graph> modes;
    modes.reserve(k);
    for (int u = 0; u < k; ++u) {
        Graph mode(n);
        const Graph empty(n);
        add_outside_edges(mode, empty, rho, rng);
        modes.push_back(std::move(mode));
    }
    return modes;
}

Assignment sample_assignment(std::span<const double> pi, int count, Rng& rng) {
    const int k = static_cast<int>(pi.size());
    if (k < 1)
        throw validation_error("sample_assignment: pi must be nonempty");
    double sum = 0.0;
    for (const double p : pi) {
        if (!(p >= 0.0))
            throw validation_error("sample_assignment: pi entries must be nonnegative");
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw validation_error("sample_assignment: pi must sum to 1");

    std::vector<int> labels(static_cast<std::size_t>(count));
    for (auto& label : labels) {
        const double u = rng.next_double();
        double cum = 0.0;
        label = k - 1;
        for (int v = 0; v + 1 < k; ++v) {
            cum += pi[v];
            if (u < cum) {
                label = v;
                break;
            }
        }
    }
    return Assignment(k, std::move(labels));
}

Graph sample_network(const Graph& mode, double alpha, double beta, Rng& rng) {
    if (!(alpha >= 0.0 && alpha <= 1.0) || !(beta >= 0.0 && beta <= 1.0))
        throw validation_error("sample_network: rates must lie in [0,1]");
    Graph out(mode.node_count());
    for (const PairKey key : mode.sorted_edge_keys())
        if (rng.next_double() < alpha)
            out.add_edge_key(key);
    add_outside_edges(out, mode, beta, rng);
    return out;
}

std::pair<Population, Assignment> sample_population(const std::vector<Graph>& modes,
                                                    const Params& params, int count,
                                                    Rng& rng) {
    if (modes.empty())
        throw validation_error("sample_population: modes must be nonempty");
    if (params.num_modes() != static_cast<int>(modes.size()))
        throw validation_error("sample_population: params/mode count mismatch");
    const int n = modes.front().node_count();
    for (const Graph& m : modes)
        if (m.node_count() != n)
            throw validation_error("sample_population: modes must share the node count");

    Assignment g = sample_assignment(params.pi, count, rng);
    std::vector<Graph> graphs;
    graphs.reserve(static_cast<std::size_t>(count));
    for (int t = 0; t < count; ++t) {
        const int u = g.labels[t];
        graphs.push_back(sample_network(modes[u], params.alpha[u], params.beta[u], rng));
    }
    return {Population(n, std::move(graphs)), std::move(g)};
}

Benchmark make_benchmark(const BenchmarkConfig& cfg) {
    if (!(cfg.flip_prob >= 0.0 && cfg.flip_prob <= 0.5))
        throw validation_error("make_benchmark: flip probability must lie in [0, 0.5]");
    if (cfg.modes.empty())
        throw validation_error("make_benchmark: modes must be nonempty");
    const int k = static_cast<int>(cfg.modes.size());
    if (static_cast<int>(cfg.pi.size()) != k)
        throw validation_error("make_benchmark: pi length must match mode count");

    Params params;
    params.alpha.assign(k, 1.0 - cfg.flip_prob);
    params.beta.assign(k, cfg.flip_prob);
    params.pi = cfg.pi;
    params.rho = 0.25; // density used for the default planted modes
    params.validate();

    Rng rng(cfg.seed);
    auto [pop, truth] = sample_population(cfg.modes, params, cfg.population_size, rng);
    return Benchmark{std::move(pop), std::move(truth), std::move(params)};
}

} // namespace netmix
