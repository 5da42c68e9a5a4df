#include "netmix/metric_model.hpp"

#include <cmath>

namespace netmix {

double sigma_from_beta(double beta) {
    if (!(beta > 0.0 && beta < 0.5))
        throw validation_error("sigma_from_beta: beta must lie in (0, 1/2)");
    return 1.0 / (std::log1p(-beta) - std::log(beta));
}

double beta_from_sigma(double sigma) {
    if (!(sigma > 0.0))
        throw validation_error("beta_from_sigma: sigma must be positive");
    return 1.0 / (1.0 + std::exp(1.0 / sigma));
}

double log_likelihood_metric(const Graph& sample, const Graph& mode, double sigma) {
    if (sample.node_count() != mode.node_count())
        throw validation_error("log_likelihood_metric: node count mismatch");
    if (!(sigma > 0.0))
        throw validation_error("log_likelihood_metric: sigma must be positive");
    const std::int64_t overlap = edge_intersection_count(sample, mode);
    const std::int64_t hamming = sample.edge_count() + mode.edge_count() - 2 * overlap;
    const double pairs = static_cast<double>(pair_count(sample.node_count()));
    return -static_cast<double>(hamming) / sigma - pairs * std::log1p(std::exp(-1.0 / sigma));
}

Params sample_params_metric(const SuffStats& stats, const Hyperparams& hyper, Rng& rng) {
    const int k = stats.num_modes;
    if (hyper.num_modes() != k)
        throw validation_error("sample_params_metric: hyperparameter count mismatch");
    Params params;
    params.alpha.resize(k);
    params.beta.resize(k);
    params.pi.resize(k);
    for (int u = 0; u < k; ++u) {
        // With alpha = 1 - beta the likelihood is
        // beta^(w10+w01) * (1-beta)^(w00+w11): disagreements vs agreements.
        const double disagree = static_cast<double>(stats.w10[u] + stats.w01[u]);
        const double agree = static_cast<double>(stats.w00[u] + stats.w11[u]);
        const double b = clamp_rate(rng.beta(disagree + hyper.h10[u], agree + hyper.h00[u]));
        params.beta[u] = b;
        params.alpha[u] = 1.0 - b;
    }
    const double mode_slots = static_cast<double>(k) * static_cast<double>(stats.pairs);
    params.rho = clamp_rate(
        rng.beta(static_cast<double>(stats.total_mode_edges) + hyper.a_star,
                 mode_slots - static_cast<double>(stats.total_mode_edges) + hyper.b_star));
    std::vector<double> conc(k);
    for (int u = 0; u < k; ++u)
        conc[u] = static_cast<double>(stats.cluster_sizes[u]) + hyper.gamma[u];
    rng.dirichlet(conc, params.pi);
    double sum = 0.0;
    for (auto& p : params.pi) {
        p = clamp_rate(p);
        sum += p;
    }
    for (auto& p : params.pi)
        p /= sum;
    return params;
}

} // namespace netmix
